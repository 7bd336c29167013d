// Copyright 2026 The nilorb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILORB_ZOO_CATALOG_H
#define NILORB_ZOO_CATALOG_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilorb/linear/linear_module.h"
#include "nilorb/perm/parallel.h"
#include "nilorb/perm/perm_group.h"

namespace nilorb {

/// A subgroup of GL(d,p) given by matrix generators.
struct MatrixGroup {
    std::uint32_t p = 2;
    std::size_t dim = 1;
    std::vector<Matrix> generators;
    BigInt order = 1;
    std::string route;
};

struct RouteOptions {
    /// GL(d,p) of at most this order is searched exhaustively.
    std::uint64_t exhaustive_threshold = 25'000;
    unsigned jobs = 1;
    Deadline deadline;
};

struct IrreducibleList {
    std::vector<MatrixGroup> groups;
    /// True when the routes provably reach every class.
    bool complete = false;
    std::vector<std::string> routes;
};

/// Irreducible solvable subgroups of GL(d,p) up to conjugacy, from the route
/// table: subgroups of the cyclic GL(1,p); exhaustive cyclic extension in
/// GL(d,p) below the threshold; otherwise the semilinear group ΓL(1,p^d)
/// plus wreath products of maximal solvable groups of smaller dimension.
IrreducibleList irreducible_solvable_subgroups(std::uint32_t p, std::size_t d, const RouteOptions& options = {});

struct CatalogEntry {
    std::size_t degree = 0;
    std::uint32_t prime = 2;
    std::size_t dimension = 1;
    PermutationGroup group = PermutationGroup::trivial(1);
    /// Matrix generators of the point stabilizer of 0.
    std::vector<Matrix> stabilizer;
    BigInt order = 1;
    GroupFlags flags;
    std::string route;

    const std::vector<Permutation>& generators() const { return group.generators(); }
    /// |H| for the point stabilizer H = G_0.
    BigInt stabilizer_order() const { return order / degree; }
};

struct DegreeInfo {
    std::size_t degree = 0;
    int tier = 1;
    bool complete = false;
    std::vector<std::string> routes;
    std::size_t entry_count = 0;
};

struct Catalog {
    std::map<std::size_t, std::vector<CatalogEntry>> entries;
    std::map<std::size_t, DegreeInfo> info;

    /// Throws InvalidArgument when the degree is absent.
    const std::vector<CatalogEntry>& at(std::size_t degree) const;
    bool contains(std::size_t degree) const { return entries.contains(degree); }
    std::size_t size() const;
};

/// (p, d) with n = p^d, or nothing for non-prime-powers.
std::optional<std::pair<std::uint32_t, std::size_t>> prime_power(std::uint64_t n);

inline constexpr std::size_t kMaxCatalogDegree = 128;

/// Tier 1: {2,3,4,5,7,8,9,11,16,25,27,32} and every prime; tier 2 otherwise.
int degree_tier(std::size_t n);

/// Throws InvalidArgument for degrees that are not prime powers or exceed
/// kMaxCatalogDegree.
void check_catalog_degree(std::size_t n);

/// The affine groups V x| H for H from irreducible_solvable_subgroups, sorted
/// by order then generator text. Every entry is re-verified primitive and
/// solvable.
std::vector<CatalogEntry> solvable_primitive_catalog(std::size_t n, const RouteOptions& options = {},
                                                     DegreeInfo* info = nullptr);

Catalog build_catalog(std::span<const std::size_t> degrees, const RouteOptions& options = {});

CatalogEntry make_catalog_entry(std::uint32_t p, std::size_t d, const MatrixGroup& h);

/// Invariant-based fingerprint used to screen entries for permutation
/// isomorphism before an explicit conjugacy search.
std::string entry_fingerprint(const CatalogEntry& entry, std::uint64_t profile_cap = 100'000);

/// JSON-lines persistence, schema version 1. Loading re-derives every order
/// from the generators and rejects mismatches.
inline constexpr int kCatalogSchemaVersion = 1;
void catalog_store(const Catalog& catalog, const std::filesystem::path& path);
Catalog catalog_load(const std::filesystem::path& path);
std::string catalog_to_string(const Catalog& catalog);
Catalog catalog_from_string(const std::string& text);

}  // namespace nilorb

#endif
