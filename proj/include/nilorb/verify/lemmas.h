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

#ifndef NILORB_VERIFY_LEMMAS_H
#define NILORB_VERIFY_LEMMAS_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilorb/subgroups/subgroups.h"
#include "nilorb/verify/options.h"
#include "nilorb/verify/report.h"
#include "nilorb/zoo/catalog.h"

namespace nilorb {

/// Cycle bounds for one element g != 1 of a group of degree n = p^d.
struct CycleBoundCheck {
    std::size_t cycles = 0;
    std::size_t fixed = 0;
    std::uint64_t order = 1;
    /// 2 n(g) <= n + s(g)
    bool half_fixed = true;
    /// o p n(g) <= (p + o - 1) n
    bool order_bound = true;
    /// 4 n(g) <= 3 n
    bool three_quarters = true;
    /// s(g) divides n / p; vacuous without fixed points.
    bool fixed_divides = true;
    /// (n + s) o p <= 2 (p + o - 1) n, the link between the first two bounds.
    bool middle_link = true;

    bool holds() const { return half_fixed && order_bound && three_quarters && fixed_divides; }
};

/// Fills report.universe and report.completeness from the catalog metadata of
/// the requested degrees.
void describe_catalog_universe(VerificationReport& report, const Catalog& catalog,
                               std::span<const std::size_t> degrees);

CycleBoundCheck check_cycle_bounds(const Permutation& g, std::uint64_t n, std::uint32_t p);

struct Lemma24Result {
    std::uint64_t elements = 0;
    std::uint64_t failures = 0;
    std::uint64_t divisibility_checked = 0;
    std::uint64_t middle_link_violations = 0;
    /// Largest n(g) seen, with the element.
    std::size_t max_cycles = 0;
    nlohmann::json max_cycles_element;
    nlohmann::json first_failure;
    nlohmann::json middle_link_example;
};

/// Every non-identity element of the entry.
Lemma24Result check_lemma24(const CatalogEntry& entry, const Deadline& deadline = {});

/// One-row report for a single entry.
VerificationReport verify_lemma24(const CatalogEntry& entry);

/// Rows per degree over the catalog.
VerificationReport lemma24_report(const Catalog& catalog, std::span<const std::size_t> degrees,
                                  const VerifyOptions& options = {});

/// Same cycle bounds over a transitive group that need not be primitive; p is
/// the smallest prime dividing the degree.
Lemma24Result check_cycle_bounds_transitive(const PermutationGroup& group, const Deadline& deadline = {});

struct NilpotentWitness {
    std::size_t entry = 0;
    std::uint64_t order = 0;
    std::vector<Permutation> generators;
};

struct LargestNilpotentOrder {
    std::size_t degree = 0;
    std::uint64_t order = 0;
    /// Every class attaining the maximum, over all entries.
    std::vector<NilpotentWitness> witnesses;
    /// Nilpotent classes per entry.
    std::vector<SubgroupList> classes;
};

/// Largest nilpotent subgroup order over all entries of the degree. Throws
/// InvalidArgument when the catalog has no entries there.
LargestNilpotentOrder largest_nilpotent_order(std::size_t n, const Catalog& catalog,
                                              const VerifyOptions& options = {});

/// Largest nilpotent orders over all solvable primitive groups of each
/// degree, as computed in the reference tabulation.
const std::map<std::size_t, std::uint64_t>& expected_largest_nilpotent();

nlohmann::json witness_json(const NilpotentWitness& w);

/// Table of largest orders with comparison against the expected values.
VerificationReport table1_report(const Catalog& catalog, std::span<const std::size_t> degrees,
                                 const VerifyOptions& options = {});

/// |H| <= 2^n exactly and |H| <= n^(beta+1)/2 by intervals, for every
/// nilpotent class of every entry.
VerificationReport verify_nilpotent_order_bounds(const Catalog& catalog, std::span<const std::size_t> degrees,
                                                 const VerifyOptions& options = {});

}  // namespace nilorb

#endif
