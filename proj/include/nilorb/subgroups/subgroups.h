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

#ifndef NILORB_SUBGROUPS_SUBGROUPS_H
#define NILORB_SUBGROUPS_SUBGROUPS_H

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "nilorb/perm/element_table.h"
#include "nilorb/perm/parallel.h"

namespace nilorb {

/// Order-independent 128-bit hash of an element set.
struct Fingerprint {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint_of(const ElementTable& table, std::span<const ElementId> elements);

/// One conjugacy class of subgroups, stored through a representative.
struct SubgroupClass {
    std::vector<ElementId> generators;
    /// Sorted element ids of the representative.
    std::vector<ElementId> elements;
    std::uint64_t order = 1;
    /// Number of conjugates, |G : N_G(U)|.
    std::uint64_t class_size = 1;
    std::uint64_t normalizer_order = 0;
    bool nilpotent = true;
    /// Set in nilpotent enumerations: no nilpotent subgroup properly contains
    /// a conjugate of this one.
    bool maximal_nilpotent = false;
};

struct SubgroupList {
    std::shared_ptr<const ElementTable> table;
    std::vector<SubgroupClass> classes;
    /// False when the ambient group is not solvable: cyclic extension then
    /// only reaches the solvable subgroups.
    bool complete = true;

    std::size_t size() const { return classes.size(); }
    std::vector<Permutation> generators(std::size_t i) const;
    PermutationGroup group(std::size_t i) const;
};

inline constexpr std::uint64_t kDefaultSubgroupCap = 25'000;
inline constexpr std::uint64_t kDefaultNilpotentCap = 1'000'000;

struct EnumerationOptions {
    bool nilpotent_only = false;
    /// Ambient order limit; zero selects the default for the mode.
    std::uint64_t max_order = 0;
    unsigned jobs = 1;
    Deadline deadline;
};

/// Solvable subgroups of G up to conjugacy by cyclic extension, sorted by
/// order then discovery. For solvable G this is every subgroup.
SubgroupList subgroups_up_to_conjugacy(const PermutationGroup& group, const EnumerationOptions& options = {});
SubgroupList subgroups_up_to_conjugacy(std::shared_ptr<const ElementTable> table,
                                       const EnumerationOptions& options = {});

/// Nilpotent subgroups up to conjugacy with maximality flags.
SubgroupList nilpotent_subgroups(const PermutationGroup& group, EnumerationOptions options = {});
SubgroupList nilpotent_subgroups(std::shared_ptr<const ElementTable> table, EnumerationOptions options = {});

/// Nilpotency of an element set closed under multiplication: for each prime
/// p, the number of p-elements equals the p-part of the order.
bool is_nilpotent_subset(const ElementTable& table, std::span<const ElementId> elements);

/// |N_G(U)| elements, sorted. `in_u` marks the elements of U.
std::vector<ElementId> normalizer(const ElementTable& table, std::span<const ElementId> u_generators,
                                  const std::vector<char>& in_u);

struct LargestNilpotent {
    std::uint64_t order = 0;
    /// Every class attaining the order.
    std::vector<std::size_t> witnesses;
    SubgroupList list;
};

LargestNilpotent largest_nilpotent(const PermutationGroup& group, const EnumerationOptions& options = {});

}  // namespace nilorb

#endif
