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

#ifndef NILORB_PERM_PERM_GROUP_H
#define NILORB_PERM_PERM_GROUP_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nilorb/perm/bigint.h"
#include "nilorb/perm/permutation.h"
#include "nilorb/perm/stabilizer_chain.h"

namespace nilorb {

/// Default cap on explicit element enumeration.
inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;

/// A permutation group given by generators. The stabilizer chain is computed
/// at construction, so a PermutationGroup is immutable and safe to share
/// between threads.
class PermutationGroup {
  public:
    /// Requires a non-empty generator list of uniform degree. The trivial group
    /// is built from an identity generator.
    static PermutationGroup build(std::vector<Permutation> generators);

    static PermutationGroup trivial(std::size_t degree);

    /// Same group, chain rebuilt so that `base_prefix` leads the base.
    PermutationGroup with_base_prefix(std::span<const Point> base_prefix) const;

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const StabilizerChain& chain() const { return chain_; }
    const BigInt& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    bool contains(const Permutation& g) const { return chain_.contains(g); }

    /// True if every generator of `other` lies in this group.
    bool contains_group(const PermutationGroup& other) const;

    /// All elements in chain order. Throws CapExceeded above `cap`.
    std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const;

    void for_each_element(const std::function<bool(const Permutation&)>& visit,
                          std::uint64_t cap = kDefaultElementCap) const;

    /// Stabilizer of a point, computed from a chain whose first base point is
    /// `point`.
    PermutationGroup point_stabilizer(Point point) const;

    /// Orbit of a single point, sorted.
    std::vector<Point> orbit(Point point) const;

  private:
    PermutationGroup() = default;

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    StabilizerChain chain_;
    BigInt order_ = 1;
};

/// Orbits of the group on {0, ..., degree-1}; each orbit sorted, orbits
/// ordered by their smallest point.
std::vector<std::vector<Point>> orbit_partition(const PermutationGroup& group);

struct GroupFlags {
    bool is_transitive = false;
    bool is_primitive = false;
    bool is_solvable = false;
    bool is_nilpotent = false;
    bool is_abelian = false;
    /// Smallest prime dividing the order; empty for the trivial group.
    std::optional<std::uint64_t> smallest_prime_divisor;
};

GroupFlags classify(const PermutationGroup& group);

bool is_transitive(const PermutationGroup& group);

/// Transitive with no block system other than the trivial ones.
bool is_primitive(const PermutationGroup& group);

/// Finest block system containing {0, point} in one block, as a block id per
/// point (ids are the smallest point of each block).
std::vector<Point> minimal_block_system(const PermutationGroup& group, Point point);

bool is_abelian(const PermutationGroup& group);
bool is_solvable(const PermutationGroup& group);
bool is_nilpotent(const PermutationGroup& group);

/// Smallest subgroup of `ambient` that contains `generators` and is normalized
/// by `ambient`.
PermutationGroup normal_closure(const PermutationGroup& ambient, std::vector<Permutation> generators);

/// [A, B] for subgroups normalized by a common overgroup: the normal closure
/// in `ambient` of commutators of generators.
PermutationGroup commutator_subgroup(const PermutationGroup& a, const PermutationGroup& b,
                                     const PermutationGroup& ambient);

std::vector<PermutationGroup> derived_series(const PermutationGroup& group);
std::vector<PermutationGroup> lower_central_series(const PermutationGroup& group);

/// Number of elements of each element order.
std::map<std::uint64_t, std::uint64_t> order_profile(const PermutationGroup& group,
                                                     std::uint64_t cap = kDefaultElementCap);

struct ConjugacyResult {
    bool conjugate = false;
    /// x with A^x = B when conjugate.
    std::optional<Permutation> witness;
};

/// Decides whether some element of `ambient` conjugates A onto B. Both must
/// lie in `ambient`. Cheap invariants are compared first; the search then walks
/// the ambient group element by element. Throws CapExceeded above `cap`.
ConjugacyResult are_conjugate_subgroups(const PermutationGroup& a, const PermutationGroup& b,
                                        const PermutationGroup& ambient,
                                        std::uint64_t cap = kDefaultElementCap);

}  // namespace nilorb

#endif
