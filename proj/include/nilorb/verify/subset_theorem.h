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

#ifndef NILORB_VERIFY_SUBSET_THEOREM_H
#define NILORB_VERIFY_SUBSET_THEOREM_H

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nilorb/perm/perm_group.h"
#include "nilorb/verify/options.h"
#include "nilorb/verify/report.h"
#include "nilorb/zoo/catalog.h"

namespace nilorb {

/// Point subsets of a degree <= 64 group, as bit masks (bit i = point i).
using SubsetMask = std::uint64_t;

/// Sum over g != 1 of 2^n(g): the number of pairs (g, subset) with g != 1
/// stabilizing the subset. Throws InvalidArgument above degree 64.
BigInt stabilized_subset_count(const PermutationGroup& h);

/// ceil(log2 |H|).
std::uint64_t subset_k_bound(const BigInt& order);

/// index^2 * 2^(m-1) >= |H|, as index^2 * 2^m >= 2 |H|.
bool delta_condition(std::uint64_t index, std::size_t m, const BigInt& order);

struct SubsetProblem {
    std::size_t omega_size = 0;
    SubsetMask lambda = 0;

    std::size_t m() const;
};

struct DeltaResult {
    SubsetMask delta = 0;
    std::uint64_t index = 1;
    bool satisfied = false;
    /// False for the greedy fallback, whose index is only a lower bound on the
    /// best achievable.
    bool exhaustive = true;
};

/// Exhaustive search is used up to this degree.
inline constexpr std::size_t kExhaustiveDeltaDegree = 24;

/// Set stabilizer orders of every subset of the points, with the best
/// subset below each mask: largest index, then fewest points, then the
/// smallest mask.
class SetStabilizerTable {
  public:
    /// Throws InvalidArgument above kExhaustiveDeltaDegree.
    explicit SetStabilizerTable(const PermutationGroup& h);

    std::size_t degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t stabilizer_order(SubsetMask delta) const { return stab_[delta]; }
    /// Best Delta inside Omega - lambda.
    DeltaResult best_outside(SubsetMask lambda) const;

  private:
    std::size_t degree_ = 0;
    std::uint64_t order_ = 1;
    std::vector<std::uint32_t> stab_;
    std::vector<std::uint64_t> best_;
};

/// Delta inside Omega - lambda maximizing |H : stab_H(Delta)|. Exhaustive up
/// to kExhaustiveDeltaDegree, greedy above.
DeltaResult find_delta(const PermutationGroup& h, const SubsetProblem& problem);

/// |H|^3 (2^c)^2 <= 2^(2n) with c the largest cycle count of a non-identity
/// element.
bool inequality_one(const BigInt& order, std::size_t c, std::uint64_t n);
/// Same with the crude bound c = (p+1) n / (2p), cleared of denominators.
bool inequality_one_crude(const BigInt& order, std::uint64_t n, std::uint32_t p);

struct SubsetTheoremResult {
    std::uint64_t classes = 0;
    std::uint64_t lambdas = 0;
    std::uint64_t failures = 0;
    /// Classes settled through inequality_one instead of a search.
    std::uint64_t by_inequality = 0;
    /// Classes that neither route settled.
    std::uint64_t unresolved = 0;
    nlohmann::json first_failure;
    /// Pair with the least slack index^2 2^m / (2|H|).
    nlohmann::json hardest;
    std::uint64_t hardest_num = 0;
    std::uint64_t hardest_den = 0;
    BigInt max_stabilized_subsets = 0;
};

SubsetTheoremResult check_subset_theorem(const CatalogEntry& entry, const VerifyOptions& options = {});

/// One-row report for a single entry.
VerificationReport verify_subset_theorem(const CatalogEntry& entry, const VerifyOptions& options = {});

VerificationReport subset_theorem_report(const Catalog& catalog, std::span<const std::size_t> degrees,
                                         const VerifyOptions& options = {});

/// Scans n^(beta+1)/2 <= 2^(n/6) for 2 <= n <= max_n, n^3 <= 2^(n-1) for
/// primes, and inequality_one_crude at each degree of `largest`.
VerificationReport verify_global_inequalities(const std::map<std::size_t, std::uint64_t>& largest,
                                              std::uint64_t max_n = 4096, const BoundConstants& bounds = {});

}  // namespace nilorb

#endif
