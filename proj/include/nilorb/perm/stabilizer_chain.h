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

#ifndef NILORB_PERM_STABILIZER_CHAIN_H
#define NILORB_PERM_STABILIZER_CHAIN_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nilorb/perm/bigint.h"
#include "nilorb/perm/permutation.h"

namespace nilorb {

/// One level of a stabilizer chain: the strong generators fixing all earlier
/// base points, the orbit of this level's base point under them, and a
/// transversal mapping the base point to each orbit point.
struct ChainLevel {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    /// slot[x] is the index into orbit/transversal for x, or -1.
    std::vector<std::int32_t> slot;
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inverse;
};

/// Base and strong generating set computed by deterministic Schreier-Sims.
///
/// The base starts with the requested prefix and is then extended by the
/// smallest point moved by the first residue that needs a new level, so the
/// same generators always give the same chain.
class StabilizerChain {
  public:
    StabilizerChain() = default;

    static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix = {});

    std::size_t degree() const { return degree_; }
    const std::vector<ChainLevel>& levels() const { return levels_; }
    std::vector<Point> base() const;
    BigInt order() const;

    /// Sifts g through the chain. Returns the residue and the level at which
    /// sifting stopped (levels().size() when it went all the way through).
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level = 0) const;

    bool contains(const Permutation& g) const;

    /// Visits every group element exactly once, in a deterministic order.
    /// Returning false from the visitor stops the walk.
    void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

  private:
    void extend_orbit(std::size_t level, std::size_t first_new_generator);
    void schreier_sims();

    std::size_t degree_ = 0;
    std::vector<ChainLevel> levels_;
};

}  // namespace nilorb

#endif
