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

#include "nilorb/perm/stabilizer_chain.h"

#include <algorithm>

#include "nilorb/perm/errors.h"

namespace nilorb {

namespace {

ChainLevel make_level(std::size_t degree, Point base_point) {
    ChainLevel level;
    level.base_point = base_point;
    level.slot.assign(degree, -1);
    level.slot[base_point] = 0;
    level.orbit.push_back(base_point);
    level.transversal.emplace_back(degree);
    level.transversal_inverse.emplace_back(degree);
    return level;
}

bool fixes_all(const Permutation& g, std::span<const Point> points) {
    return std::all_of(points.begin(), points.end(), [&](Point b) { return g[b] == b; });
}

}  // namespace

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix) {
    StabilizerChain chain;
    chain.degree_ = degree;

    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        if (g.degree() != degree) {
            throw InvalidArgument("generator degree " + std::to_string(g.degree()) + " does not match group degree " +
                                  std::to_string(degree));
        }
        if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
            gens.push_back(g);
        }
    }

    std::vector<Point> base;
    for (Point b : base_prefix) {
        if (b >= degree || std::find(base.begin(), base.end(), b) != base.end()) {
            throw InvalidArgument("invalid base prefix");
        }
        base.push_back(b);
    }
    for (const auto& g : gens) {
        if (fixes_all(g, base)) {
            base.push_back(*g.smallest_moved_point());
        }
    }

    for (std::size_t i = 0; i < base.size(); ++i) {
        chain.levels_.push_back(make_level(degree, base[i]));
        std::span<const Point> earlier(base.data(), i);
        for (const auto& g : gens) {
            if (fixes_all(g, earlier)) {
                chain.levels_[i].generators.push_back(g);
            }
        }
        chain.extend_orbit(i, 0);
    }
    chain.schreier_sims();

    // Trailing prefix levels with trivial orbits carry no information, but the
    // caller asked for them (e.g. a point stabilizer with that base point), so
    // they are kept.
    return chain;
}

void StabilizerChain::extend_orbit(std::size_t level_index, std::size_t first_new_generator) {
    ChainLevel& level = levels_[level_index];
    auto try_add = [&](std::size_t pos, std::size_t gen) {
        Point y = level.generators[gen][level.orbit[pos]];
        if (level.slot[y] >= 0) {
            return;
        }
        level.slot[y] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(y);
        Permutation rep = level.transversal[pos] * level.generators[gen];
        level.transversal_inverse.push_back(rep.inverse());
        level.transversal.push_back(std::move(rep));
    };
    std::size_t old_size = level.orbit.size();
    for (std::size_t pos = 0; pos < old_size; ++pos) {
        for (std::size_t gen = first_new_generator; gen < level.generators.size(); ++gen) {
            try_add(pos, gen);
        }
    }
    for (std::size_t pos = old_size; pos < level.orbit.size(); ++pos) {
        for (std::size_t gen = 0; gen < level.generators.size(); ++gen) {
            try_add(pos, gen);
        }
    }
}

void StabilizerChain::schreier_sims() {
    // progress[l][g]: Schreier generators for (orbit[0..progress), generator g)
    // at level l have already been sifted.
    std::vector<std::vector<std::size_t>> progress;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
        progress.resize(levels_.size());
        auto& done = progress[i];
        done.resize(levels_[i].generators.size(), 0);

        bool restarted = false;
        for (std::size_t g = 0; g < levels_[i].generators.size() && !restarted; ++g) {
            while (done[g] < levels_[i].orbit.size()) {
                const ChainLevel& level = levels_[i];
                std::size_t pos = done[g]++;
                Point y = level.generators[g][level.orbit[pos]];
                Permutation h = level.transversal[pos] * level.generators[g] * level.transversal_inverse[level.slot[y]];
                if (h.is_identity()) {
                    continue;
                }
                auto [residue, stop] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
                if (residue.is_identity()) {
                    continue;
                }
                if (stop == levels_.size()) {
                    levels_.push_back(make_level(degree_, *residue.smallest_moved_point()));
                }
                for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
                    levels_[l].generators.push_back(residue);
                    extend_orbit(l, levels_[l].generators.size() - 1);
                }
                i = static_cast<std::ptrdiff_t>(stop);
                restarted = true;
                break;
            }
        }
        if (!restarted) {
            --i;
        }
    }
}

std::vector<Point> StabilizerChain::base() const {
    std::vector<Point> out;
    out.reserve(levels_.size());
    for (const auto& level : levels_) {
        out.push_back(level.base_point);
    }
    return out;
}

BigInt StabilizerChain::order() const {
    BigInt order = 1;
    for (const auto& level : levels_) {
        order *= level.orbit.size();
    }
    return order;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from_level) const {
    for (std::size_t l = from_level; l < levels_.size(); ++l) {
        const ChainLevel& level = levels_[l];
        std::int32_t s = level.slot[g[level.base_point]];
        if (s < 0) {
            return {std::move(g), l};
        }
        if (s > 0) {
            g = g * level.transversal_inverse[s];
        }
    }
    return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
    if (g.degree() != degree_) {
        return false;
    }
    return sift(g).first.is_identity();
}

void StabilizerChain::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
    if (levels_.empty()) {
        visit(Permutation(degree_));
        return;
    }
    bool stopped = false;
    std::function<void(std::ptrdiff_t, const Permutation&)> walk = [&](std::ptrdiff_t l, const Permutation& acc) {
        if (stopped) {
            return;
        }
        if (l < 0) {
            stopped = !visit(acc);
            return;
        }
        for (const auto& t : levels_[l].transversal) {
            walk(l - 1, acc * t);
            if (stopped) {
                return;
            }
        }
    };
    walk(static_cast<std::ptrdiff_t>(levels_.size()) - 1, Permutation(degree_));
}

}  // namespace nilorb
