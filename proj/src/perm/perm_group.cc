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

#include "nilorb/perm/perm_group.h"

#include <algorithm>
#include <numeric>

#include "nilorb/perm/errors.h"

namespace nilorb {

PermutationGroup PermutationGroup::build(std::vector<Permutation> generators) {
    if (generators.empty()) {
        throw InvalidArgument("build_group needs at least one generator (use the identity for the trivial group)");
    }
    std::size_t degree = generators.front().degree();
    if (degree == 0) {
        throw InvalidArgument("permutation degree must be positive");
    }
    for (const auto& g : generators) {
        if (g.degree() != degree) {
            throw InvalidArgument("generators have mixed degrees");
        }
    }
    PermutationGroup group;
    group.degree_ = degree;
    group.generators_ = std::move(generators);
    group.chain_ = StabilizerChain::build(degree, group.generators_);
    group.order_ = group.chain_.order();
    return group;
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) { return build({Permutation(degree)}); }

PermutationGroup PermutationGroup::with_base_prefix(std::span<const Point> base_prefix) const {
    PermutationGroup group = *this;
    group.chain_ = StabilizerChain::build(degree_, generators_, base_prefix);
    if (group.chain_.order() != order_) {
        throw InternalError("chain rebuild changed the group order");
    }
    return group;
}

bool PermutationGroup::contains_group(const PermutationGroup& other) const {
    if (other.degree() != degree_) {
        return false;
    }
    return std::all_of(other.generators().begin(), other.generators().end(),
                       [&](const Permutation& g) { return contains(g); });
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) const {
    if (order_ > cap) {
        throw CapExceeded("group of order " + order_.str() + " exceeds the enumeration cap " + std::to_string(cap));
    }
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order_));
    chain_.for_each_element([&](const Permutation& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

void PermutationGroup::for_each_element(const std::function<bool(const Permutation&)>& visit,
                                        std::uint64_t cap) const {
    if (order_ > cap) {
        throw CapExceeded("group of order " + order_.str() + " exceeds the enumeration cap " + std::to_string(cap));
    }
    chain_.for_each_element(visit);
}

PermutationGroup PermutationGroup::point_stabilizer(Point point) const {
    if (point >= degree_) {
        throw InvalidArgument("point outside the group's domain");
    }
    Point prefix[] = {point};
    StabilizerChain chain = StabilizerChain::build(degree_, generators_, prefix);
    const auto& levels = chain.levels();
    if (levels.size() < 2 || levels[1].generators.empty()) {
        return trivial(degree_);
    }
    return build(levels[1].generators);
}

std::vector<Point> PermutationGroup::orbit(Point point) const {
    std::vector<bool> seen(degree_, false);
    std::vector<Point> out{point};
    seen[point] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& g : generators_) {
            Point y = g[out[i]];
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Point>> orbit_partition(const PermutationGroup& group) {
    std::vector<bool> seen(group.degree(), false);
    std::vector<std::vector<Point>> orbits;
    for (Point x = 0; x < group.degree(); ++x) {
        if (seen[x]) {
            continue;
        }
        auto orbit = group.orbit(x);
        for (Point y : orbit) {
            seen[y] = true;
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool is_transitive(const PermutationGroup& group) { return group.orbit(0).size() == group.degree(); }

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    Point find(Point x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Keeps the smaller point as the root so block ids are canonical.
    bool unite(Point a, Point b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent[b] = a;
        return true;
    }
    std::vector<Point> parent;
};

}  // namespace

std::vector<Point> minimal_block_system(const PermutationGroup& group, Point point) {
    UnionFind uf(group.degree());
    std::vector<std::pair<Point, Point>> queue;
    if (point != 0) {
        uf.unite(0, point);
        queue.emplace_back(0, point);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [a, b] = queue[i];
        for (const auto& g : group.generators()) {
            Point ra = uf.find(g[a]);
            Point rb = uf.find(g[b]);
            if (ra != rb) {
                uf.unite(ra, rb);
                queue.emplace_back(ra, rb);
            }
        }
    }
    std::vector<Point> blocks(group.degree());
    for (Point x = 0; x < group.degree(); ++x) {
        blocks[x] = uf.find(x);
    }
    return blocks;
}

bool is_primitive(const PermutationGroup& group) {
    if (!is_transitive(group)) {
        return false;
    }
    for (Point x = 1; x < group.degree(); ++x) {
        auto blocks = minimal_block_system(group, x);
        bool all_one = std::all_of(blocks.begin(), blocks.end(), [](Point b) { return b == 0; });
        if (!all_one) {
            return false;
        }
    }
    return true;
}

bool is_abelian(const PermutationGroup& group) {
    const auto& gens = group.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i] * gens[j] != gens[j] * gens[i]) {
                return false;
            }
        }
    }
    return true;
}

PermutationGroup normal_closure(const PermutationGroup& ambient, std::vector<Permutation> generators) {
    // Only generators that enlarge the closure are kept, so at most log2|G|
    // rebuilds happen however many candidates arrive.
    std::vector<Permutation> gens;
    std::optional<PermutationGroup> closure;
    auto offer = [&](Permutation g) {
        if (g.is_identity() || (closure && closure->contains(g))) {
            return;
        }
        gens.push_back(std::move(g));
        closure = PermutationGroup::build(gens);
    };
    for (auto& g : generators) {
        offer(std::move(g));
    }
    if (!closure) {
        return PermutationGroup::trivial(ambient.degree());
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& a : ambient.generators()) {
            offer(conjugate(gens[i], a));
        }
    }
    return *closure;
}

PermutationGroup commutator_subgroup(const PermutationGroup& a, const PermutationGroup& b,
                                     const PermutationGroup& ambient) {
    std::vector<Permutation> comms;
    for (const auto& x : a.generators()) {
        for (const auto& y : b.generators()) {
            Permutation c = commutator(x, y);
            if (!c.is_identity()) {
                comms.push_back(std::move(c));
            }
        }
    }
    return normal_closure(ambient, std::move(comms));
}

std::vector<PermutationGroup> derived_series(const PermutationGroup& group) {
    std::vector<PermutationGroup> series{group};
    while (!series.back().is_trivial()) {
        const PermutationGroup& top = series.back();
        PermutationGroup next = commutator_subgroup(top, top, top);
        if (next.order() == top.order()) {
            break;
        }
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<PermutationGroup> lower_central_series(const PermutationGroup& group) {
    std::vector<PermutationGroup> series{group};
    // Each proper step at least halves the order.
    std::uint64_t bound = ceil_log2(group.order()) + 1;
    while (!series.back().is_trivial()) {
        if (series.size() > bound) {
            throw InternalError("lower central series exceeded log2|G| steps");
        }
        PermutationGroup next = commutator_subgroup(series.back(), group, group);
        if (next.order() == series.back().order()) {
            break;
        }
        series.push_back(std::move(next));
    }
    return series;
}

bool is_solvable(const PermutationGroup& group) { return derived_series(group).back().is_trivial(); }

bool is_nilpotent(const PermutationGroup& group) { return lower_central_series(group).back().is_trivial(); }

GroupFlags classify(const PermutationGroup& group) {
    GroupFlags flags;
    flags.is_transitive = is_transitive(group);
    flags.is_primitive = flags.is_transitive && is_primitive(group);
    flags.is_abelian = is_abelian(group);
    flags.is_nilpotent = flags.is_abelian || is_nilpotent(group);
    flags.is_solvable = flags.is_nilpotent || is_solvable(group);
    if (!group.is_trivial()) {
        if (group.order() <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
            flags.smallest_prime_divisor = factorize(to_u64(group.order())).front().first;
        } else {
            // Orders beyond 64 bits only arise for huge groups; trial division
            // on small primes is enough since every prime divisor is <= degree.
            for (std::uint64_t p = 2; p <= group.degree(); ++p) {
                if (is_prime(p) && group.order() % p == 0) {
                    flags.smallest_prime_divisor = p;
                    break;
                }
            }
        }
    }
    return flags;
}

std::map<std::uint64_t, std::uint64_t> order_profile(const PermutationGroup& group, std::uint64_t cap) {
    std::map<std::uint64_t, std::uint64_t> profile;
    group.for_each_element(
        [&](const Permutation& g) {
            ++profile[cycle_stats(g).element_order];
            return true;
        },
        cap);
    return profile;
}

namespace {

std::vector<std::size_t> orbit_sizes(const PermutationGroup& group) {
    std::vector<std::size_t> sizes;
    for (const auto& orbit : orbit_partition(group)) {
        sizes.push_back(orbit.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

ConjugacyResult are_conjugate_subgroups(const PermutationGroup& a, const PermutationGroup& b,
                                        const PermutationGroup& ambient, std::uint64_t cap) {
    if (!ambient.contains_group(a) || !ambient.contains_group(b)) {
        throw InvalidArgument("are_conjugate_subgroups: subgroups must lie in the ambient group");
    }
    if (a.order() != b.order()) {
        return {};
    }
    if (a.contains_group(b)) {
        return {true, Permutation(ambient.degree())};
    }
    if (orbit_sizes(a) != orbit_sizes(b)) {
        return {};
    }
    if (a.order() <= 100'000 && order_profile(a) != order_profile(b)) {
        return {};
    }
    if (ambient.order() > cap) {
        throw CapExceeded("ambient group of order " + ambient.order().str() + " is too large for conjugacy search");
    }
    ConjugacyResult result;
    ambient.for_each_element(
        [&](const Permutation& x) {
            for (const auto& g : a.generators()) {
                if (!b.contains(conjugate(g, x))) {
                    return true;
                }
            }
            result.conjugate = true;
            result.witness = x;
            return false;
        },
        cap);
    return result;
}

}  // namespace nilorb
