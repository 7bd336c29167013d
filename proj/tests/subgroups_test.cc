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

#include <gtest/gtest.h>

#include <set>

#include "nilorb/linear/field.h"
#include "nilorb/linear/linear_module.h"
#include "nilorb/perm/errors.h"
#include "nilorb/subgroups/subgroups.h"

using namespace nilorb;

namespace {

using ElementSet = std::set<std::vector<Point>>;

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

PermutationGroup s4() { return PermutationGroup::build({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}); }

std::vector<Point> key(const Permutation& g) { return {g.images().begin(), g.images().end()}; }

ElementSet close(const std::vector<Permutation>& gens, std::size_t degree) {
    ElementSet out{key(Permutation(degree))};
    std::vector<Permutation> queue{Permutation(degree)};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& g : gens) {
            Permutation h = queue[i] * g;
            if (out.insert(key(h)).second) queue.push_back(h);
        }
    return out;
}

// Oracle: all subgroups generated by at most three elements, then grouped
// into conjugacy classes by explicit conjugation.
std::vector<std::vector<ElementSet>> subgroup_classes_oracle(const PermutationGroup& g) {
    auto elems = g.elements();
    std::set<ElementSet> subgroups;
    std::size_t n = elems.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c) subgroups.insert(close({elems[a], elems[b], elems[c]}, g.degree()));
    std::vector<std::vector<ElementSet>> classes;
    std::set<ElementSet> placed;
    for (const auto& s : subgroups) {
        if (placed.contains(s)) continue;
        std::set<ElementSet> cls;
        for (const auto& x : elems) {
            ElementSet conj;
            for (const auto& img : s) conj.insert(key(conjugate(Permutation::from_images(img), x)));
            cls.insert(conj);
        }
        placed.insert(cls.begin(), cls.end());
        classes.emplace_back(cls.begin(), cls.end());
    }
    return classes;
}

bool sylow_normal_oracle(const PermutationGroup& g) {
    auto elements = g.elements();
    std::uint64_t n = elements.size();
    for (auto [p, e] : factorize(n)) {
        std::uint64_t pp = 1;
        for (std::uint32_t i = 0; i < e; ++i) pp *= p;
        std::uint64_t count = 0;
        for (const auto& x : elements) {
            std::uint64_t o = cycle_stats(x).element_order;
            while (o % p == 0) o /= p;
            count += o == 1;
        }
        if (count != pp) return false;
    }
    return true;
}

PermutationGroup affine_gamma(std::uint32_t p, std::uint32_t k) {
    GaloisField f(make_field(p, k));
    std::vector<Point> shift(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) shift[x] = f.add(x, 1);
    auto g = make_gamma(f);
    std::vector<Permutation> gens{Permutation::from_images(shift)};
    for (const auto& s : g.gamma.generators()) gens.push_back(s);
    return PermutationGroup::build(gens);
}

}  // namespace

TEST(Subgroups, CyclicAndTrivial) {
    auto c6 = subgroups_up_to_conjugacy(PermutationGroup::build({cyc(6, {{0, 1, 2, 3, 4, 5}})}));
    ASSERT_EQ(c6.size(), 4u);
    std::vector<std::uint64_t> orders;
    for (const auto& c : c6.classes) orders.push_back(c.order);
    EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 2, 3, 6}));
    EXPECT_EQ(subgroups_up_to_conjugacy(PermutationGroup::trivial(3)).size(), 1u);
}

TEST(Subgroups, S4MatchesGeneratorSubsetOracle) {
    PermutationGroup g = s4();
    auto list = subgroups_up_to_conjugacy(g);
    auto oracle = subgroup_classes_oracle(g);
    EXPECT_EQ(list.size(), 11u);
    EXPECT_EQ(oracle.size(), 11u);
    EXPECT_TRUE(list.complete);
    std::multiset<std::pair<std::uint64_t, std::uint64_t>> got, want;
    for (const auto& c : list.classes) got.insert({c.order, c.class_size});
    for (const auto& c : oracle) want.insert({c.front().size(), c.size()});
    EXPECT_EQ(got, want);
    for (std::size_t i = 0; i < list.size(); ++i) {
        PermutationGroup h = list.group(i);
        EXPECT_EQ(h.order(), list.classes[i].order);
        EXPECT_TRUE(g.contains_group(h));
    }
}

TEST(Subgroups, SmallGroupsMatchOracle) {
    std::vector<PermutationGroup> groups{
        PermutationGroup::build({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})}),
        PermutationGroup::build({cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}}), cyc(6, {{3, 4, 5}})}),
        PermutationGroup::build({cyc(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cyc(8, {{0, 4}, {1, 7}, {2, 6}, {3, 5}})}),
    };
    for (const auto& g : groups) {
        auto list = subgroups_up_to_conjugacy(g);
        auto oracle = subgroup_classes_oracle(g);
        EXPECT_EQ(list.size(), oracle.size());
        std::uint64_t total = 0, oracle_total = 0;
        for (const auto& c : list.classes) total += c.class_size;
        for (const auto& c : oracle) oracle_total += c.size();
        EXPECT_EQ(total, oracle_total);
    }
}

TEST(Subgroups, NonSolvableAmbientIsFlagged) {
    PermutationGroup a5 = PermutationGroup::build({cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
    auto list = subgroups_up_to_conjugacy(a5);
    EXPECT_FALSE(list.complete);
    // Everything except A5 itself: 1, C2, C3, V4, C5, S3, D10, A4.
    EXPECT_EQ(list.size(), 8u);
}

TEST(Subgroups, CapIsEnforced) {
    EnumerationOptions opts;
    opts.max_order = 10;
    EXPECT_THROW(subgroups_up_to_conjugacy(s4(), opts), CapExceeded);
}

TEST(Nilpotent, S4Classes) {
    auto list = nilpotent_subgroups(s4());
    std::multiset<std::uint64_t> orders;
    for (const auto& c : list.classes) orders.insert(c.order);
    EXPECT_EQ(orders, (std::multiset<std::uint64_t>{1, 2, 2, 3, 4, 4, 4, 8}));
    auto largest = largest_nilpotent(s4());
    EXPECT_EQ(largest.order, 8u);
    ASSERT_EQ(largest.witnesses.size(), 1u);
    std::size_t maximal = 0;
    for (const auto& c : list.classes) maximal += c.maximal_nilpotent;
    // D8 and C3.
    EXPECT_EQ(maximal, 2u);
}

TEST(Nilpotent, AbelianGroupGivesEverySubgroup) {
    PermutationGroup g = PermutationGroup::build({cyc(7, {{0, 1}}), cyc(7, {{2, 3}}), cyc(7, {{4, 5, 6}})});
    auto all = subgroups_up_to_conjugacy(g);
    auto nil = nilpotent_subgroups(g);
    EXPECT_EQ(all.size(), nil.size());
    EXPECT_EQ(largest_nilpotent(g).order, 12u);
}

TEST(Nilpotent, RepresentativesPassSylowOracle) {
    for (const auto& g : {s4(), affine_gamma(3, 2), affine_gamma(2, 3)}) {
        auto all = subgroups_up_to_conjugacy(g);
        for (std::size_t i = 0; i < all.size(); ++i) {
            PermutationGroup h = all.group(i);
            EXPECT_EQ(all.classes[i].nilpotent, sylow_normal_oracle(h));
            EXPECT_EQ(all.classes[i].nilpotent, classify(h).is_nilpotent);
        }
        auto nil = nilpotent_subgroups(g);
        std::size_t nil_count = 0;
        for (const auto& c : all.classes) nil_count += c.nilpotent;
        EXPECT_EQ(nil.size(), nil_count);
    }
}

TEST(Nilpotent, Degree27HasUniqueOrder81Class) {
    PermutationGroup g = affine_gamma(3, 3);
    ASSERT_EQ(g.order(), 27 * 26 * 3);
    ASSERT_TRUE(is_primitive(g));
    auto list = nilpotent_subgroups(g);
    std::size_t of81 = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& c = list.classes[i];
        if (c.order == 81) {
            ++of81;
            std::map<std::uint64_t, std::uint64_t> profile{{1, 1}, {3, 44}, {9, 36}};
            EXPECT_EQ(order_profile(list.group(i)), profile);
        } else {
            EXPECT_LE(c.order, 27u);
        }
    }
    EXPECT_EQ(of81, 1u);
}

TEST(Nilpotent, Sylow2OfGL23HasSmallCentralizer) {
    std::vector<Matrix> gens{Matrix::from_rows(3, {{2, 0}, {0, 1}}), Matrix::from_rows(3, {{1, 1}, {0, 1}}),
                             Matrix::from_rows(3, {{0, 1}, {1, 0}})};
    auto v = make_linear_action(3, 2, gens);
    auto list = nilpotent_subgroups(v.acting_group());
    bool found = false;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list.classes[i].order != 16) continue;
        found = true;
        PermutationGroup h = list.group(i);
        std::uint64_t best = 16;
        for (Point x = 1; x < 9; ++x) best = std::min(best, to_u64(centralizer_of_vector(h, x).order()));
        EXPECT_LE(2 * best * best, 16u);
    }
    EXPECT_TRUE(found);
}

TEST(Subgroups, ScheduleIndependent) {
    PermutationGroup g = affine_gamma(2, 4);
    EnumerationOptions one, four;
    four.jobs = 4;
    auto a = subgroups_up_to_conjugacy(g, one);
    auto b = subgroups_up_to_conjugacy(g, four);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.classes[i].elements, b.classes[i].elements);
        EXPECT_EQ(a.classes[i].generators, b.classes[i].generators);
        EXPECT_EQ(a.classes[i].class_size, b.classes[i].class_size);
    }
}
