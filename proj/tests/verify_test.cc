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

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "nilorb/linear/field.h"
#include "nilorb/perm/errors.h"
#include "nilorb/subgroups/subgroups.h"
#include "nilorb/verify/bounds.h"
#include "nilorb/verify/lemmas.h"
#include "nilorb/verify/module_theorems.h"
#include "nilorb/verify/subset_theorem.h"
#include "nilorb/zoo/catalog.h"
#include "nilorb/zoo/constructions.h"

using namespace nilorb;
using nlohmann::json;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

std::uint64_t image_of(const Permutation& g, std::uint64_t s) {
    std::uint64_t out = 0;
    for (Point x = 0; x < g.degree(); ++x)
        if (s >> x & 1) out |= std::uint64_t{1} << g[x];
    return out;
}

// Oracle: every subset against every element.
BigInt brute_stabilized_count(const PermutationGroup& h) {
    auto elems = h.elements();
    BigInt total = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.degree()); ++s)
        for (const auto& g : elems)
            if (!g.is_identity() && image_of(g, s) == s) ++total;
    return total;
}

// Oracle: the largest orbit of H on the subsets avoiding lambda, found by
// closing each subset under the generators.
std::uint64_t brute_best_index(const PermutationGroup& h, std::uint64_t lambda) {
    const std::uint64_t size = std::uint64_t{1} << h.degree();
    std::vector<char> seen(size, 0);
    std::uint64_t best = 1;
    for (std::uint64_t s = 0; s < size; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint64_t> orbit{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& g : h.generators()) {
                std::uint64_t t = image_of(g, orbit[i]);
                if (!seen[t]) {
                    seen[t] = 1;
                    orbit.push_back(t);
                }
            }
        for (std::uint64_t t : orbit)
            if (!(t & lambda)) best = std::max<std::uint64_t>(best, orbit.size());
    }
    return best;
}

std::vector<PermutationGroup> small_corpus() {
    std::vector<PermutationGroup> out;
    out.push_back(PermutationGroup::trivial(3));
    out.push_back(PermutationGroup::build({cyc(2, {{0, 1}})}));
    out.push_back(PermutationGroup::build({cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}));
    out.push_back(PermutationGroup::build({cyc(6, {{0, 1, 2}, {3, 4}})}));
    out.push_back(PermutationGroup::build({cyc(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cyc(8, {{0, 4}, {1, 7}, {2, 6}, {3, 5}})}));
    out.push_back(PermutationGroup::build({cyc(12, {{0, 1, 2}}), cyc(12, {{3, 4, 5, 6}}), cyc(12, {{7, 8}, {9, 10}})}));
    for (std::size_t n : {4, 5, 7, 8, 9, 11}) {
        for (const auto& e : solvable_primitive_catalog(n)) {
            out.push_back(e.group);
            out.push_back(e.group.point_stabilizer(0));
        }
    }
    return out;
}

const CatalogEntry& entry_with_order(std::size_t n, std::uint64_t order, const std::vector<CatalogEntry>& entries) {
    for (const auto& e : entries)
        if (e.order == order) return e;
    throw std::runtime_error("no catalog entry of degree " + std::to_string(n) + " and order " + std::to_string(order));
}

json strip_runtime(VerificationReport r) {
    json j = report_to_json(r);
    j.erase("runtime_ms");
    return j;
}

}  // namespace

TEST(StabilizedSubsets, SmallExamples) {
    EXPECT_EQ(stabilized_subset_count(PermutationGroup::trivial(5)), 0);
    EXPECT_EQ(stabilized_subset_count(PermutationGroup::build({cyc(2, {{0, 1}})})), 2);
}

TEST(StabilizedSubsets, AgreesWithPowerSetOracle) {
    for (const auto& h : small_corpus()) {
        if (h.degree() > 12) continue;
        EXPECT_EQ(stabilized_subset_count(h), brute_stabilized_count(h)) << h.order() << " on " << h.degree();
    }
}

TEST(StabilizedSubsets, RejectsLargeDegree) {
    EXPECT_THROW(stabilized_subset_count(PermutationGroup::trivial(65)), InvalidArgument);
}

TEST(FindDelta, AgreesWithPowerSetOracle) {
    std::mt19937_64 rng(7);
    for (const auto& h : small_corpus()) {
        const std::size_t n = h.degree();
        if (n > 12) continue;
        std::vector<std::uint64_t> lambdas{0, 1, (std::uint64_t{1} << n) - 1};
        for (int i = 0; i < 6; ++i) lambdas.push_back(rng() & ((std::uint64_t{1} << n) - 1));
        for (std::uint64_t lambda : lambdas) {
            DeltaResult r = find_delta(h, {n, lambda});
            EXPECT_EQ(r.index, brute_best_index(h, lambda)) << h.order() << " on " << n << " lambda " << lambda;
            EXPECT_EQ(r.delta & lambda, 0u);
            EXPECT_TRUE(r.exhaustive);
            // The reported subset attains the index.
            std::uint64_t stab = 0;
            for (const auto& g : h.elements()) stab += image_of(g, r.delta) == r.delta;
            EXPECT_EQ(to_u64(h.order()) / stab, r.index);
            EXPECT_EQ(r.satisfied, delta_condition(r.index, std::popcount(lambda), h.order()));
        }
    }
}

TEST(FindDelta, TrivialGroup) {
    DeltaResult r = find_delta(PermutationGroup::trivial(4), {4, 0});
    EXPECT_EQ(r.delta, 0u);
    EXPECT_EQ(r.index, 1u);
    EXPECT_FALSE(r.satisfied);
    EXPECT_TRUE(find_delta(PermutationGroup::trivial(4), {4, 1}).satisfied);
}

TEST(FindDelta, SemidihedralSylowOnNinePoints) {
    auto entries = solvable_primitive_catalog(9);
    PermutationGroup h = entry_with_order(9, 144, entries).group.point_stabilizer(0);
    ASSERT_EQ(h.order(), 16);
    DeltaResult r = find_delta(h, {9, 0});
    EXPECT_GE(r.index * r.index, 32u);
    EXPECT_TRUE(r.satisfied);
    EXPECT_EQ(r.index, brute_best_index(h, 0));
}

TEST(FindDelta, TieBreakPrefersFewerPoints) {
    // C2 swapping 0 and 1 on three points: {0} and {0,2} both reach index 2.
    PermutationGroup h = PermutationGroup::build({cyc(3, {{0, 1}})});
    DeltaResult r = find_delta(h, {3, 0});
    EXPECT_EQ(r.index, 2u);
    EXPECT_EQ(r.delta, 1u);
}

TEST(FindDelta, GreedyAboveExhaustiveDegree) {
    PermutationGroup h = PermutationGroup::build({cyc(30, {{0, 1, 2, 3, 4}})});
    DeltaResult r = find_delta(h, {30, 0});
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.index, 5u);
    EXPECT_THROW(find_delta(h, {29, 0}), InvalidArgument);
}

TEST(Inequalities, DeltaConditionIsExact) {
    EXPECT_TRUE(delta_condition(2, 0, 2));
    EXPECT_FALSE(delta_condition(2, 0, 3));
    EXPECT_TRUE(delta_condition(2, 1, 4));
    EXPECT_FALSE(delta_condition(1, 0, 1));
    EXPECT_EQ(subset_k_bound(16), 4u);
    EXPECT_EQ(subset_k_bound(17), 5u);
}

TEST(Inequalities, InequalityOne) {
    EXPECT_TRUE(inequality_one(81, 15, 27));
    EXPECT_TRUE(inequality_one(256, 0, 12));
    EXPECT_FALSE(inequality_one(257, 0, 12));
    // Crude bound, independent evaluation in floating point away from ties.
    for (auto [n, order, p] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint32_t>>{
             {4, 8, 2}, {8, 8, 2}, {9, 27, 3}, {16, 128, 2}, {25, 32, 5}, {27, 81, 3}, {32, 32, 2}, {11, 11, 11}}) {
        double lhs = 3 * std::log2(double(order)) + double(p + 1) * n / p;
        EXPECT_EQ(inequality_one_crude(order, n, p), lhs <= 2.0 * n) << n;
    }
}

TEST(Inequalities, BetaBounds) {
    EXPECT_EQ(n_beta_bound_below_two_power(97), Truth::kTrue);
    EXPECT_EQ(n_beta_bound_below_two_power(96), Truth::kTrue);
    EXPECT_EQ(n_beta_bound_below_two_power(95), Truth::kFalse);
    EXPECT_EQ(n_beta_bound_below_two_power(4096), Truth::kTrue);
    Enclosure b = beta_enclosure();
    EXPECT_LT(b.lo, std::log(32.0) / std::log(9.0) + 1e-12);
    EXPECT_GT(b.hi, std::log(32.0) / std::log(9.0) - 1e-12);
    EXPECT_LE(b.lo, b.hi);
    // n^beta / 2 at n = 9 is exactly 16: ties stay undecided.
    EXPECT_EQ(at_most_n_beta_over_two(15, 9, 0), Truth::kTrue);
    EXPECT_EQ(at_most_n_beta_over_two(17, 9, 0), Truth::kFalse);
    EXPECT_EQ(at_most_n_beta_over_two(16, 9, 0), Truth::kIndeterminate);
}

TEST(Inequalities, GlobalScan) {
    std::map<std::size_t, std::uint64_t> largest{{4, 8}, {8, 8}, {9, 27}, {16, 128}, {25, 32}, {27, 81}, {32, 32}};
    VerificationReport r = verify_global_inequalities(largest, 4096);
    const json& rows = r.numbers["rows"];
    EXPECT_EQ(rows["beta-threshold"]["threshold"], 96);
    EXPECT_EQ(rows["beta-threshold"]["indeterminate"], 0);
    EXPECT_EQ(rows["prime-cubic"]["refuted_at_11"], true);
    EXPECT_TRUE(rows["prime-cubic"]["failures"].empty());
    EXPECT_EQ(rows["inequality-1"]["failing"], json({4, 8, 9, 16, 27}));
    EXPECT_EQ(r.verdict, Verdict::kPass);
}

TEST(Lemma24, TranspositionIsTight) {
    CycleBoundCheck c = check_cycle_bounds(cyc(4, {{0, 1}}), 4, 2);
    EXPECT_EQ(c.cycles, 3u);
    EXPECT_EQ(c.fixed, 2u);
    EXPECT_EQ(2 * c.cycles, 4 + c.fixed);
    EXPECT_TRUE(c.half_fixed);
    EXPECT_EQ(4 * c.cycles, 3u * 4);
    EXPECT_TRUE(c.holds());
}

TEST(Lemma24, FixedPointFreeElement) {
    CycleBoundCheck c = check_cycle_bounds(cyc(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}), 8, 2);
    EXPECT_LE(2 * c.cycles, 8u);
    EXPECT_TRUE(c.holds());
}

TEST(Lemma24, CatalogGroupsHold) {
    for (std::size_t n : {2, 3, 4, 5, 7, 8, 9}) {
        for (const auto& e : solvable_primitive_catalog(n)) {
            Lemma24Result r = check_lemma24(e);
            EXPECT_EQ(r.failures, 0u) << n;
            EXPECT_EQ(r.elements + 1, e.order);
            EXPECT_LE(4 * r.max_cycles, 3 * n);
        }
    }
}

TEST(Lemma24, ImprimitiveGroupBreaksBound) {
    // S3 wr S2 on 6 points: the transposition (0 1) has 5 cycles.
    PermutationGroup g = wreath_product(symmetric_group(3), symmetric_group(2));
    Lemma24Result r = check_cycle_bounds_transitive(g);
    EXPECT_GT(r.failures, 0u);
    EXPECT_FALSE(r.first_failure.is_null());
}

TEST(Table1, SmallDegrees) {
    std::vector<std::size_t> degrees{4, 8, 9};
    Catalog c = build_catalog(degrees);
    for (std::size_t n : degrees) {
        auto r = largest_nilpotent_order(n, c);
        EXPECT_EQ(r.order, expected_largest_nilpotent().at(n)) << n;
        EXPECT_FALSE(r.witnesses.empty());
        for (const auto& w : r.witnesses) {
            PermutationGroup h = PermutationGroup::build(w.generators);
            EXPECT_EQ(h.order(), w.order);
            EXPECT_TRUE(is_nilpotent(h));
            EXPECT_TRUE(c.at(n)[w.entry].group.contains_group(h));
        }
    }
    VerificationReport rep = table1_report(c, degrees);
    EXPECT_EQ(rep.verdict, Verdict::kPass);
    EXPECT_EQ(rep.numbers["rows"]["9"]["largest"], 27);
    EXPECT_THROW(largest_nilpotent_order(5, c), InvalidArgument);
}

TEST(Table1, MismatchOnIncompleteUniverse) {
    Catalog c = build_catalog(std::vector<std::size_t>{9});
    c.info[9].complete = false;
    // Keep only the entries without the order-27 subgroup.
    std::vector<CatalogEntry> kept;
    for (auto& e : c.entries[9])
        if (e.order % 27 != 0) kept.push_back(e);
    c.entries[9] = kept;
    std::vector<std::size_t> degrees{9};
    VerificationReport rep = table1_report(c, degrees);
    EXPECT_EQ(rep.verdict, Verdict::kIncompleteUniverse);
    c.info[9].complete = true;
    EXPECT_EQ(table1_report(c, degrees).verdict, Verdict::kFail);
}

TEST(Degree27, HandCase) {
    Catalog c = build_catalog(std::vector<std::size_t>{27});
    auto r = largest_nilpotent_order(27, c);
    ASSERT_EQ(r.order, 81u);
    std::set<std::string> classes;
    for (const auto& w : r.witnesses) {
        PermutationGroup h = PermutationGroup::build(w.generators);
        auto profile = order_profile(h);
        EXPECT_EQ(profile, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 44}, {9, 36}}));
        BigInt count = 0;
        h.for_each_element([&](const Permutation& g) {
            auto s = cycle_stats(g);
            if (g.pow(3).is_identity() && !g.is_identity()) {
                EXPECT_LE(s.cycle_count, 15u);
            }
            if (!g.is_identity()) count += pow2(s.cycle_count);
            return true;
        });
        EXPECT_EQ(stabilized_subset_count(h), count);
        EXPECT_LE(count, 80 * pow2(15));
    }
    EXPECT_LE(big_pow(81, 3) * pow2(30), pow2(54));
    std::vector<std::size_t> degrees{27};
    VerificationReport rep = subset_theorem_report(c, degrees);
    EXPECT_EQ(rep.verdict, Verdict::kPass);
    EXPECT_EQ(rep.numbers["rows"]["27"]["route"], "inequality-1");
}

TEST(SubsetTheorem, SmallDegreesPass) {
    std::vector<std::size_t> degrees{2, 3, 4, 5, 7, 8, 9, 11};
    Catalog c = build_catalog(degrees);
    VerificationReport rep = subset_theorem_report(c, degrees);
    EXPECT_EQ(rep.verdict, Verdict::kPass);
    for (std::size_t n : degrees) {
        EXPECT_EQ(rep.numbers["rows"][std::to_string(n)]["failures"], 0);
        EXPECT_EQ(rep.numbers["rows"][std::to_string(n)]["route"], "exhaustive");
    }
    // m = 0 forces index^2 >= 2|H| for every class: spot-check the hardest.
    const json& hardest = rep.numbers["rows"]["9"]["hardest"];
    std::uint64_t index = hardest["index"];
    std::uint64_t order = hardest["order"];
    std::uint64_t m = hardest["m"];
    EXPECT_GE((index * index) << m, 2 * order);
}

TEST(SubsetTheorem, LambdaCountMatchesBinomials) {
    auto entries = solvable_primitive_catalog(5);
    const CatalogEntry& e = entries.back();
    SubsetTheoremResult r = check_subset_theorem(e);
    // Every nilpotent class contributes sum_{m <= k} C(5, m) lambdas.
    SubgroupList list = nilpotent_subgroups(e.group);
    std::uint64_t expected = 0;
    for (std::size_t j = 0; j < list.size(); ++j) {
        if (list.classes[j].order == 1) continue;
        std::uint64_t k = std::min<std::uint64_t>(ceil_log2(list.classes[j].order), 5);
        std::uint64_t binom = 1;
        for (std::uint64_t m = 0; m <= k; ++m) {
            expected += binom;
            binom = binom * (5 - m) / (m + 1);
        }
    }
    EXPECT_EQ(r.lambdas, expected);
}

TEST(Orbits, TrivialGroup) {
    OrbitReport r = orbit_extremes(PermutationGroup::trivial(9));
    EXPECT_EQ(r.max_orbit, 1u);
    EXPECT_EQ(r.min_centralizer, 1u);
    EXPECT_EQ(r.orbit_count, 9u);
}

TEST(Orbits, GammaNine) {
    GammaGroups g = make_gamma(3, 2);
    OrbitReport r0 = orbit_extremes(g.gamma0);
    EXPECT_EQ(r0.max_orbit, 8u);
    EXPECT_TRUE(r0.regular_orbit);
    OrbitReport r = orbit_extremes(g.gamma);
    EXPECT_EQ(r.group_order, 16u);
    EXPECT_EQ(r.max_orbit, 8u);
    EXPECT_EQ(r.min_centralizer, 2u);
    EXPECT_EQ(r.witness_centralizer * r.max_orbit, r.group_order);
}

TEST(Orbits, AgreeWithDirectCount) {
    for (const auto& h : small_corpus()) {
        if (h.order() > 500) continue;
        OrbitReport r = orbit_extremes(h);
        auto elems = h.elements();
        std::uint64_t best = 0;
        std::uint64_t min_c = r.group_order;
        for (Point x = 0; x < h.degree(); ++x) {
            std::set<Point> orbit;
            std::uint64_t stab = 0;
            for (const auto& g : elems) {
                orbit.insert(g[x]);
                stab += g[x] == x;
            }
            best = std::max<std::uint64_t>(best, orbit.size());
            if (x) min_c = std::min(min_c, stab);
        }
        EXPECT_EQ(r.max_orbit, best);
        if (h.degree() > 1) {
            EXPECT_EQ(r.min_centralizer, min_c);
        }
    }
}

TEST(MainTheorems, SylowTwoOfGL23) {
    auto entries = solvable_primitive_catalog(9);
    const CatalogEntry& e = entry_with_order(9, 144, entries);
    LinearModule v = make_linear_action(3, 2, e.stabilizer);
    const PermutationGroup& h = v.acting_group();
    ASSERT_EQ(h.order(), 16);
    // Brute force over the nine vectors.
    std::uint64_t best = 16;
    for (Point x = 1; x < 9; ++x) {
        std::uint64_t stab = 0;
        for (const auto& g : h.elements()) stab += g[x] == x;
        best = std::min(best, stab);
    }
    EXPECT_LE(2 * best * best, 16u);
    EXPECT_EQ(orbit_extremes_on_module(h, v).min_centralizer, best);
    MainTheoremResult r = check_main_theorems(h, v);
    EXPECT_GT(r.classes, 0u);
    EXPECT_EQ(r.centralizer_failures, 0u);
    EXPECT_EQ(r.orbit_failures, 0u);
}

TEST(MainTheorems, RejectsNonAdditiveAction) {
    LinearModule v = make_linear_action(2, 2, general_linear_generators(2, 2));
    PermutationGroup bad = PermutationGroup::build({cyc(4, {{0, 1}})});
    EXPECT_THROW(check_main_theorems(bad, v), InvalidArgument);
    EXPECT_THROW(orbit_extremes_on_module(PermutationGroup::trivial(5), v), InvalidArgument);
}

TEST(MainTheorems, TrivialSummandNeverShrinksOrbits) {
    LinearModule w = make_linear_action(2, 1, std::vector<Matrix>{Matrix::identity(2, 1)});
    for (const auto& mg : irreducible_solvable_subgroups(3, 2).groups) {
        LinearModule v = make_linear_action(3, 2, mg.generators);
        std::vector<LinearModule> parts{v, w};
        LinearModule vw = direct_sum_module(parts, SumAction::kDirectProduct);
        ASSERT_EQ(vw.acting_group().order(), v.acting_group().order());
        SubgroupList a = nilpotent_subgroups(v.acting_group());
        SubgroupList b = nilpotent_subgroups(vw.acting_group());
        ASSERT_EQ(a.size(), b.size());
        std::multiset<std::pair<std::uint64_t, std::uint64_t>> ma, mb;
        for (std::size_t j = 0; j < a.size(); ++j) ma.insert({a.classes[j].order, orbit_extremes(a.group(j)).max_orbit});
        for (std::size_t j = 0; j < b.size(); ++j) mb.insert({b.classes[j].order, orbit_extremes(b.group(j)).max_orbit});
        // Match classes by order; every M on V + W is at least the M on V.
        auto ia = ma.begin();
        for (auto ib = mb.begin(); ib != mb.end(); ++ib, ++ia) {
            EXPECT_EQ(ia->first, ib->first);
            EXPECT_GE(ib->second, ia->second);
        }
    }
}

TEST(MainTheorems, SmallUniversePasses) {
    auto cases = main_theorem_universe({{2, 2}, {3, 2}}, true);
    // 2 + 7 irreducible modules and 45 sums.
    EXPECT_EQ(cases.size(), 9u + 45u);
    VerificationReport r = main_theorems_report(cases);
    EXPECT_EQ(r.verdict, Verdict::kPass);
    EXPECT_EQ(r.numbers["rows"].size(), cases.size());
}

TEST(GammaCases, Annotations) {
    VerificationReport r = gamma_case_report(3, 2);
    const json& row = r.numbers["rows"]["3^2 c=8 f=2"];
    EXPECT_EQ(row["nilpotent"], true);
    EXPECT_EQ(row["max_orbit"], 8);
    EXPECT_EQ(row["verdict"], "pass");
    EXPECT_EQ(gamma_case_report(2, 2).numbers["rows"]["2^2 c=3 f=2"]["nilpotent"], false);
    EXPECT_EQ(gamma_case_report(2, 4).numbers["rows"]["2^4 c=3 f=4"]["regular_orbit"], true);
    EXPECT_EQ(gamma_case_report(2, 3).numbers["fields"]["2^3"]["gamma_order"], "21");
}

TEST(GammaCases, SixtyFourHasNoOrbitOfTwentyOne) {
    // Oracle: every subgroup <C, x> with C the order-7 multiplications and x
    // outside Gamma_0, of order 42, checked for an orbit of size 21.
    GammaGroups g = make_gamma(2, 6);
    auto gamma0 = g.gamma0.elements();
    std::vector<Permutation> c7;
    for (const auto& x : gamma0)
        if (x.pow(7).is_identity() && !x.is_identity()) c7.push_back(x);
    ASSERT_EQ(c7.size(), 6u);
    int found = 0;
    for (const auto& x : g.gamma.elements()) {
        if (g.gamma0.contains(x)) continue;
        PermutationGroup h = PermutationGroup::build({c7.front(), x});
        if (h.order() != 42) continue;
        ++found;
        for (const auto& orbit : orbit_partition(h)) EXPECT_NE(orbit.size(), 21u);
    }
    EXPECT_GT(found, 0);
    VerificationReport r = gamma_case_report(2, 6);
    EXPECT_EQ(r.numbers["rows"]["2^6 c=7 f=6"]["agree"], false);
    EXPECT_EQ(r.numbers["rows"]["2^6 c=9 f=6"]["agree"], true);
    EXPECT_EQ(r.verdict, Verdict::kFail);
}

TEST(Determinism, WorkerCountDoesNotChangeReports) {
    std::vector<std::size_t> degrees{4, 5, 8, 9};
    Catalog c = build_catalog(degrees);
    VerifyOptions one;
    VerifyOptions four;
    four.jobs = 4;
    EXPECT_EQ(strip_runtime(lemma24_report(c, degrees, one)), strip_runtime(lemma24_report(c, degrees, four)));
    EXPECT_EQ(strip_runtime(subset_theorem_report(c, degrees, one)),
              strip_runtime(subset_theorem_report(c, degrees, four)));
    EXPECT_EQ(strip_runtime(table1_report(c, degrees, one)), strip_runtime(table1_report(c, degrees, four)));
    auto cases = main_theorem_universe({{2, 2}, {2, 3}}, true);
    EXPECT_EQ(strip_runtime(main_theorems_report(cases, one)), strip_runtime(main_theorems_report(cases, four)));
}

TEST(Deadline, ExpiredBudgetGivesIncomplete) {
    std::vector<std::size_t> degrees{9};
    Catalog c = build_catalog(degrees);
    VerifyOptions o;
    o.deadline = Deadline::after_seconds(0);
    EXPECT_EQ(subset_theorem_report(c, degrees, o).verdict, Verdict::kIncomplete);
    EXPECT_EQ(table1_report(c, degrees, o).verdict, Verdict::kIncomplete);
}

TEST(Report, RoundTrip) {
    VerificationReport r;
    r.claim = "lemma24";
    r.universe = {{"degrees", {4}}};
    r.add_row("4", Verdict::kPass, {{"elements", 23}});
    r.add_row("8", Verdict::kFail, {{"elements", 167}}, {{"g", "1 0 2 3"}});
    r.add_finding("8", {{"note", 1}});
    r.runtime_ms = 2.5;
    EXPECT_EQ(r.verdict, Verdict::kFail);
    VerificationReport back = report_from_json(report_to_json(r));
    EXPECT_EQ(report_to_json(back), report_to_json(r));
    EXPECT_EQ(report_text(back), report_text(r));
    EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(Report, RejectsBadInput) {
    VerificationReport r;
    r.claim = "x";
    EXPECT_THROW(r.add_row("a", Verdict::kFail, json::object()), InternalError);
    json j = report_to_json(r);
    j["schema"] = 2;
    EXPECT_THROW(report_from_json(j), FormatError);
    j = report_to_json(r);
    j["verdict"] = "maybe";
    EXPECT_THROW(report_from_json(j), FormatError);
    j = report_to_json(r);
    j.erase("claim");
    EXPECT_THROW(report_from_json(j), FormatError);
}

TEST(Report, VerdictOrder) {
    EXPECT_EQ(combine(Verdict::kPass, Verdict::kIncompleteUniverse), Verdict::kIncompleteUniverse);
    EXPECT_EQ(combine(Verdict::kIndeterminate, Verdict::kIncomplete), Verdict::kIndeterminate);
    EXPECT_EQ(combine(Verdict::kFail, Verdict::kPass), Verdict::kFail);
    for (Verdict v : {Verdict::kPass, Verdict::kIncompleteUniverse, Verdict::kIncomplete, Verdict::kIndeterminate,
                      Verdict::kFail})
        EXPECT_EQ(parse_verdict(verdict_name(v)), v);
}
