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
#include <chrono>
#include <random>
#include <set>

#include "nilorb/perm/errors.h"
#include "nilorb/zoo/catalog.h"
#include "nilorb/zoo/constructions.h"

using namespace nilorb;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

std::multiset<std::uint64_t> orders_of(const std::vector<CatalogEntry>& entries) {
    std::multiset<std::uint64_t> out;
    for (const auto& e : entries) out.insert(to_u64(e.order));
    return out;
}

std::multiset<std::uint64_t> orders_of(const IrreducibleList& list) {
    std::multiset<std::uint64_t> out;
    for (const auto& h : list.groups) out.insert(to_u64(h.order));
    return out;
}

// Oracle: spin each non-zero vector up to the submodule it generates under the
// matrices and addition; irreducible iff every such submodule is everything.
bool irreducible_oracle(std::uint32_t p, std::size_t d, const std::vector<Matrix>& mats) {
    std::size_t q = 1;
    for (std::size_t i = 0; i < d; ++i) q *= p;
    auto add = [&](std::size_t a, std::size_t b) {
        std::size_t r = 0, unit = 1;
        for (std::size_t i = 0; i < d; ++i, a /= p, b /= p, unit *= p) r += (a % p + b % p) % p * unit;
        return r;
    };
    std::vector<Permutation> perms;
    for (const auto& m : mats) perms.push_back(matrix_permutation(m));
    for (std::size_t v = 1; v < q; ++v) {
        std::vector<char> in(q, 0);
        std::vector<std::size_t> span{0, v};
        in[0] = in[v] = 1;
        for (std::size_t i = 1; i < span.size(); ++i) {
            std::vector<std::size_t> fresh;
            for (const auto& g : perms) fresh.push_back(g[static_cast<Point>(span[i])]);
            for (std::size_t j = 0; j <= i; ++j) fresh.push_back(add(span[i], span[j]));
            for (auto w : fresh)
                if (!in[w]) {
                    in[w] = 1;
                    span.push_back(w);
                }
        }
        if (span.size() != q) return false;
    }
    return true;
}

}  // namespace

TEST(Wreath, TrivialTopGivesBase) {
    PermutationGroup h = PermutationGroup::build({cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
    PermutationGroup w = wreath_product(h, PermutationGroup::trivial(1));
    EXPECT_EQ(w.degree(), 3u);
    EXPECT_EQ(w.order(), 6);
}

TEST(Wreath, C2WrC2IsDihedral8) {
    PermutationGroup c2 = PermutationGroup::build({cyc(2, {{0, 1}})});
    PermutationGroup w = wreath_product(c2, c2);
    EXPECT_EQ(w.degree(), 4u);
    EXPECT_EQ(w.order(), 8);
    EXPECT_FALSE(is_abelian(w));
}

TEST(Wreath, S3WrC2HasBlocks) {
    PermutationGroup w = wreath_product(symmetric_group(3), PermutationGroup::build({cyc(2, {{0, 1}})}));
    EXPECT_EQ(w.degree(), 6u);
    EXPECT_EQ(w.order(), 72);
    auto blocks = minimal_block_system(w, 1);
    EXPECT_EQ(blocks, (std::vector<Point>{0, 0, 0, 3, 3, 3}));
    EXPECT_FALSE(is_primitive(w));
}

TEST(Wreath, OrderFormulaOnRandomFactors) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t a = 2 + rng() % 3, b = 1 + rng() % 3;
        auto random_perm = [&](std::size_t n) {
            std::vector<Point> img(n);
            for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
            std::shuffle(img.begin(), img.end(), rng);
            return Permutation::from_images(img);
        };
        PermutationGroup h = PermutationGroup::build({random_perm(a)});
        PermutationGroup s = PermutationGroup::build({random_perm(b), random_perm(b)});
        PermutationGroup w = wreath_product(h, s);
        EXPECT_EQ(w.order(), big_pow(to_u64(h.order()), b) * s.order());
    }
}

TEST(Wreath, DegreeCap) {
    EXPECT_THROW(wreath_product(PermutationGroup::trivial(2000), PermutationGroup::trivial(1000)), CapExceeded);
}

TEST(Linear, GeneralLinearOrders) {
    struct Case {
        std::uint32_t p;
        std::size_t d;
        std::uint64_t order;
    };
    for (auto c : {Case{2, 1, 1}, Case{2, 2, 6}, Case{3, 2, 48}, Case{2, 3, 168}, Case{5, 2, 480},
                   Case{7, 2, 2016}, Case{3, 3, 11232}, Case{2, 4, 20160}}) {
        EXPECT_EQ(general_linear_order(c.p, c.d), c.order);
        auto gl = general_linear_generators(c.p, c.d);
        EXPECT_EQ(make_linear_action(c.p, c.d, gl).acting_group().order(), c.order) << c.p << "^" << c.d;
    }
    EXPECT_EQ(general_linear_order(2, 6), 20158709760ULL);
}

TEST(Linear, SemilinearOrders) {
    EXPECT_EQ(make_linear_action(2, 3, semilinear_generators(2, 3)).acting_group().order(), 21);
    EXPECT_EQ(make_linear_action(3, 2, semilinear_generators(3, 2)).acting_group().order(), 16);
    EXPECT_EQ(make_linear_action(2, 5, semilinear_generators(2, 5)).acting_group().order(), 155);
}

TEST(Linear, MatrixOfRoundTrips) {
    for (const auto& m : general_linear_generators(3, 3)) {
        EXPECT_EQ(matrix_of(matrix_permutation(m), 3, 3), m);
    }
    EXPECT_THROW(matrix_of(cyc(4, {{0, 1}}), 2, 2), InvalidArgument);
}

TEST(Linear, LinearWreathOrder) {
    auto base = general_linear_generators(2, 2);
    auto gens = linear_wreath(base, symmetric_group(3).generators());
    EXPECT_EQ(make_linear_action(2, 6, gens).acting_group().order(), 6 * 6 * 6 * 6);
}

TEST(Linear, AffineGroupOrder) {
    PermutationGroup agl = affine_group(3, 2, general_linear_generators(3, 2));
    EXPECT_EQ(agl.order(), 432);
    EXPECT_TRUE(is_primitive(agl));
    EXPECT_EQ(affine_group(2, 3, {}).order(), 8);
}

TEST(Linear, IrreducibilityAgreesWithSpinOracle) {
    std::mt19937 rng(11);
    for (auto [p, d] : {std::pair<std::uint32_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        auto gl = general_linear_generators(p, d);
        auto all = make_linear_action(p, d, gl).acting_group().elements();
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Matrix> mats;
            std::size_t k = 1 + rng() % 2;
            for (std::size_t i = 0; i < k; ++i) mats.push_back(matrix_of(all[rng() % all.size()], p, d));
            EXPECT_EQ(acts_irreducibly(p, d, mats), irreducible_oracle(p, d, mats));
        }
    }
}

TEST(Irreducible, DimensionOne) {
    auto list = irreducible_solvable_subgroups(7, 1);
    EXPECT_TRUE(list.complete);
    EXPECT_EQ(orders_of(list), (std::multiset<std::uint64_t>{1, 2, 3, 6}));
    EXPECT_EQ(irreducible_solvable_subgroups(2, 1).groups.size(), 1u);
}

TEST(Irreducible, GL22) {
    auto list = irreducible_solvable_subgroups(2, 2);
    EXPECT_TRUE(list.complete);
    EXPECT_EQ(orders_of(list), (std::multiset<std::uint64_t>{3, 6}));
}

TEST(Irreducible, GL32) {
    auto list = irreducible_solvable_subgroups(2, 3);
    EXPECT_TRUE(list.complete);
    EXPECT_EQ(orders_of(list), (std::multiset<std::uint64_t>{7, 21}));
    for (const auto& h : list.groups) {
        EXPECT_TRUE(irreducible_oracle(2, 3, h.generators));
        EXPECT_TRUE(is_solvable(make_linear_action(2, 3, h.generators).acting_group()));
    }
}

TEST(Irreducible, RejectsBadInput) {
    EXPECT_THROW(irreducible_solvable_subgroups(4, 2), InvalidArgument);
    EXPECT_THROW(irreducible_solvable_subgroups(2, 0), InvalidArgument);
}

TEST(Catalog, SmallDegrees) {
    EXPECT_EQ(orders_of(solvable_primitive_catalog(2)), (std::multiset<std::uint64_t>{2}));
    EXPECT_EQ(orders_of(solvable_primitive_catalog(4)), (std::multiset<std::uint64_t>{12, 24}));
    EXPECT_EQ(orders_of(solvable_primitive_catalog(8)), (std::multiset<std::uint64_t>{56, 168}));
    EXPECT_EQ(orders_of(solvable_primitive_catalog(7)), (std::multiset<std::uint64_t>{7, 14, 21, 42}));
    // 3^2:4, 3^2:D8, 3^2:Q8, 3^2:8, 3^2:SD16, ASL(2,3), AGL(2,3).
    EXPECT_EQ(orders_of(solvable_primitive_catalog(9)),
              (std::multiset<std::uint64_t>{36, 72, 72, 72, 144, 216, 432}));
}

TEST(Catalog, KnownCounts) {
    // Affine solvable members of the primitive groups of degree 25 and 27.
    EXPECT_EQ(solvable_primitive_catalog(25).size(), 19u);
    EXPECT_EQ(solvable_primitive_catalog(27).size(), 9u);
    EXPECT_EQ(solvable_primitive_catalog(11).size(), 4u);
}

TEST(Catalog, Degree32IsSemilinearAndComplete) {
    DegreeInfo info;
    auto entries = solvable_primitive_catalog(32, {}, &info);
    EXPECT_TRUE(info.complete);
    EXPECT_EQ(info.tier, 1);
    EXPECT_EQ(orders_of(entries), (std::multiset<std::uint64_t>{992, 4960}));
}

TEST(Catalog, EntryInvariants) {
    for (std::size_t n : {3, 4, 5, 8, 9}) {
        auto entries = solvable_primitive_catalog(n);
        auto [p, d] = *prime_power(n);
        PermutationGroup translations = affine_group(p, d, {});
        PermutationGroup agl = affine_group(p, d, general_linear_generators(p, d));
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            EXPECT_TRUE(e.flags.is_primitive);
            EXPECT_TRUE(e.flags.is_solvable);
            EXPECT_EQ(e.group.point_stabilizer(0).order() * n, e.order);
            EXPECT_TRUE(e.group.contains_group(translations));
            // Translations form the unique minimal normal subgroup.
            e.group.for_each_element([&](const Permutation& g) {
                if (!g.is_identity()) {
                    EXPECT_TRUE(normal_closure(e.group, {g}).contains_group(translations));
                }
                return true;
            });
            for (std::size_t j = 0; j < i; ++j) {
                if (entries[j].order != e.order) continue;
                EXPECT_FALSE(are_conjugate_subgroups(entries[j].group, e.group, agl).conjugate) << n;
            }
        }
    }
}

TEST(Catalog, SortedByOrder) {
    auto entries = solvable_primitive_catalog(9);
    for (std::size_t i = 1; i < entries.size(); ++i) EXPECT_LE(entries[i - 1].order, entries[i].order);
}

TEST(Catalog, DegreeValidation) {
    EXPECT_THROW(solvable_primitive_catalog(6), InvalidArgument);
    EXPECT_THROW(solvable_primitive_catalog(1), InvalidArgument);
    EXPECT_THROW(solvable_primitive_catalog(256), InvalidArgument);
    EXPECT_EQ(degree_tier(16), 1);
    EXPECT_EQ(degree_tier(13), 1);
    EXPECT_EQ(degree_tier(49), 2);
    EXPECT_EQ(degree_tier(81), 2);
}

TEST(Catalog, Degree16Exhaustive) {
    auto start = std::chrono::steady_clock::now();
    RouteOptions opts;
    opts.jobs = 4;
    DegreeInfo info;
    auto entries = solvable_primitive_catalog(16, opts, &info);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_TRUE(info.complete);
    EXPECT_FALSE(entries.empty());
    for (const auto& e : entries) {
        EXPECT_TRUE(e.flags.is_primitive && e.flags.is_solvable);
    }
    EXPECT_EQ(entries.size(), 10u);
    // (S3 x S3):2 = GL(2,2) wr S2 is the largest solvable irreducible group.
    EXPECT_EQ(entries.back().order, 16 * 72);
    RecordProperty("seconds", std::to_string(seconds));
}

TEST(CatalogIO, RoundTrip) {
    std::size_t degrees[] = {4, 5};
    Catalog c = build_catalog(degrees);
    std::string text = catalog_to_string(c);
    Catalog back = catalog_from_string(text);
    ASSERT_EQ(back.at(4).size(), 2u);
    EXPECT_EQ(orders_of(back.at(4)), (std::multiset<std::uint64_t>{12, 24}));
    for (std::size_t n : degrees) {
        ASSERT_EQ(back.at(n).size(), c.at(n).size());
        for (std::size_t i = 0; i < c.at(n).size(); ++i) {
            EXPECT_EQ(back.at(n)[i].generators(), c.at(n)[i].generators());
            EXPECT_EQ(back.at(n)[i].order, c.at(n)[i].order);
            EXPECT_EQ(back.at(n)[i].stabilizer, c.at(n)[i].stabilizer);
            EXPECT_EQ(back.at(n)[i].route, c.at(n)[i].route);
        }
        EXPECT_EQ(back.info.at(n).complete, c.info.at(n).complete);
    }
    EXPECT_EQ(catalog_to_string(back), text);

    auto path = std::filesystem::temp_directory_path() / "nilorb_zoo_test_catalog.jsonl";
    catalog_store(c, path);
    EXPECT_EQ(catalog_to_string(catalog_load(path)), text);
    std::filesystem::remove(path);
}

TEST(CatalogIO, EmptyCatalog) {
    Catalog empty;
    EXPECT_EQ(catalog_to_string(empty), "");
    EXPECT_EQ(catalog_from_string("").size(), 0u);
}

TEST(CatalogIO, RejectsTampering) {
    std::size_t degrees[] = {4};
    std::string text = catalog_to_string(build_catalog(degrees));
    std::string tampered = text;
    auto pos = tampered.find("\"order\":\"24\"");
    ASSERT_NE(pos, std::string::npos);
    tampered.replace(pos, 12, "\"order\":\"48\"");
    EXPECT_THROW(catalog_from_string(tampered), FormatError);

    std::string versioned = text;
    while ((pos = versioned.find("\"v\":1")) != std::string::npos) versioned.replace(pos, 5, "\"v\":2");
    EXPECT_THROW(catalog_from_string(versioned), FormatError);
    EXPECT_THROW(catalog_from_string("{not json\n"), FormatError);
    EXPECT_THROW(catalog_load("/nonexistent/nilorb.jsonl"), Error);
}
