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

#include <fstream>
#include <sstream>

#include "nilorb/cli/cli.h"
#include "nilorb/perm/errors.h"

using namespace nilorb;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("nilorb_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunConfig config_for(std::vector<std::string> claims, std::vector<std::size_t> degrees, int tier = 1) {
    RunConfig c;
    c.claims = std::move(claims);
    c.degrees = std::move(degrees);
    c.tier = tier;
    return c;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Run, Table1TierOne) {
    fs::path dir = fresh_dir("table1");
    RunConfig c = config_for({"table1"}, {4, 8, 9, 25, 27, 32});
    c.out = dir / "t1.json";
    c.csv = dir / "t1.csv";
    std::ostringstream out, log;
    EXPECT_EQ(run_verify(c, out, log), kExitPass);
    auto reports = load_reports(*c.out);
    ASSERT_EQ(reports.size(), 1u);
    const auto& rows = reports[0].numbers["rows"];
    EXPECT_EQ(rows["4"]["largest"], 8);
    EXPECT_EQ(rows["25"]["largest"], 32);
    EXPECT_EQ(rows["27"]["largest"], 81);
    EXPECT_EQ(slurp(*c.csv),
              "claim,case,verdict,value\ntable1,4,PASS,8\ntable1,8,PASS,8\ntable1,9,PASS,27\ntable1,25,PASS,32\n"
              "table1,27,PASS,81\ntable1,32,PASS,32\n");
    EXPECT_NE(out.str().find("largest |H|"), std::string::npos);
}

TEST(Run, TierTwoDegreeUnderTierOne) {
    std::ostringstream out, log;
    EXPECT_EQ(run_verify(config_for({"table1"}, {64}), out, log), kExitIncomplete);
    EXPECT_NE(out.str().find("INCOMPLETE-UNIVERSE"), std::string::npos);
}

TEST(Run, SubsetTheoremSmallDegrees) {
    std::ostringstream out, log;
    EXPECT_EQ(run_verify(config_for({"thmperm2"}, {2, 3, 4, 5, 7, 8, 9, 11}), out, log), kExitPass);
}

TEST(Run, ConfigurationErrors) {
    std::ostringstream out, log;
    EXPECT_EQ(run_verify(config_for({"table1"}, {6}), out, log), kExitConfig);
    EXPECT_NE(log.str().find("not a prime power"), std::string::npos);
    EXPECT_EQ(run_verify(config_for({"nonsense"}, {}), out, log), kExitConfig);
    EXPECT_EQ(run_verify(config_for({"table1"}, {4}, 3), out, log), kExitConfig);
    RunConfig c = config_for({"table1"}, {4});
    c.jobs = 0;
    EXPECT_EQ(run_verify(c, out, log), kExitConfig);
    fs::path dir = fresh_dir("config");
    c = config_for({"table1"}, {6});
    c.out = dir / "err.json";
    EXPECT_EQ(run_verify(c, out, log), kExitConfig);
    auto reports = load_reports(*c.out);
    EXPECT_EQ(reports[0].verdict, Verdict::kFail);
}

TEST(Run, ExpiredBudgetIsIncomplete) {
    RunConfig c = config_for({"gamma-cases"}, {});
    c.max_seconds = 1e-9;
    std::ostringstream out, log;
    EXPECT_EQ(run_verify(c, out, log), kExitIncomplete);
}

TEST(Run, RepeatedRunsAreIdentical) {
    RunConfig c = config_for({"lemma24", "thmperm2", "gamma-cases"}, {4, 5, 9});
    std::ostringstream log;
    auto a = run_claims(c, log);
    c.jobs = 3;
    auto b = run_claims(c, log);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a[0].claim, "gamma-cases");
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(normalized(a[i]).dump(), normalized(b[i]).dump());
}

TEST(Run, DefaultDegrees) {
    EXPECT_EQ(default_degrees("table1", 1), (std::vector<std::size_t>{4, 8, 9, 16, 25, 27, 32}));
    auto t2 = default_degrees("table1", 2);
    EXPECT_TRUE(std::find(t2.begin(), t2.end(), 81) != t2.end());
    EXPECT_TRUE(std::find(t2.begin(), t2.end(), 4) != t2.end());
    EXPECT_TRUE(default_degrees("gamma-cases", 1).empty());
    for (const auto& claim : claim_names())
        for (std::size_t n : default_degrees(claim, 1)) EXPECT_EQ(degree_tier(n), 1) << claim << " " << n;
}

TEST(Cache, IdempotentRebuild) {
    fs::path dir = fresh_dir("cache");
    std::vector<std::size_t> degrees{4};
    {
        std::ostringstream log;
        CatalogCache cache(dir, RouteOptions{}, &log);
        Catalog c = cache.get(degrees);
        EXPECT_EQ(c.at(4).size(), 2u);
        EXPECT_EQ(cache.constructions(), 1u);
        EXPECT_EQ(cache.manifest()["degrees"]["4"]["entry_count"], 2);
        EXPECT_EQ(cache.manifest()["degrees"]["4"]["complete"], true);
    }
    std::string first = slurp(dir / "manifest.json");
    {
        std::ostringstream log;
        CatalogCache cache(dir, RouteOptions{}, &log);
        Catalog c = cache.get(degrees);
        EXPECT_EQ(c.at(4).size(), 2u);
        EXPECT_EQ(cache.constructions(), 0u);
        EXPECT_EQ(cache.hits(), 1u);
        EXPECT_NE(log.str().find("cache hit"), std::string::npos);
    }
    EXPECT_EQ(slurp(dir / "manifest.json"), first);
    // A changed route option or a tampered file forces a rebuild.
    {
        RouteOptions other;
        other.exhaustive_threshold = 10;
        CatalogCache cache(dir, other);
        cache.get(degrees);
        EXPECT_EQ(cache.constructions(), 1u);
    }
    {
        std::ofstream(dir / "degree-4.jsonl", std::ios::app) << "\n";
        CatalogCache cache(dir, RouteOptions{});
        cache.get(degrees);
        EXPECT_EQ(cache.constructions(), 1u);
    }
    CatalogCache cache(dir, RouteOptions{});
    EXPECT_THROW(cache.get(std::vector<std::size_t>{6}), InvalidArgument);
}

TEST(Cache, RejectsForeignManifest) {
    fs::path dir = fresh_dir("manifest");
    std::ofstream(dir / "manifest.json") << R"({"schema": 9, "degrees": {}})";
    EXPECT_THROW(CatalogCache(dir, RouteOptions{}), FormatError);
}

TEST(Render, EmptyClaimSet) {
    std::vector<VerificationReport> none;
    EXPECT_EQ(render_csv(none), "claim,case,verdict,value\n");
    EXPECT_EQ(render_text(none), "");
    EXPECT_EQ(exit_code(none), kExitPass);
}

TEST(Render, FailIsMarked) {
    VerificationReport r;
    r.claim = "table1";
    r.add_row("4", Verdict::kPass, {{"largest", 8}, {"expected", 8}});
    r.add_row("16", Verdict::kFail, {{"largest", 64}, {"expected", 128}}, {{"largest", 64}});
    std::vector<VerificationReport> reports{r};
    std::string csv = render_csv(reports);
    EXPECT_NE(csv.find("table1,16,FAIL,64"), std::string::npos);
    EXPECT_LT(csv.find("table1,4,"), csv.find("table1,16,"));
    std::string text = render_text(reports);
    EXPECT_NE(text.find("FAIL (expected 128)"), std::string::npos);
    EXPECT_EQ(exit_code(reports), kExitFail);
    EXPECT_EQ(render_text(reports), text);
}

TEST(Render, FileRoundTrip) {
    VerificationReport a;
    a.claim = "lemma24";
    a.add_row("4", Verdict::kPass, {{"failures", 0}});
    VerificationReport b;
    b.claim = "thmperm2";
    b.add_row("4", Verdict::kIncompleteUniverse, {{"failures", 0}});
    std::vector<VerificationReport> both{a, b};
    auto back = reports_from_text(reports_file_text(both));
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(normalized(back[1]), normalized(b));
    EXPECT_EQ(exit_code(back), kExitIncomplete);
    std::vector<VerificationReport> one{a};
    EXPECT_EQ(reports_from_text(reports_file_text(one)).size(), 1u);
    EXPECT_THROW(reports_from_text("{\"schema\": 2}"), FormatError);
    EXPECT_THROW(reports_from_text("not json"), FormatError);
}
