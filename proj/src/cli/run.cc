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

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "nilorb/cli/cli.h"
#include "nilorb/perm/errors.h"
#include "nilorb/verify/lemmas.h"
#include "nilorb/verify/module_theorems.h"
#include "nilorb/verify/subset_theorem.h"

namespace nilorb {

using nlohmann::json;

namespace {

using Degrees = std::vector<std::size_t>;

const Degrees kTable1Tier1{4, 8, 9, 16, 25, 27, 32};
const Degrees kTable1Tier2{49, 64, 81};
const Degrees kElementTier1{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};
const Degrees kSubsetTier1{2, 3, 4, 5, 7, 8, 9, 11, 27};
const Degrees kSubsetTier2{13, 16, 17, 19, 23};

// Fields and pairwise sums of the main-theorem universe.
const std::vector<std::pair<std::uint32_t, std::size_t>> kModuleFields{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 3}};

Degrees concat(Degrees a, const Degrees& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        throw Error("cannot write " + path.string());
    }
}

VerificationReport run_catalog_claim(const std::string& claim, const Catalog& catalog, const Degrees& degrees,
                                     const RunConfig& config, const VerifyOptions& options) {
    if (claim == "table1") {
        return table1_report(catalog, degrees, options);
    }
    if (claim == "lemma24") {
        return lemma24_report(catalog, degrees, options);
    }
    if (claim == "lemma25") {
        return verify_nilpotent_order_bounds(catalog, degrees, options);
    }
    if (claim == "thmperm2") {
        return subset_theorem_report(catalog, degrees, options);
    }
    // inequalities
    auto start = std::chrono::steady_clock::now();
    std::map<std::size_t, std::uint64_t> largest;
    for (std::size_t n : degrees) {
        largest[n] = largest_nilpotent_order(n, catalog, options).order;
    }
    VerificationReport r = verify_global_inequalities(largest, config.max_n, options.bounds);
    VerificationReport described;
    describe_catalog_universe(described, catalog, degrees);
    r.universe["degrees"] = described.universe["degrees"];
    r.universe["complete"] = described.universe["complete"];
    r.completeness = described.completeness;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

VerificationReport budget_report(const std::string& claim) {
    VerificationReport r;
    r.claim = claim;
    r.completeness = "time budget exhausted";
    r.add_row("all", Verdict::kIncomplete, {{"reason", "time budget exhausted"}});
    return r;
}

}  // namespace

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names{"gamma-cases", "inequalities", "lemma24",  "lemma25",
                                                "main-theorems", "table1",     "thmperm2"};
    return names;
}

bool claim_uses_degrees(const std::string& claim) { return claim != "gamma-cases" && claim != "main-theorems"; }

std::vector<std::size_t> default_degrees(const std::string& claim, int tier) {
    if (claim == "table1" || claim == "inequalities") {
        return tier >= 2 ? concat(kTable1Tier1, kTable1Tier2) : kTable1Tier1;
    }
    if (claim == "lemma24" || claim == "lemma25") {
        return tier >= 2 ? concat(kElementTier1, kTable1Tier2) : kElementTier1;
    }
    if (claim == "thmperm2") {
        return tier >= 2 ? concat(kSubsetTier1, kSubsetTier2) : kSubsetTier1;
    }
    return {};
}

void validate(const RunConfig& config) {
    if (config.tier != 1 && config.tier != 2) {
        throw InvalidArgument("tier must be 1 or 2");
    }
    if (config.jobs < 1) {
        throw InvalidArgument("jobs must be at least 1");
    }
    if (config.max_seconds < 0) {
        throw InvalidArgument("max-seconds must not be negative");
    }
    for (const auto& c : config.claims) {
        if (std::find(claim_names().begin(), claim_names().end(), c) == claim_names().end()) {
            throw InvalidArgument("unknown claim '" + c + "'");
        }
    }
    for (std::size_t n : config.degrees) {
        check_catalog_degree(n);
    }
}

std::vector<VerificationReport> run_claims(const RunConfig& config, std::ostream& log) {
    validate(config);
    std::set<std::string> claims(config.claims.begin(), config.claims.end());
    RouteOptions route;
    route.exhaustive_threshold = config.exhaustive_threshold;
    route.jobs = config.jobs;
    CatalogCache cache(config.cache_dir, route, &log);
    std::vector<VerificationReport> reports;
    for (const std::string& claim : claims) {
        VerifyOptions options;
        options.jobs = config.jobs;
        options.nilpotent_cap = config.nilpotent_cap;
        if (config.max_seconds > 0) {
            options.deadline = Deadline::after_seconds(config.max_seconds);
        }
        auto start = std::chrono::steady_clock::now();
        VerificationReport r;
        try {
            if (claim == "gamma-cases") {
                r = gamma_cases_report(options);
            } else if (claim == "main-theorems") {
                r = main_theorems_report(main_theorem_universe(kModuleFields, true), options);
            } else {
                Degrees requested = config.degrees.empty() ? default_degrees(claim, config.tier) : config.degrees;
                Degrees run;
                Degrees skipped;
                for (std::size_t n : requested) {
                    (degree_tier(n) <= config.tier ? run : skipped).push_back(n);
                }
                Catalog catalog = cache.get(run);
                r = run_catalog_claim(claim, catalog, run, config, options);
                for (std::size_t n : skipped) {
                    r.add_row(std::to_string(n), Verdict::kIncompleteUniverse,
                              {{"reason", "degree " + std::to_string(n) + " is tier 2; rerun with --tier 2"}});
                }
                if (!skipped.empty()) {
                    r.universe["skipped_degrees"] = skipped;
                    r.completeness += "; tier-2 degrees skipped";
                }
            }
        } catch (const DeadlineExceeded&) {
            r = budget_report(claim);
        }
        r.claim = claim;
        r.tier = config.tier;
        r.runtime_ms = elapsed_ms(start);
        log << claim << ": " << verdict_name(r.verdict) << " in " << static_cast<long long>(r.runtime_ms)
            << " ms\n";
        reports.push_back(std::move(r));
    }
    log << "catalog constructions: " << cache.constructions() << ", cache hits: " << cache.hits() << "\n";
    return reports;
}

int exit_code(std::span<const VerificationReport> reports) {
    Verdict worst = Verdict::kPass;
    for (const auto& r : reports) {
        worst = combine(worst, r.verdict);
    }
    switch (worst) {
        case Verdict::kPass:
            return kExitPass;
        case Verdict::kIncompleteUniverse:
        case Verdict::kIncomplete:
            return kExitIncomplete;
        case Verdict::kIndeterminate:
        case Verdict::kFail:
            return kExitFail;
    }
    return kExitFail;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& log) {
    std::vector<VerificationReport> reports;
    try {
        reports = run_claims(config, log);
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
        if (config.out) {
            VerificationReport r;
            for (const auto& c : config.claims) {
                r.claim += (r.claim.empty() ? "" : ",") + c;
            }
            r.tier = config.tier;
            r.completeness = "not run";
            r.add_row("config", Verdict::kFail, {{"reason", e.what()}}, {{"error", e.what()}});
            try {
                write_text(*config.out, report_text(r));
            } catch (const Error&) {
            }
        }
        return kExitConfig;
    }
    try {
        if (config.out) {
            write_text(*config.out, reports_file_text(reports));
        }
        if (config.csv) {
            write_text(*config.csv, render_csv(reports));
        }
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    out << render_text(reports);
    return exit_code(reports);
}

}  // namespace nilorb
