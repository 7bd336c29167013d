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

#include <iostream>

#include "CLI11.hpp"
#include "nilorb/cli/cli.h"
#include "nilorb/perm/errors.h"

using namespace nilorb;

namespace {

std::vector<std::string> expand_claims(const std::vector<std::string>& requested) {
    std::vector<std::string> out;
    for (const auto& c : requested) {
        if (c == "all") {
            out.insert(out.end(), claim_names().begin(), claim_names().end());
        } else {
            out.push_back(c);
        }
    }
    return out;
}

int catalog_build(const RunConfig& config) {
    validate(config);
    if (!config.cache_dir) {
        throw InvalidArgument("catalog build needs --cache or NILORB_CACHE");
    }
    RouteOptions route;
    route.exhaustive_threshold = config.exhaustive_threshold;
    route.jobs = config.jobs;
    CatalogCache cache(config.cache_dir, route, &std::cerr);
    std::vector<std::size_t> degrees = config.degrees;
    if (degrees.empty()) {
        degrees = default_degrees("lemma24", config.tier);
    }
    Catalog c = cache.get(degrees);
    for (const auto& [n, info] : c.info) {
        std::cout << n << "\tentries=" << info.entry_count << "\ttier=" << info.tier
                  << "\tcomplete=" << (info.complete ? "yes" : "no") << "\troutes=";
        for (std::size_t i = 0; i < info.routes.size(); ++i) {
            std::cout << (i ? ";" : "") << info.routes[i];
        }
        std::cout << "\n";
    }
    std::cerr << "constructions: " << cache.constructions() << "\n";
    return kExitPass;
}

int catalog_list(const RunConfig& config) {
    if (!config.cache_dir) {
        throw InvalidArgument("catalog list needs --cache or NILORB_CACHE");
    }
    CatalogCache cache(config.cache_dir, RouteOptions{});
    std::cout << cache.manifest().dump(2) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification driver for nilpotent subgroups of solvable primitive groups"};
    app.require_subcommand(1);

    RunConfig config;
    config.cache_dir = default_cache_dir();
    std::string cache;
    std::vector<std::string> claims;
    std::string out;
    std::string csv;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--degrees", config.degrees, "Degrees, comma separated")->delimiter(',');
        cmd->add_option("--tier", config.tier, "Degree tier (1 or 2)");
        cmd->add_option("--cache", cache, "Catalog cache directory (default $NILORB_CACHE)");
        cmd->add_option("--jobs", config.jobs, "Worker threads");
        cmd->add_option("--exhaustive-threshold", config.exhaustive_threshold,
                        "Largest |GL(d,p)| searched exhaustively");
    };

    auto* verify = app.add_subcommand("verify", "Check one or more claims");
    verify->add_option("claims", claims, "Claims (comma separated, or 'all')")->required()->delimiter(',');
    add_common(verify);
    verify->add_option("--out", out, "Report JSON file");
    verify->add_option("--csv", csv, "CSV summary file");
    verify->add_option("--max-seconds", config.max_seconds, "Time budget per claim");
    verify->add_option("--nilpotent-cap", config.nilpotent_cap, "Largest group order for nilpotent enumeration");
    verify->add_option("--max-n", config.max_n, "Upper end of the global inequality scans");

    auto* catalog = app.add_subcommand("catalog", "Build or list cached catalogs");
    catalog->require_subcommand(1);
    auto* build = catalog->add_subcommand("build", "Build catalogs into the cache");
    add_common(build);
    auto* list = catalog->add_subcommand("list", "Print the cache manifest");
    list->add_option("--cache", cache, "Catalog cache directory (default $NILORB_CACHE)");

    auto* report = app.add_subcommand("report", "Render report files");
    report->require_subcommand(1);
    auto* render = report->add_subcommand("render", "Print a report file as a table");
    std::string report_file;
    bool as_csv = false;
    render->add_option("file", report_file, "Report JSON file")->required();
    render->add_flag("--csv", as_csv, "CSV summary instead of the text table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    if (!cache.empty()) {
        config.cache_dir = cache;
    }
    if (!out.empty()) {
        config.out = out;
    }
    if (!csv.empty()) {
        config.csv = csv;
    }

    try {
        if (*verify) {
            config.claims = expand_claims(claims);
            return run_verify(config, std::cout, std::cerr);
        }
        if (*build) {
            return catalog_build(config);
        }
        if (*list) {
            return catalog_list(config);
        }
        if (*render) {
            auto reports = load_reports(report_file);
            std::cout << (as_csv ? render_csv(reports) : render_text(reports));
            return exit_code(reports);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
