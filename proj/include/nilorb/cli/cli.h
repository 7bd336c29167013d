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

#ifndef NILORB_CLI_CLI_H
#define NILORB_CLI_CLI_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "nilorb/verify/report.h"
#include "nilorb/zoo/catalog.h"

namespace nilorb {

enum ExitCode : int {
    kExitPass = 0,
    kExitFail = 1,
    kExitConfig = 2,
    kExitIncomplete = 3,
};

struct RunConfig {
    std::optional<std::filesystem::path> cache_dir;
    /// Empty selects the tier defaults of each claim.
    std::vector<std::size_t> degrees;
    int tier = 1;
    std::vector<std::string> claims;
    unsigned jobs = 1;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> csv;
    /// Per-claim budget; zero means none.
    double max_seconds = 0;
    std::uint64_t nilpotent_cap = 1'000'000;
    std::uint64_t exhaustive_threshold = 25'000;
    std::uint64_t max_n = 4096;
};

/// table1, lemma24, lemma25, thmperm2, inequalities, gamma-cases,
/// main-theorems.
const std::vector<std::string>& claim_names();

/// Claims that take a degree list.
bool claim_uses_degrees(const std::string& claim);

/// Degrees a claim covers at a tier; tier 2 includes the tier-1 degrees.
std::vector<std::size_t> default_degrees(const std::string& claim, int tier);

/// Throws InvalidArgument for unknown claims, bad tiers, zero jobs and
/// unsupported degrees.
void validate(const RunConfig& config);

/// NILORB_CACHE, when set and non-empty.
std::optional<std::filesystem::path> default_cache_dir();

/// Content hash recorded in the cache manifest (FNV-1a, 64 bits, hex).
std::string content_hash(std::string_view bytes);

inline constexpr int kManifestSchemaVersion = 1;

/// Catalogs per degree, kept as one JSON-lines file per degree plus
/// manifest.json. Without a directory it only builds in memory.
class CatalogCache {
  public:
    CatalogCache(std::optional<std::filesystem::path> dir, RouteOptions options, std::ostream* log = nullptr);

    /// The catalog restricted to `degrees`, building only what the manifest
    /// does not vouch for.
    Catalog get(std::span<const std::size_t> degrees);

    std::size_t constructions() const { return constructions_; }
    std::size_t hits() const { return hits_; }
    const nlohmann::json& manifest() const { return manifest_; }

  private:
    void load_manifest();
    void store_manifest() const;

    std::optional<std::filesystem::path> dir_;
    RouteOptions options_;
    std::ostream* log_;
    nlohmann::json manifest_;
    std::size_t constructions_ = 0;
    std::size_t hits_ = 0;
};

/// One report per claim, sorted by claim name.
std::vector<VerificationReport> run_claims(const RunConfig& config, std::ostream& log);

/// 1 for any fail or indeterminate verdict, else 3 for any incomplete
/// verdict, else 0.
int exit_code(std::span<const VerificationReport> reports);

/// Runs, writes the report files and prints the text table. Returns the exit
/// code; configuration errors give kExitConfig.
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& log);

/// A single report as an object, several as an array.
std::string reports_file_text(std::span<const VerificationReport> reports);

/// Accepts either layout. Throws FormatError on schema mismatches.
std::vector<VerificationReport> reports_from_text(const std::string& text);
std::vector<VerificationReport> load_reports(const std::filesystem::path& path);

/// Copy without runtime_ms, for byte comparisons.
nlohmann::json normalized(const VerificationReport& report);

/// Header "claim,case,verdict,value" and one row per case; verdicts in
/// capitals.
std::string render_csv(std::span<const VerificationReport> reports);

/// Human-readable table; table1 uses the two-column degree / largest |H|
/// layout.
std::string render_text(std::span<const VerificationReport> reports);

}  // namespace nilorb

#endif
