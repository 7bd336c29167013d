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

#ifndef NILORB_VERIFY_REPORT_H
#define NILORB_VERIFY_REPORT_H

#include <string>
#include <string_view>

#include "json.hpp"

namespace nilorb {

/// Ordered by severity; combining two verdicts keeps the more severe one.
enum class Verdict {
    kPass,
    kIncompleteUniverse,
    /// The run stopped at its time budget.
    kIncomplete,
    kIndeterminate,
    kFail,
};

std::string verdict_name(Verdict v);
/// Throws FormatError on an unknown name.
Verdict parse_verdict(std::string_view name);
Verdict combine(Verdict a, Verdict b);

inline constexpr int kReportSchemaVersion = 1;

/// Result of one claim over its universe. Per-case outcomes live in
/// numbers["rows"], keyed by a case label (a degree, a module, a field).
struct VerificationReport {
    std::string claim;
    nlohmann::json universe = nlohmann::json::object();
    Verdict verdict = Verdict::kPass;
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json numbers = nlohmann::json::object();
    double runtime_ms = 0;
    int tier = 1;
    std::string completeness = "complete";

    /// Records one case. A failing case must bring a witness; it is appended
    /// to `witnesses` with the label attached.
    void add_row(const std::string& label, Verdict v, nlohmann::json fields,
                 nlohmann::json witness = nullptr);
    /// Informational witness that does not change the verdict.
    void add_finding(const std::string& label, nlohmann::json finding);
};

nlohmann::json report_to_json(const VerificationReport& report);
/// Throws FormatError on missing keys or a different schema version.
VerificationReport report_from_json(const nlohmann::json& j);

/// Pretty JSON text with sorted keys and a trailing newline.
std::string report_text(const VerificationReport& report);

}  // namespace nilorb

#endif
