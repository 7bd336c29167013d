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

#include "nilorb/verify/report.h"

#include "nilorb/perm/errors.h"

namespace nilorb {

using nlohmann::json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kPass:
            return "pass";
        case Verdict::kIncompleteUniverse:
            return "incomplete-universe";
        case Verdict::kIncomplete:
            return "incomplete";
        case Verdict::kIndeterminate:
            return "indeterminate";
        case Verdict::kFail:
            return "fail";
    }
    return "fail";
}

Verdict parse_verdict(std::string_view name) {
    for (Verdict v : {Verdict::kPass, Verdict::kIncompleteUniverse, Verdict::kIncomplete, Verdict::kIndeterminate,
                      Verdict::kFail}) {
        if (verdict_name(v) == name) {
            return v;
        }
    }
    throw FormatError("unknown verdict '" + std::string(name) + "'");
}

Verdict combine(Verdict a, Verdict b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

void VerificationReport::add_row(const std::string& label, Verdict v, json fields, json witness) {
    if (v == Verdict::kFail && witness.is_null()) {
        throw InternalError("failing case " + label + " of " + claim + " has no witness");
    }
    if (!fields.is_object()) {
        fields = json::object();
    }
    fields["verdict"] = verdict_name(v);
    numbers["rows"][label] = std::move(fields);
    if (!witness.is_null()) {
        witnesses.push_back({{"case", label}, {"kind", verdict_name(v)}, {"data", std::move(witness)}});
    }
    verdict = combine(verdict, v);
}

void VerificationReport::add_finding(const std::string& label, json finding) {
    witnesses.push_back({{"case", label}, {"kind", "finding"}, {"data", std::move(finding)}});
}

json report_to_json(const VerificationReport& r) {
    return {{"schema", kReportSchemaVersion},
            {"claim", r.claim},
            {"universe", r.universe},
            {"verdict", verdict_name(r.verdict)},
            {"witnesses", r.witnesses},
            {"numbers", r.numbers},
            {"runtime_ms", r.runtime_ms},
            {"tier", r.tier},
            {"completeness", r.completeness}};
}

VerificationReport report_from_json(const json& j) {
    try {
        if (!j.is_object() || j.value("schema", -1) != kReportSchemaVersion) {
            throw FormatError("report schema version differs from " + std::to_string(kReportSchemaVersion));
        }
        VerificationReport r;
        r.claim = j.at("claim").get<std::string>();
        r.universe = j.at("universe");
        r.verdict = parse_verdict(j.at("verdict").get<std::string>());
        r.witnesses = j.at("witnesses");
        r.numbers = j.at("numbers");
        r.runtime_ms = j.at("runtime_ms").get<double>();
        r.tier = j.at("tier").get<int>();
        r.completeness = j.at("completeness").get<std::string>();
        if (!r.witnesses.is_array() || !r.numbers.is_object()) {
            throw FormatError("report witnesses must be an array and numbers an object");
        }
        return r;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed report: ") + e.what());
    }
}

std::string report_text(const VerificationReport& report) { return report_to_json(report).dump(2) + "\n"; }

}  // namespace nilorb
