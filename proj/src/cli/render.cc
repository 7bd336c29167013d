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
#include <cctype>
#include <fstream>
#include <sstream>

#include "nilorb/cli/cli.h"
#include "nilorb/perm/errors.h"

namespace nilorb {

using nlohmann::json;

namespace {

bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Numeric labels first and in numeric order, the rest lexicographically.
bool label_less(const std::string& a, const std::string& b) {
    bool na = is_number(a);
    bool nb = is_number(b);
    if (na != nb) {
        return na;
    }
    if (na && a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

std::vector<std::string> sorted_labels(const VerificationReport& r) {
    std::vector<std::string> out;
    if (r.numbers.contains("rows")) {
        for (const auto& [label, row] : r.numbers["rows"].items()) {
            out.push_back(label);
        }
    }
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            out += (out.empty() ? "" : ";") + scalar_text(x);
        }
        return out;
    }
    return v.dump();
}

std::string row_value(const json& row) {
    for (const char* key : {"largest", "failures", "threshold", "failing", "annotation", "nilpotent_classes", "reason"}) {
        if (row.contains(key)) {
            return scalar_text(row[key]);
        }
    }
    return "";
}

std::string upper(std::string s) {
    for (char& c : s) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return s;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

}  // namespace

json normalized(const VerificationReport& report) {
    json j = report_to_json(report);
    j.erase("runtime_ms");
    return j;
}

std::string reports_file_text(std::span<const VerificationReport> reports) {
    if (reports.size() == 1) {
        return report_text(reports[0]);
    }
    json all = json::array();
    for (const auto& r : reports) {
        all.push_back(report_to_json(r));
    }
    return all.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("report file is not JSON: ") + e.what());
    }
    std::vector<VerificationReport> out;
    if (j.is_array()) {
        for (const auto& r : j) {
            out.push_back(report_from_json(r));
        }
    } else {
        out.push_back(report_from_json(j));
    }
    return out;
}

std::vector<VerificationReport> load_reports(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return reports_from_text(text.str());
}

std::string render_csv(std::span<const VerificationReport> reports) {
    std::string out = "claim,case,verdict,value\n";
    for (const auto& r : reports) {
        for (const auto& label : sorted_labels(r)) {
            const json& row = r.numbers["rows"][label];
            out += csv_field(r.claim) + "," + csv_field(label) + "," + upper(row.value("verdict", "")) + "," +
                   csv_field(row_value(row)) + "\n";
        }
    }
    return out;
}

std::string render_text(std::span<const VerificationReport> reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << r.claim << ": " << upper(verdict_name(r.verdict)) << "  (tier " << r.tier << ", " << r.completeness
            << ")\n";
        std::vector<std::string> lines;
        if (r.claim == "table1") {
            lines.push_back(pad("n", 6) + "largest |H|");
            for (const auto& label : sorted_labels(r)) {
                const json& row = r.numbers["rows"][label];
                std::string line = pad(label, 6) + pad(row.contains("largest") ? scalar_text(row["largest"]) : "-", 12);
                std::string v = row.value("verdict", "");
                if (v != "pass") {
                    line += upper(v);
                    if (row.contains("expected") && !row["expected"].is_null()) {
                        line += " (expected " + row["expected"].dump() + ")";
                    } else if (row.contains("reason")) {
                        line += " (" + scalar_text(row["reason"]) + ")";
                    }
                }
                lines.push_back(line);
            }
        } else {
            std::size_t width = 6;
            for (const auto& label : sorted_labels(r)) {
                width = std::max(width, label.size() + 2);
            }
            for (const auto& label : sorted_labels(r)) {
                const json& row = r.numbers["rows"][label];
                lines.push_back(pad(label, width) + pad(upper(row.value("verdict", "")), 22) + row_value(row));
            }
        }
        for (auto& line : lines) {
            line.erase(line.find_last_not_of(' ') + 1);
            out << "  " << line << "\n";
        }
        std::size_t findings = 0;
        for (const auto& w : r.witnesses) {
            findings += w.value("kind", "") == "finding";
        }
        if (findings) {
            out << "  findings: " << findings << "\n";
        }
    }
    return out.str();
}

}  // namespace nilorb
