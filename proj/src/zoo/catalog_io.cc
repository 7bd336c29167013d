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

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nilorb/perm/errors.h"
#include "nilorb/zoo/catalog.h"

namespace nilorb {

namespace {

using nlohmann::json;

json flags_to_json(const GroupFlags& f) {
    return {{"abelian", f.is_abelian},
            {"nilpotent", f.is_nilpotent},
            {"primitive", f.is_primitive},
            {"solvable", f.is_solvable},
            {"transitive", f.is_transitive}};
}

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim; ++c) {
            row.push_back(m.at(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json entry_to_json(const CatalogEntry& e) {
    json gens = json::array();
    for (const auto& g : e.generators()) {
        gens.push_back(g.to_string());
    }
    json stab = json::array();
    for (const auto& m : e.stabilizer) {
        stab.push_back(matrix_rows(m));
    }
    return {{"v", kCatalogSchemaVersion},
            {"degree", e.degree},
            {"p", e.prime},
            {"d", e.dimension},
            {"gens", std::move(gens)},
            {"order", e.order.str()},
            {"flags", flags_to_json(e.flags)},
            {"route", e.route},
            {"stabilizer", std::move(stab)}};
}

json info_to_json(const DegreeInfo& info) {
    return {{"v", kCatalogSchemaVersion},
            {"meta",
             {{"complete", info.complete},
              {"degree", info.degree},
              {"entry_count", info.entry_count},
              {"routes", info.routes},
              {"tier", info.tier}}}};
}

bool flag(const json& flags, const char* key) {
    auto it = flags.find(key);
    return it != flags.end() && it->get<bool>();
}

CatalogEntry entry_from_json(const json& j) {
    CatalogEntry e;
    e.degree = j.at("degree").get<std::size_t>();
    e.prime = j.at("p").get<std::uint32_t>();
    e.dimension = j.at("d").get<std::size_t>();
    e.route = j.at("route").get<std::string>();
    std::vector<Permutation> gens;
    for (const auto& g : j.at("gens")) {
        gens.push_back(Permutation::parse(g.get<std::string>()));
    }
    if (gens.empty()) {
        throw FormatError("catalog entry without generators");
    }
    for (const auto& g : gens) {
        if (g.degree() != e.degree) {
            throw FormatError("generator degree differs from entry degree " + std::to_string(e.degree));
        }
    }
    e.group = PermutationGroup::build(std::move(gens));
    e.order = parse_decimal(j.at("order").get<std::string>());
    if (e.order != e.group.order()) {
        throw FormatError("stored order " + e.order.str() + " differs from the re-derived order " +
                          e.group.order().str());
    }
    for (const auto& rows : j.at("stabilizer")) {
        std::vector<std::vector<std::int64_t>> r = rows.get<std::vector<std::vector<std::int64_t>>>();
        Matrix m = Matrix::from_rows(e.prime, r);
        if (m.dim != e.dimension || !e.group.contains(matrix_permutation(m))) {
            throw FormatError("stabilizer matrix does not lie in the entry group");
        }
        e.stabilizer.push_back(std::move(m));
    }
    e.flags = classify(e.group);
    const json& flags = j.at("flags");
    if (flag(flags, "primitive") != e.flags.is_primitive || flag(flags, "solvable") != e.flags.is_solvable) {
        throw FormatError("stored flags differ from the re-derived flags");
    }
    return e;
}

DegreeInfo info_from_json(const json& m) {
    DegreeInfo info;
    info.degree = m.at("degree").get<std::size_t>();
    info.tier = m.at("tier").get<int>();
    info.complete = m.at("complete").get<bool>();
    info.routes = m.at("routes").get<std::vector<std::string>>();
    info.entry_count = m.at("entry_count").get<std::size_t>();
    return info;
}

}  // namespace

std::string catalog_to_string(const Catalog& catalog) {
    std::string out;
    for (const auto& [degree, info] : catalog.info) {
        out += info_to_json(info).dump() + "\n";
    }
    for (const auto& [degree, list] : catalog.entries) {
        for (const auto& e : list) {
            out += entry_to_json(e).dump() + "\n";
        }
    }
    return out;
}

Catalog catalog_from_string(const std::string& text) {
    Catalog catalog;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            json j = json::parse(line);
            if (!j.is_object() || !j.contains("v")) {
                throw FormatError("missing schema version");
            }
            if (j.at("v") != kCatalogSchemaVersion) {
                throw FormatError("schema version " + j.at("v").dump() + " is not supported (expected " +
                                  std::to_string(kCatalogSchemaVersion) + ")");
            }
            if (j.contains("meta")) {
                DegreeInfo info = info_from_json(j.at("meta"));
                catalog.info[info.degree] = info;
                catalog.entries[info.degree];
            } else {
                CatalogEntry e = entry_from_json(j);
                std::size_t n = e.degree;
                catalog.entries[n].push_back(std::move(e));
            }
        } catch (const FormatError& err) {
            throw FormatError("catalog line " + std::to_string(line_no) + ": " + err.what());
        } catch (const json::exception& err) {
            throw FormatError("catalog line " + std::to_string(line_no) + ": " + err.what());
        } catch (const InvalidArgument& err) {
            throw FormatError("catalog line " + std::to_string(line_no) + ": " + err.what());
        }
    }
    for (const auto& [degree, info] : catalog.info) {
        if (catalog.entries[degree].size() != info.entry_count) {
            throw FormatError("degree " + std::to_string(degree) + " lists " + std::to_string(info.entry_count) +
                              " entries but the file holds " + std::to_string(catalog.entries[degree].size()));
        }
    }
    return catalog;
}

void catalog_store(const Catalog& catalog, const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write " + tmp.string());
        }
        out << catalog_to_string(catalog);
        if (!out.flush()) {
            throw Error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

Catalog catalog_load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return catalog_from_string(text.str());
}

}  // namespace nilorb
