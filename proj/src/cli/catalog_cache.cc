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

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "nilorb/cli/cli.h"
#include "nilorb/perm/errors.h"

namespace nilorb {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_file(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out || !(out << text) || !out.flush()) {
            throw Error("cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::string degree_file(std::size_t n) { return "degree-" + std::to_string(n) + ".jsonl"; }

}  // namespace

std::optional<fs::path> default_cache_dir() {
    const char* env = std::getenv("NILORB_CACHE");
    if (env && *env) {
        return fs::path(env);
    }
    return std::nullopt;
}

std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CatalogCache::CatalogCache(std::optional<fs::path> dir, RouteOptions options, std::ostream* log)
    : dir_(std::move(dir)), options_(std::move(options)), log_(log) {
    manifest_ = {{"schema", kManifestSchemaVersion}, {"degrees", json::object()}};
    if (dir_) {
        std::error_code ec;
        fs::create_directories(*dir_, ec);
        if (ec) {
            throw Error("cannot create cache directory " + dir_->string() + ": " + ec.message());
        }
        load_manifest();
    }
}

void CatalogCache::load_manifest() {
    fs::path path = *dir_ / "manifest.json";
    if (!fs::exists(path)) {
        return;
    }
    json m;
    try {
        m = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw FormatError("cache manifest " + path.string() + ": " + e.what());
    }
    if (!m.is_object() || m.value("schema", -1) != kManifestSchemaVersion || !m.contains("degrees")) {
        throw FormatError("cache manifest " + path.string() + " has an unsupported schema");
    }
    manifest_ = std::move(m);
}

void CatalogCache::store_manifest() const { write_file(*dir_ / "manifest.json", manifest_.dump(2) + "\n"); }

Catalog CatalogCache::get(std::span<const std::size_t> degrees) {
    for (std::size_t n : degrees) {
        check_catalog_degree(n);
    }
    Catalog out;
    for (std::size_t n : degrees) {
        if (out.contains(n)) {
            continue;
        }
        const std::string key = std::to_string(n);
        if (dir_ && manifest_["degrees"].contains(key)) {
            const json& m = manifest_["degrees"][key];
            fs::path file = *dir_ / m.value("file", degree_file(n));
            if (m.value("exhaustive_threshold", std::uint64_t{0}) == options_.exhaustive_threshold &&
                fs::exists(file)) {
                std::string text = read_file(file);
                if (content_hash(text) == m.value("hash", "")) {
                    Catalog c = catalog_from_string(text);
                    out.entries[n] = std::move(c.entries[n]);
                    out.info[n] = c.info.at(n);
                    ++hits_;
                    if (log_) {
                        *log_ << "degree " << n << ": cache hit (" << out.entries[n].size() << " entries)\n";
                    }
                    continue;
                }
                if (log_) {
                    *log_ << "degree " << n << ": cache file hash differs, rebuilding\n";
                }
            }
        }
        DegreeInfo info;
        auto entries = solvable_primitive_catalog(n, options_, &info);
        ++constructions_;
        if (log_) {
            *log_ << "degree " << n << ": built " << entries.size() << " entries\n";
        }
        out.entries[n] = std::move(entries);
        out.info[n] = info;
        if (dir_) {
            Catalog single;
            single.entries[n] = out.entries[n];
            single.info[n] = info;
            std::string text = catalog_to_string(single);
            write_file(*dir_ / degree_file(n), text);
            manifest_["degrees"][key] = {{"file", degree_file(n)},
                                         {"hash", content_hash(text)},
                                         {"entry_count", info.entry_count},
                                         {"routes", info.routes},
                                         {"complete", info.complete},
                                         {"tier", info.tier},
                                         {"exhaustive_threshold", options_.exhaustive_threshold}};
            store_manifest();
        }
    }
    return out;
}

}  // namespace nilorb
