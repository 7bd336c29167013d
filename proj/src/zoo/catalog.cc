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

#include "nilorb/zoo/catalog.h"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

#include "nilorb/perm/element_table.h"
#include "nilorb/perm/errors.h"
#include "nilorb/subgroups/subgroups.h"
#include "nilorb/zoo/constructions.h"

namespace nilorb {

namespace {

std::string route_name(const char* family, std::uint32_t p, std::size_t d) {
    return std::string(family) + "(" + std::to_string(d) + "," + std::to_string(p) + ")-subgroup";
}

std::string semilinear_route(std::uint32_t p, std::size_t d) {
    return "AΓL(1," + std::to_string(p) + "^" + std::to_string(d) + ")-subgroup";
}

// Irreducible classes among the solvable subgroups of the group generated by
// `ambient` (matrices), up to conjugacy in that group.
std::vector<MatrixGroup> irreducible_classes(std::uint32_t p, std::size_t d, std::span<const Matrix> ambient,
                                             const std::string& route, const RouteOptions& options) {
    LinearModule module = make_linear_action(p, d, ambient);
    auto table = std::make_shared<const ElementTable>(module.acting_group());
    EnumerationOptions enum_opts;
    enum_opts.max_order = std::max<std::uint64_t>(table->size(), options.exhaustive_threshold);
    enum_opts.jobs = options.jobs;
    enum_opts.deadline = options.deadline;
    SubgroupList list = subgroups_up_to_conjugacy(table, enum_opts);

    std::vector<MatrixGroup> out;
    std::vector<char> seen(module.size());
    std::vector<Point> orbit;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& cls = list.classes[i];
        std::fill(seen.begin(), seen.end(), 0);
        bool irreducible = d > 0;
        for (Point v = 1; v < module.size() && irreducible; ++v) {
            if (seen[v]) {
                continue;
            }
            orbit.clear();
            for (ElementId e : cls.elements) {
                Point w = table->image(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    orbit.push_back(w);
                }
            }
            irreducible = vector_rank(p, d, orbit) == d;
        }
        if (!irreducible) {
            continue;
        }
        MatrixGroup h;
        h.p = p;
        h.dim = d;
        h.order = cls.order;
        h.route = route;
        for (const auto& g : list.generators(i)) {
            h.generators.push_back(matrix_of(g, p, d));
        }
        if (h.generators.empty()) {
            h.generators.push_back(Matrix::identity(p, d));
        }
        out.push_back(std::move(h));
    }
    return out;
}

// Largest solvable irreducible group of GL(a,p) available without search.
std::optional<std::vector<Matrix>> maximal_solvable_base(std::uint32_t p, std::size_t a,
                                                         const RouteOptions& options) {
    if (general_linear_order(p, a) <= options.exhaustive_threshold) {
        auto gl = general_linear_generators(p, a);
        if (is_solvable(make_linear_action(p, a, gl).acting_group())) {
            return gl;
        }
    }
    return semilinear_generators(p, a);
}

}  // namespace

IrreducibleList irreducible_solvable_subgroups(std::uint32_t p, std::size_t d, const RouteOptions& options) {
    if (!is_prime(p) || d == 0) {
        throw InvalidArgument("irreducible_solvable_subgroups needs a prime p and d >= 1");
    }
    IrreducibleList out;
    if (d == 1) {
        // GL(1,p) is cyclic: one subgroup per divisor of p - 1.
        GaloisField f(make_field(p, 1));
        std::uint32_t w = f.primitive_element();
        for (std::uint64_t m = 1; m <= p - 1; ++m) {
            if ((p - 1) % m) {
                continue;
            }
            MatrixGroup h;
            h.p = p;
            h.dim = 1;
            h.order = m;
            h.route = route_name("AGL", p, 1);
            h.generators.push_back(Matrix{p, 1, {f.pow(w, (p - 1) / m)}});
            out.groups.push_back(std::move(h));
        }
        out.complete = true;
        out.routes.push_back("cyclic");
        return out;
    }
    if (general_linear_order(p, d) <= options.exhaustive_threshold) {
        out.groups = irreducible_classes(p, d, general_linear_generators(p, d), route_name("AGL", p, d), options);
        out.complete = true;
        out.routes.push_back("exhaustive");
        return out;
    }
    out.groups = irreducible_classes(p, d, semilinear_generators(p, d), semilinear_route(p, d), options);
    out.routes.push_back("semilinear");
    // With p = 2 and d prime, every irreducible solvable subgroup is
    // semilinear: monomial groups fix the all-ones vector and extraspecial
    // normalizers need d | p - 1.
    out.complete = p == 2 && is_prime(d);
    if (out.complete) {
        return out;
    }
    for (std::size_t a = 1; a < d; ++a) {
        std::size_t b = d / a;
        if (d % a || b > 4) {
            continue;
        }
        auto base = maximal_solvable_base(p, a, options);
        if (!base) {
            continue;
        }
        PermutationGroup sb = symmetric_group(b);
        std::vector<Matrix> gens = linear_wreath(*base, sb.generators());
        LinearModule m = make_linear_action(p, d, gens);
        if (!acts_irreducibly(m.acting_group(), p, d)) {
            continue;
        }
        MatrixGroup h;
        h.p = p;
        h.dim = d;
        h.generators = std::move(gens);
        h.order = m.acting_group().order();
        h.route = "wreath(" + std::to_string(a) + "," + std::to_string(p) + ")^" + std::to_string(b);
        out.routes.push_back(h.route);
        out.groups.push_back(std::move(h));
    }
    return out;
}

const std::vector<CatalogEntry>& Catalog::at(std::size_t degree) const {
    auto it = entries.find(degree);
    if (it == entries.end()) {
        throw InvalidArgument("catalog has no entries at degree " + std::to_string(degree));
    }
    return it->second;
}

std::size_t Catalog::size() const {
    std::size_t n = 0;
    for (const auto& [degree, list] : entries) {
        n += list.size();
    }
    return n;
}

std::optional<std::pair<std::uint32_t, std::size_t>> prime_power(std::uint64_t n) {
    if (n < 2) {
        return std::nullopt;
    }
    auto f = factorize(n);
    if (f.size() != 1) {
        return std::nullopt;
    }
    return std::make_pair(static_cast<std::uint32_t>(f[0].first), static_cast<std::size_t>(f[0].second));
}

int degree_tier(std::size_t n) {
    static const std::set<std::size_t> tier1{2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32};
    return tier1.contains(n) || is_prime(n) ? 1 : 2;
}

void check_catalog_degree(std::size_t n) {
    if (!prime_power(n)) {
        throw InvalidArgument(std::to_string(n) +
                              " is not a prime power; solvable primitive groups have prime-power degree");
    }
    if (n > kMaxCatalogDegree) {
        throw InvalidArgument("degree " + std::to_string(n) + " exceeds the catalog limit " +
                              std::to_string(kMaxCatalogDegree));
    }
}

CatalogEntry make_catalog_entry(std::uint32_t p, std::size_t d, const MatrixGroup& h) {
    CatalogEntry e;
    e.prime = p;
    e.dimension = d;
    e.group = affine_group(p, d, h.generators);
    e.degree = e.group.degree();
    e.stabilizer = h.generators;
    e.order = e.group.order();
    e.route = h.route;
    if (e.order != h.order * e.degree) {
        throw InternalError("affine group order differs from |V| * |H|");
    }
    e.flags = classify(e.group);
    if (!e.flags.is_primitive || !e.flags.is_solvable) {
        throw InternalError("catalog candidate from route " + h.route + " is not solvable primitive");
    }
    return e;
}

std::string entry_fingerprint(const CatalogEntry& entry, std::uint64_t profile_cap) {
    std::ostringstream out;
    out << entry.order.str() << "|";
    std::vector<std::size_t> sizes;
    for (const auto& orbit : orbit_partition(entry.group.point_stabilizer(0))) {
        sizes.push_back(orbit.size());
    }
    std::sort(sizes.begin(), sizes.end());
    for (std::size_t s : sizes) {
        out << s << ",";
    }
    if (entry.order <= profile_cap) {
        out << "|";
        for (auto [o, c] : order_profile(entry.group)) {
            out << o << ":" << c << ",";
        }
    }
    return out.str();
}

namespace {

bool entry_less(const CatalogEntry& a, const CatalogEntry& b) {
    if (a.order != b.order) {
        return a.order < b.order;
    }
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end(),
                                        [](const Permutation& x, const Permutation& y) {
                                            return x.to_string() < y.to_string();
                                        });
}

}  // namespace

std::vector<CatalogEntry> solvable_primitive_catalog(std::size_t n, const RouteOptions& options, DegreeInfo* info) {
    check_catalog_degree(n);
    auto [p, d] = *prime_power(n);
    IrreducibleList list = irreducible_solvable_subgroups(p, d, options);
    std::vector<CatalogEntry> entries;
    std::vector<std::string> prints;
    for (const auto& h : list.groups) {
        options.deadline.check();
        CatalogEntry e = make_catalog_entry(p, d, h);
        // Routes can overlap only outside the exhaustive and cyclic cases; an
        // exact repeat of a group is dropped.
        std::string fp = entry_fingerprint(e);
        bool repeat = false;
        for (std::size_t i = 0; i < entries.size() && !repeat; ++i) {
            repeat = prints[i] == fp && entries[i].group.contains_group(e.group);
        }
        if (!repeat) {
            prints.push_back(std::move(fp));
            entries.push_back(std::move(e));
        }
    }
    std::stable_sort(entries.begin(), entries.end(), entry_less);
    if (info) {
        info->degree = n;
        info->tier = degree_tier(n);
        info->complete = list.complete;
        info->routes = list.routes;
        info->entry_count = entries.size();
    }
    return entries;
}

Catalog build_catalog(std::span<const std::size_t> degrees, const RouteOptions& options) {
    Catalog catalog;
    std::vector<std::size_t> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t n : sorted) {
        check_catalog_degree(n);
    }
    for (std::size_t n : sorted) {
        DegreeInfo info;
        catalog.entries[n] = solvable_primitive_catalog(n, options, &info);
        catalog.info[n] = info;
    }
    return catalog;
}

}  // namespace nilorb
