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

#include "nilorb/verify/module_theorems.h"

#include <algorithm>
#include <chrono>

#include "nilorb/linear/field.h"
#include "nilorb/perm/errors.h"
#include "nilorb/subgroups/subgroups.h"
#include "nilorb/zoo/catalog.h"

namespace nilorb {

using nlohmann::json;

namespace {

json generators_json(std::span<const Permutation> gens) {
    json out = json::array();
    for (const auto& g : gens) {
        out.push_back(g.to_string());
    }
    return out;
}

template <class F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t smallest_prime(std::uint64_t n) { return factorize(n).front().first; }

std::string field_label(std::uint32_t p, std::size_t n) { return std::to_string(p) + "^" + std::to_string(n); }

enum class Annotation { kNotNilpotent, kOrbit, kRegular };

struct GammaRow {
    std::uint32_t p;
    std::size_t n;
    std::uint64_t c;
    std::uint64_t f;
    Annotation kind;
    std::uint64_t orbit = 0;
};

const std::vector<GammaRow>& gamma_rows() {
    static const std::vector<GammaRow> rows{
        {2, 2, 3, 2, Annotation::kNotNilpotent},     {2, 3, 7, 3, Annotation::kNotNilpotent},
        {3, 2, 8, 2, Annotation::kOrbit, 8},         {2, 4, 15, 4, Annotation::kOrbit, 15},
        {2, 4, 3, 4, Annotation::kRegular},          {2, 4, 5, 4, Annotation::kNotNilpotent},
        {3, 3, 13, 3, Annotation::kNotNilpotent},    {3, 3, 2, 3, Annotation::kRegular},
        {2, 5, 31, 5, Annotation::kOrbit, 31},       {2, 6, 9, 6, Annotation::kOrbit, 27},
        {2, 6, 7, 6, Annotation::kOrbit, 21},        {2, 7, 127, 7, Annotation::kOrbit, 127},
    };
    return rows;
}

std::string annotation_text(const GammaRow& r) {
    switch (r.kind) {
        case Annotation::kNotNilpotent:
            return "not nilpotent";
        case Annotation::kOrbit:
            return "orbit of size " + std::to_string(r.orbit);
        case Annotation::kRegular:
            return "regular orbit";
    }
    return "";
}

}  // namespace

OrbitReport orbit_extremes(const PermutationGroup& h) {
    const std::size_t n = h.degree();
    OrbitReport r;
    r.group_order = to_u64(h.order());
    r.min_centralizer = r.group_order;
    std::vector<char> seen(n, 0);
    std::vector<Point> queue;
    bool have_min = false;
    for (Point x = 0; x < n; ++x) {
        if (seen[x]) {
            continue;
        }
        ++r.orbit_count;
        queue.assign(1, x);
        seen[x] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (const auto& g : h.generators()) {
                Point y = g[queue[i]];
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
        std::uint64_t size = queue.size();
        r.orbit_sizes.push_back(size);
        if (size > r.max_orbit) {
            r.max_orbit = size;
            r.witness = x;
        }
        std::uint64_t centralizer = r.group_order / size;
        if ((x != 0 || size > 1) && (!have_min || centralizer < r.min_centralizer)) {
            have_min = true;
            r.min_centralizer = centralizer;
            r.min_centralizer_point = x != 0 ? x : queue[1];
        }
    }
    std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
    r.orbit_sizes.erase(std::unique(r.orbit_sizes.begin(), r.orbit_sizes.end()), r.orbit_sizes.end());
    r.regular_orbit = r.min_centralizer == 1 && have_min;
    r.witness_centralizer = to_u64(h.point_stabilizer(r.witness).order());
    if (r.witness_centralizer * r.max_orbit != r.group_order) {
        throw InternalError("orbit-stabilizer identity failed at the largest orbit");
    }
    if (have_min && to_u64(h.point_stabilizer(r.min_centralizer_point).order()) != r.min_centralizer) {
        throw InternalError("orbit-stabilizer identity failed at the smallest centralizer");
    }
    return r;
}

OrbitReport orbit_extremes_on_module(const PermutationGroup& h, const LinearModule& v) {
    if (h.degree() != v.size()) {
        throw InvalidArgument("group does not act on the points of the module");
    }
    return orbit_extremes(h);
}

MainTheoremResult check_main_theorems(const PermutationGroup& g, const LinearModule& v, const VerifyOptions& options) {
    if (g.degree() != v.size()) {
        throw InvalidArgument("group does not act on the points of the module");
    }
    for (const auto& x : g.generators()) {
        if (!v.is_additive(x)) {
            throw InvalidArgument("group does not act on the module by automorphisms");
        }
    }
    EnumerationOptions eo;
    eo.max_order = options.nilpotent_cap;
    eo.deadline = options.deadline;
    SubgroupList list = nilpotent_subgroups(g, eo);
    MainTheoremResult out;
    BigInt tight_num = 0;
    BigInt tight_den = 1;
    for (std::size_t j = 0; j < list.size(); ++j) {
        const SubgroupClass& cls = list.classes[j];
        if (cls.order == 1) {
            continue;
        }
        options.deadline.check();
        ++out.classes;
        PermutationGroup h = list.group(j);
        OrbitReport orbits = orbit_extremes_on_module(h, v);
        const std::uint64_t p = smallest_prime(cls.order);
        const BigInt order = cls.order;
        BigInt cp = big_pow(orbits.min_centralizer, p);
        bool centralizer_ok = p * cp <= order;
        bool even = cls.order % 2 == 0;
        bool orbit_ok = !even || 2 * order <= BigInt(orbits.max_orbit) * orbits.max_orbit;
        if (p == 2 && centralizer_ok && !orbit_ok) {
            throw InternalError("centralizer bound held but the orbit bound failed for p = 2");
        }
        out.even_classes += even;
        out.centralizer_failures += !centralizer_ok;
        out.orbit_failures += !orbit_ok;
        auto class_json = [&] {
            return json{{"generators", generators_json(list.generators(j))},
                        {"order", cls.order},
                        {"p", p},
                        {"max_orbit", orbits.max_orbit},
                        {"orbit_witness", orbits.witness},
                        {"min_centralizer", orbits.min_centralizer},
                        {"centralizer_witness", orbits.min_centralizer_point},
                        {"centralizer_bound", centralizer_ok},
                        {"orbit_bound", even ? json(orbit_ok) : json(nullptr)}};
        };
        if ((!centralizer_ok || !orbit_ok) && out.first_failure.is_null()) {
            out.first_failure = class_json();
        }
        BigInt den = p * cp;
        if (out.tightest.is_null() || order * tight_den < tight_num * den) {
            tight_num = order;
            tight_den = den;
            out.tightest = class_json();
        }
    }
    return out;
}

VerificationReport verify_main_theorems(const PermutationGroup& g, const LinearModule& v, const std::string& label,
                                        const VerifyOptions& options) {
    std::vector<ModuleCase> cases{{label, LinearModule(v.summands(), g)}};
    return main_theorems_report(cases, options);
}

std::vector<ModuleCase> main_theorem_universe(const std::vector<std::pair<std::uint32_t, std::size_t>>& fields,
                                              bool pairwise) {
    std::vector<ModuleCase> base;
    for (auto [p, d] : fields) {
        IrreducibleList list = irreducible_solvable_subgroups(p, d);
        for (std::size_t i = 0; i < list.groups.size(); ++i) {
            const MatrixGroup& h = list.groups[i];
            std::string label = "GL(" + std::to_string(d) + "," + std::to_string(p) + ")#" + std::to_string(i) +
                                "[" + h.order.str() + "]";
            base.push_back({label, make_linear_action(p, d, h.generators)});
        }
    }
    std::vector<ModuleCase> out = base;
    if (!pairwise) {
        return out;
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i; j < base.size(); ++j) {
            std::vector<LinearModule> parts{base[i].module, base[j].module};
            SumAction action = i == j ? SumAction::kWreath : SumAction::kDirectProduct;
            std::string label = base[i].label + (i == j ? " wr 2" : " + " + base[j].label);
            out.push_back({label, direct_sum_module(parts, action)});
        }
    }
    return out;
}

VerificationReport main_theorems_report(const std::vector<ModuleCase>& cases, const VerifyOptions& options) {
    VerificationReport report;
    report.claim = "main-theorems";
    json labels = json::array();
    for (const auto& c : cases) {
        labels.push_back(c.label);
    }
    report.universe = {{"modules", labels}};
    report.runtime_ms = timed([&] {
        std::vector<MainTheoremResult> results(cases.size());
        std::vector<char> timed_out(cases.size(), 0);
        parallel_for(cases.size(), options.jobs, [&](std::size_t i) {
            try {
                results[i] = check_main_theorems(cases[i].module.acting_group(), cases[i].module, options);
            } catch (const DeadlineExceeded&) {
                timed_out[i] = 1;
            }
        });
        for (std::size_t i = 0; i < cases.size(); ++i) {
            if (timed_out[i]) {
                report.add_row(cases[i].label, Verdict::kIncomplete, {{"reason", "time budget exhausted"}});
                continue;
            }
            const auto& r = results[i];
            bool ok = r.centralizer_failures == 0 && r.orbit_failures == 0;
            report.add_row(cases[i].label, ok ? Verdict::kPass : Verdict::kFail,
                           {{"points", cases[i].module.size()},
                            {"group_order", cases[i].module.acting_group().order().str()},
                            {"nilpotent_classes", r.classes},
                            {"even_classes", r.even_classes},
                            {"centralizer_failures", r.centralizer_failures},
                            {"orbit_failures", r.orbit_failures},
                            {"tightest", r.tightest}},
                           ok ? json(nullptr) : r.first_failure);
        }
    });
    return report;
}

std::vector<std::pair<std::uint32_t, std::size_t>> annotated_gamma_fields() {
    return {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {2, 5}, {2, 6}, {2, 7}};
}

namespace {

void add_gamma_rows(VerificationReport& report, std::uint32_t p, std::size_t n, const VerifyOptions& options) {
    GammaGroups g = make_gamma(p, static_cast<std::uint32_t>(n));
    EnumerationOptions eo;
    eo.deadline = options.deadline;
    eo.jobs = options.jobs;
    SubgroupList list = subgroups_up_to_conjugacy(g.gamma, eo);
    const std::uint64_t q = g.gamma.degree();

    // Largest fixed-vector count of an element outside Gamma_0, against
    // |V|^(1/2); non-identity multiplications fix only 0.
    std::uint64_t max_fixed = 0;
    g.gamma.for_each_element([&](const Permutation& x) {
        if (!g.gamma0.contains(x)) {
            max_fixed = std::max<std::uint64_t>(max_fixed, cycle_stats(x).fixed_points);
        }
        return true;
    });

    json classes = json::array();
    struct Info {
        std::uint64_t c, f;
        bool nilpotent;
        OrbitReport orbits;
        std::size_t index;
    };
    std::vector<Info> infos;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const SubgroupClass& cls = list.classes[i];
        std::uint64_t c = 0;
        for (ElementId e : cls.elements) {
            c += g.gamma0.contains(list.table->permutation(e));
        }
        PermutationGroup h = list.group(i);
        Info info{c, cls.order / c, cls.nilpotent, orbit_extremes(h), i};
        classes.push_back({{"c", info.c},
                           {"f", info.f},
                           {"order", cls.order},
                           {"nilpotent", info.nilpotent},
                           {"max_orbit", info.orbits.max_orbit},
                           {"orbit_sizes", info.orbits.orbit_sizes},
                           {"regular_orbit", info.orbits.regular_orbit},
                           {"generators", generators_json(list.generators(i))}});
        infos.push_back(info);
    }
    std::string field = field_label(p, n);
    bool sqrt_bound = max_fixed * max_fixed <= q;
    report.numbers["fields"][field] = {{"gamma_order", g.gamma.order().str()},
                                       {"classes", classes},
                                       {"max_fixed_outside_gamma0", max_fixed},
                                       {"fixed_at_most_sqrt_v", sqrt_bound}};

    bool annotated = false;
    for (const GammaRow& row : gamma_rows()) {
        if (row.p != p || row.n != n) {
            continue;
        }
        annotated = true;
        json matches = json::array();
        bool agree = true;
        for (const Info& info : infos) {
            if (info.c != row.c || info.f != row.f) {
                continue;
            }
            bool ok = false;
            switch (row.kind) {
                case Annotation::kNotNilpotent:
                    ok = !info.nilpotent;
                    break;
                case Annotation::kOrbit:
                    ok = std::binary_search(info.orbits.orbit_sizes.begin(), info.orbits.orbit_sizes.end(),
                                            row.orbit);
                    break;
                case Annotation::kRegular:
                    ok = info.orbits.regular_orbit;
                    break;
            }
            agree = agree && ok;
            matches.push_back(classes[info.index]);
        }
        agree = agree && !matches.empty();
        std::string label = field + " c=" + std::to_string(row.c) + " f=" + std::to_string(row.f);
        json fields = {{"annotation", annotation_text(row)}, {"matching_classes", matches.size()}, {"agree", agree}};
        if (!matches.empty()) {
            fields["nilpotent"] = matches[0]["nilpotent"];
            fields["max_orbit"] = matches[0]["max_orbit"];
            fields["orbit_sizes"] = matches[0]["orbit_sizes"];
            fields["regular_orbit"] = matches[0]["regular_orbit"];
        }
        report.add_row(label, agree ? Verdict::kPass : Verdict::kFail, fields,
                       agree ? json(nullptr) : json{{"annotation", annotation_text(row)}, {"classes", matches}});
        if (!agree) {
            report.add_finding(label, {{"annotation", annotation_text(row)}, {"matching_classes", matches.size()}});
        }
    }
    if (!annotated) {
        report.add_row(field, Verdict::kPass, {{"annotation", nullptr}, {"classes", classes.size()}});
    }
}

}  // namespace

VerificationReport gamma_case_report(std::uint32_t p, std::size_t n, const VerifyOptions& options) {
    VerificationReport report;
    report.claim = "gamma-cases";
    report.universe = {{"fields", {field_label(p, n)}}};
    report.runtime_ms = timed([&] { add_gamma_rows(report, p, n, options); });
    return report;
}

VerificationReport gamma_cases_report(const VerifyOptions& options) {
    VerificationReport report;
    report.claim = "gamma-cases";
    json fields = json::array();
    for (auto [p, n] : annotated_gamma_fields()) {
        fields.push_back(field_label(p, n));
    }
    report.universe = {{"fields", fields}};
    report.runtime_ms = timed([&] {
        for (auto [p, n] : annotated_gamma_fields()) {
            add_gamma_rows(report, p, n, options);
        }
    });
    return report;
}

}  // namespace nilorb
