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

#include "nilorb/verify/lemmas.h"

#include <chrono>

#include "nilorb/perm/errors.h"

namespace nilorb {

using nlohmann::json;

namespace {

json element_json(const Permutation& g, const CycleBoundCheck& c) {
    return {{"element", g.to_string()}, {"cycles", c.cycles}, {"fixed", c.fixed}, {"order", c.order}};
}

json generators_json(std::span<const Permutation> gens) {
    json out = json::array();
    for (const auto& g : gens) {
        out.push_back(g.to_string());
    }
    return out;
}

void accumulate(Lemma24Result& into, const Lemma24Result& r) {
    into.elements += r.elements;
    into.failures += r.failures;
    into.divisibility_checked += r.divisibility_checked;
    into.middle_link_violations += r.middle_link_violations;
    if (r.max_cycles > into.max_cycles) {
        into.max_cycles = r.max_cycles;
        into.max_cycles_element = r.max_cycles_element;
    }
    if (into.first_failure.is_null()) {
        into.first_failure = r.first_failure;
    }
    if (into.middle_link_example.is_null()) {
        into.middle_link_example = r.middle_link_example;
    }
}

Lemma24Result scan(const PermutationGroup& group, std::uint64_t n, std::uint32_t p, const Deadline& deadline) {
    Lemma24Result out;
    std::uint64_t seen = 0;
    group.for_each_element([&](const Permutation& g) {
        if ((++seen & 0xfff) == 0) {
            deadline.check();
        }
        if (g.is_identity()) {
            return true;
        }
        CycleBoundCheck c = check_cycle_bounds(g, n, p);
        ++out.elements;
        if (c.fixed > 0) {
            ++out.divisibility_checked;
        }
        if (c.cycles > out.max_cycles) {
            out.max_cycles = c.cycles;
            out.max_cycles_element = element_json(g, c);
        }
        if (!c.holds()) {
            ++out.failures;
            if (out.first_failure.is_null()) {
                out.first_failure = element_json(g, c);
                out.first_failure["half_fixed"] = c.half_fixed;
                out.first_failure["order_bound"] = c.order_bound;
                out.first_failure["three_quarters"] = c.three_quarters;
                out.first_failure["fixed_divides"] = c.fixed_divides;
            }
        }
        if (!c.middle_link) {
            ++out.middle_link_violations;
            if (out.middle_link_example.is_null()) {
                out.middle_link_example = element_json(g, c);
            }
        }
        return true;
    });
    return out;
}

json lemma24_fields(const Lemma24Result& r, std::size_t entries) {
    return {{"entries", entries},
            {"elements", r.elements},
            {"failures", r.failures},
            {"fixed_point_elements", r.divisibility_checked},
            {"max_cycles", r.max_cycles},
            {"middle_link_violations", r.middle_link_violations}};
}

template <class F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void describe_catalog_universe(VerificationReport& report, const Catalog& catalog,
                               std::span<const std::size_t> degrees) {
    json degs = json::array();
    json entries = json::object();
    json complete = json::object();
    std::string missing;
    for (std::size_t n : degrees) {
        degs.push_back(n);
        std::string key = std::to_string(n);
        entries[key] = catalog.contains(n) ? catalog.at(n).size() : 0;
        bool done = catalog.info.contains(n) && catalog.info.at(n).complete;
        complete[key] = done;
        if (!done) {
            missing += (missing.empty() ? "" : ",") + key;
        }
    }
    report.universe = {{"degrees", degs}, {"entries", entries}, {"complete", complete}};
    report.completeness = missing.empty() ? "complete" : "routes incomplete at degrees " + missing;
}

CycleBoundCheck check_cycle_bounds(const Permutation& g, std::uint64_t n, std::uint32_t p) {
    CycleStats s = cycle_stats(g);
    CycleBoundCheck c;
    c.cycles = s.cycle_count;
    c.fixed = s.fixed_points;
    c.order = s.element_order;
    const std::uint64_t o = c.order;
    c.half_fixed = 2 * c.cycles <= n + c.fixed;
    c.order_bound = o * p * c.cycles <= (p + o - 1) * n;
    c.three_quarters = 4 * c.cycles <= 3 * n;
    c.fixed_divides = c.fixed == 0 || (n % p == 0 && (n / p) % c.fixed == 0);
    c.middle_link = (n + c.fixed) * o * p <= 2 * (p + o - 1) * n;
    return c;
}

Lemma24Result check_lemma24(const CatalogEntry& entry, const Deadline& deadline) {
    return scan(entry.group, entry.degree, entry.prime, deadline);
}

Lemma24Result check_cycle_bounds_transitive(const PermutationGroup& group, const Deadline& deadline) {
    if (!is_transitive(group)) {
        throw InvalidArgument("cycle bounds need a transitive group");
    }
    std::uint64_t n = group.degree();
    if (n < 2) {
        return {};
    }
    auto p = static_cast<std::uint32_t>(factorize(n).front().first);
    return scan(group, n, p, deadline);
}

VerificationReport verify_lemma24(const CatalogEntry& entry) {
    VerificationReport report;
    report.claim = "lemma24";
    report.universe = {{"degrees", {entry.degree}}, {"entry", generators_json(entry.generators())}};
    report.runtime_ms = timed([&] {
        Lemma24Result r = check_lemma24(entry);
        report.add_row(std::to_string(entry.degree), r.failures ? Verdict::kFail : Verdict::kPass,
                       lemma24_fields(r, 1), r.failures ? r.first_failure : json(nullptr));
        if (r.middle_link_violations) {
            report.add_finding(std::to_string(entry.degree), {{"middle_link", r.middle_link_example}});
        }
    });
    return report;
}

VerificationReport lemma24_report(const Catalog& catalog, std::span<const std::size_t> degrees,
                                  const VerifyOptions& options) {
    VerificationReport report;
    report.claim = "lemma24";
    describe_catalog_universe(report, catalog, degrees);
    report.runtime_ms = timed([&] {
        for (std::size_t n : degrees) {
            const auto& entries = catalog.at(n);
            std::string label = std::to_string(n);
            std::vector<Lemma24Result> parts(entries.size());
            try {
                parallel_for(entries.size(), options.jobs,
                             [&](std::size_t i) { parts[i] = check_lemma24(entries[i], options.deadline); });
            } catch (const DeadlineExceeded&) {
                report.add_row(label, Verdict::kIncomplete, {{"reason", "time budget exhausted"}});
                continue;
            }
            Lemma24Result total;
            for (const auto& r : parts) {
                accumulate(total, r);
            }
            report.add_row(label, total.failures ? Verdict::kFail : Verdict::kPass, lemma24_fields(total, entries.size()),
                           total.failures ? total.first_failure : json(nullptr));
            if (total.middle_link_violations) {
                report.add_finding(label, {{"middle_link", total.middle_link_example},
                                           {"count", total.middle_link_violations}});
            }
        }
    });
    return report;
}

LargestNilpotentOrder largest_nilpotent_order(std::size_t n, const Catalog& catalog, const VerifyOptions& options) {
    if (!catalog.contains(n) || catalog.at(n).empty()) {
        throw InvalidArgument("catalog has no entries at degree " + std::to_string(n));
    }
    const auto& entries = catalog.at(n);
    LargestNilpotentOrder out;
    out.degree = n;
    out.classes.resize(entries.size());
    EnumerationOptions eo;
    eo.max_order = options.nilpotent_cap;
    eo.deadline = options.deadline;
    parallel_for(entries.size(), options.jobs,
                 [&](std::size_t i) { out.classes[i] = nilpotent_subgroups(entries[i].group, eo); });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const SubgroupList& list = out.classes[i];
        for (std::size_t j = 0; j < list.size(); ++j) {
            std::uint64_t order = list.classes[j].order;
            if (order > out.order) {
                out.order = order;
                out.witnesses.clear();
            }
            if (order == out.order) {
                out.witnesses.push_back({i, order, list.generators(j)});
            }
        }
    }
    return out;
}

const std::map<std::size_t, std::uint64_t>& expected_largest_nilpotent() {
    static const std::map<std::size_t, std::uint64_t> table{{4, 8},   {8, 8},   {9, 27},   {16, 128}, {25, 32},
                                                            {27, 81}, {32, 32}, {49, 96}, {64, 1024}, {81, 729}};
    return table;
}

json witness_json(const NilpotentWitness& w) {
    return {{"entry", w.entry}, {"order", w.order}, {"generators", generators_json(w.generators)}};
}

VerificationReport table1_report(const Catalog& catalog, std::span<const std::size_t> degrees,
                                 const VerifyOptions& options) {
    VerificationReport report;
    report.claim = "table1";
    describe_catalog_universe(report, catalog, degrees);
    report.runtime_ms = timed([&] {
        for (std::size_t n : degrees) {
            std::string label = std::to_string(n);
            LargestNilpotentOrder r;
            try {
                r = largest_nilpotent_order(n, catalog, options);
            } catch (const DeadlineExceeded&) {
                report.add_row(label, Verdict::kIncomplete, {{"reason", "time budget exhausted"}});
                continue;
            }
            json witnesses = json::array();
            for (const auto& w : r.witnesses) {
                witnesses.push_back(witness_json(w));
            }
            json fields = {{"largest", r.order}, {"witness_count", r.witnesses.size()}, {"witnesses", witnesses}};
            auto it = expected_largest_nilpotent().find(n);
            bool complete = catalog.info.contains(n) && catalog.info.at(n).complete;
            fields["complete"] = complete;
            if (it == expected_largest_nilpotent().end()) {
                fields["expected"] = nullptr;
                report.add_row(label, Verdict::kPass, fields);
                continue;
            }
            fields["expected"] = it->second;
            fields["match"] = r.order == it->second;
            if (r.order == it->second) {
                report.add_row(label, Verdict::kPass, fields);
            } else if (!complete && r.order < it->second) {
                // A partial universe only bounds the maximum from below.
                report.add_row(label, Verdict::kIncompleteUniverse, fields,
                               {{"largest", r.order}, {"expected", it->second}, {"witnesses", witnesses}});
            } else {
                report.add_row(label, Verdict::kFail, fields,
                               {{"largest", r.order}, {"expected", it->second}, {"witnesses", witnesses}});
            }
        }
    });
    return report;
}

VerificationReport verify_nilpotent_order_bounds(const Catalog& catalog, std::span<const std::size_t> degrees,
                                                 const VerifyOptions& options) {
    VerificationReport report;
    report.claim = "lemma25";
    describe_catalog_universe(report, catalog, degrees);
    report.runtime_ms = timed([&] {
        for (std::size_t n : degrees) {
            std::string label = std::to_string(n);
            LargestNilpotentOrder r;
            try {
                r = largest_nilpotent_order(n, catalog, options);
            } catch (const DeadlineExceeded&) {
                report.add_row(label, Verdict::kIncomplete, {{"reason", "time budget exhausted"}});
                continue;
            }
            const auto& entries = catalog.at(n);
            Verdict v = Verdict::kPass;
            json witness = nullptr;
            std::uint64_t classes = 0;
            std::uint64_t stabilizer_excess = 0;
            json stabilizer_example = nullptr;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const SubgroupList& list = r.classes[i];
                for (std::size_t j = 0; j < list.size(); ++j) {
                    ++classes;
                    BigInt order = list.classes[j].order;
                    bool two_power = order <= pow2(n);
                    Truth beta = at_most_n_beta_over_two(order, n, 1, options.bounds);
                    if (!two_power || beta == Truth::kFalse) {
                        if (v != Verdict::kFail) {
                            witness = {{"entry", i},
                                       {"order", order.str()},
                                       {"generators", generators_json(list.generators(j))},
                                       {"two_power_bound", two_power},
                                       {"beta_bound", truth_name(beta)}};
                        }
                        v = Verdict::kFail;
                    } else if (beta == Truth::kIndeterminate) {
                        if (v == Verdict::kPass) {
                            witness = {{"entry", i}, {"order", order.str()}, {"beta_bound", "indeterminate"}};
                        }
                        v = combine(v, Verdict::kIndeterminate);
                    }
                }
                BigInt stab = entries[i].stabilizer_order();
                if (at_most_n_beta_over_two(stab, n, 0, options.bounds) != Truth::kTrue) {
                    ++stabilizer_excess;
                    if (stabilizer_example.is_null()) {
                        stabilizer_example = {{"entry", i}, {"stabilizer_order", stab.str()}};
                    }
                }
            }
            Enclosure slack;
            at_most_n_beta_over_two(r.order, n, 1, options.bounds, &slack);
            json fields = {{"largest", r.order},
                           {"nilpotent_classes", classes},
                           {"two_power", pow2(n).str()},
                           {"beta_slack_lo", slack.lo},
                           {"stabilizers_above_beta_bound", stabilizer_excess}};
            report.add_row(label, v, fields, witness);
            if (stabilizer_excess) {
                report.add_finding(label, {{"point_stabilizer_above_n_beta_over_2", stabilizer_example},
                                           {"count", stabilizer_excess}});
            }
        }
    });
    return report;
}

}  // namespace nilorb
