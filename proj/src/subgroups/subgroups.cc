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

#include "nilorb/subgroups/subgroups.h"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "nilorb/perm/errors.h"

namespace nilorb {

namespace {

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const {
        return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9E3779B97F4A7C15ull));
    }
};

using FingerprintSet = std::unordered_set<Fingerprint, FingerprintHash>;

struct Candidate {
    std::vector<ElementId> generators;
    Fingerprint fingerprint;
    std::uint64_t order = 0;
    bool nilpotent = false;
};

struct Expansion {
    std::uint64_t normalizer_order = 0;
    std::vector<Candidate> candidates;
};

Expansion expand(const ElementTable& table, const SubgroupClass& cls, bool nilpotent_only) {
    const std::uint32_t size = table.size();
    std::vector<char> in_u(size, 0);
    for (ElementId e : cls.elements) {
        in_u[e] = 1;
    }
    Expansion out;
    std::vector<ElementId> norm = normalizer(table, cls.generators, in_u);
    out.normalizer_order = norm.size();

    std::vector<char> visited(size, 0);
    std::vector<ElementId> k_elements;
    for (ElementId x : norm) {
        if (in_u[x] || visited[x]) {
            continue;
        }
        std::uint64_t coset_order = 1;
        for (ElementId y = x; !in_u[y]; y = table.mul(y, x)) {
            ++coset_order;
        }
        if (!is_prime(coset_order)) {
            for (ElementId u : cls.elements) {
                visited[table.mul(u, x)] = 1;
            }
            continue;
        }
        k_elements.assign(cls.elements.begin(), cls.elements.end());
        ElementId xp = x;
        for (std::uint64_t j = 1; j < coset_order; ++j) {
            for (ElementId u : cls.elements) {
                ElementId e = table.mul(u, xp);
                visited[e] = 1;
                k_elements.push_back(e);
            }
            xp = table.mul(xp, x);
        }
        bool nil = cls.nilpotent && is_nilpotent_subset(table, k_elements);
        if (nilpotent_only && !nil) {
            continue;
        }
        Candidate c;
        c.generators = cls.generators;
        c.generators.push_back(x);
        c.fingerprint = fingerprint_of(table, k_elements);
        c.order = k_elements.size();
        c.nilpotent = nil;
        out.candidates.push_back(std::move(c));
    }
    return out;
}

// Inserts the fingerprints of every conjugate of `elements`; returns how many
// there are.
std::uint64_t record_conjugates(const ElementTable& table, const std::vector<ElementId>& elements,
                                FingerprintSet& seen) {
    FingerprintSet local;
    std::deque<std::vector<ElementId>> queue;
    local.insert(fingerprint_of(table, elements));
    queue.push_back(elements);
    std::vector<ElementId> image;
    while (!queue.empty()) {
        std::vector<ElementId> current = std::move(queue.front());
        queue.pop_front();
        for (ElementId s : table.generators()) {
            image.clear();
            for (ElementId e : current) {
                image.push_back(table.conj(e, s));
            }
            if (local.insert(fingerprint_of(table, image)).second) {
                queue.push_back(image);
            }
        }
    }
    seen.insert(local.begin(), local.end());
    return local.size();
}

SubgroupList enumerate(std::shared_ptr<const ElementTable> table, const EnumerationOptions& options) {
    std::uint64_t cap = options.max_order;
    if (cap == 0) {
        cap = options.nilpotent_only ? kDefaultNilpotentCap : kDefaultSubgroupCap;
    }
    if (table->size() > cap) {
        throw CapExceeded("subgroup enumeration of a group of order " + std::to_string(table->size()) +
                          " exceeds the cap " + std::to_string(cap));
    }
    SubgroupList list;
    list.table = table;
    list.complete = options.nilpotent_only || is_solvable(table->group());

    SubgroupClass trivial;
    trivial.elements = {table->identity()};
    trivial.class_size = 1;
    list.classes.push_back(trivial);

    FingerprintSet seen;
    seen.insert(fingerprint_of(*table, trivial.elements));
    std::map<std::uint64_t, std::vector<std::size_t>> layers;
    layers[1].push_back(0);

    while (!layers.empty()) {
        options.deadline.check();
        std::vector<std::size_t> layer = std::move(layers.begin()->second);
        layers.erase(layers.begin());

        std::vector<Expansion> expansions(layer.size());
        parallel_for(layer.size(), options.jobs, [&](std::size_t i) {
            options.deadline.check();
            expansions[i] = expand(*table, list.classes[layer[i]], options.nilpotent_only);
        });

        for (std::size_t i = 0; i < layer.size(); ++i) {
            SubgroupClass& cls = list.classes[layer[i]];
            cls.normalizer_order = expansions[i].normalizer_order;
            if (cls.class_size * cls.normalizer_order != table->size()) {
                throw InternalError("conjugacy class size disagrees with the normalizer index");
            }
            bool has_nilpotent_extension = false;
            for (auto& cand : expansions[i].candidates) {
                has_nilpotent_extension = has_nilpotent_extension || cand.nilpotent;
                if (seen.contains(cand.fingerprint)) {
                    continue;
                }
                SubgroupClass next;
                next.elements = table->closure(cand.generators);
                if (next.elements.size() != cand.order) {
                    throw InternalError("cyclic extension closure has the wrong order");
                }
                next.generators = std::move(cand.generators);
                next.order = cand.order;
                next.nilpotent = cand.nilpotent;
                next.class_size = record_conjugates(*table, next.elements, seen);
                layers[next.order].push_back(list.classes.size());
                list.classes.push_back(std::move(next));
            }
            // Re-fetch: push_back above may have reallocated.
            SubgroupClass& done = list.classes[layer[i]];
            done.maximal_nilpotent = done.nilpotent && !has_nilpotent_extension;
        }
    }
    std::stable_sort(list.classes.begin(), list.classes.end(),
                     [](const SubgroupClass& a, const SubgroupClass& b) { return a.order < b.order; });
    return list;
}

}  // namespace

Fingerprint fingerprint_of(const ElementTable& table, std::span<const ElementId> elements) {
    Fingerprint f;
    for (ElementId e : elements) {
        f.lo ^= table.key_lo(e);
        f.hi ^= table.key_hi(e);
    }
    return f;
}

bool is_nilpotent_subset(const ElementTable& table, std::span<const ElementId> elements) {
    for (auto [p, e] : factorize(elements.size())) {
        std::uint64_t p_part = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            p_part *= p;
        }
        std::uint64_t count = 0;
        for (ElementId x : elements) {
            std::uint64_t o = table.element_order(x);
            while (o % p == 0) {
                o /= p;
            }
            count += o == 1;
        }
        if (count != p_part) {
            return false;
        }
    }
    return true;
}

std::vector<ElementId> normalizer(const ElementTable& table, std::span<const ElementId> u_generators,
                                  const std::vector<char>& in_u) {
    const std::uint32_t size = table.size();
    // 0 = unknown, 1 = in N, 2 = outside N
    std::vector<char> status(size, 0);
    std::vector<ElementId> n_gens(u_generators.begin(), u_generators.end());
    std::vector<ElementId> n_elements;
    for (ElementId e = 0; e < size; ++e) {
        if (in_u[e]) {
            status[e] = 1;
            n_elements.push_back(e);
        }
    }
    for (ElementId g = 0; g < size; ++g) {
        if (status[g]) {
            continue;
        }
        bool normalizes = std::all_of(u_generators.begin(), u_generators.end(),
                                      [&](ElementId u) { return in_u[table.conj(u, g)] != 0; });
        if (normalizes) {
            n_gens.push_back(g);
            n_elements = table.closure(n_gens);
            for (ElementId e : n_elements) {
                status[e] = 1;
            }
        } else {
            // Every element of the coset N g conjugates U the same way.
            for (ElementId n : n_elements) {
                status[table.mul(n, g)] = 2;
            }
        }
    }
    return n_elements;
}

std::vector<Permutation> SubgroupList::generators(std::size_t i) const {
    std::vector<Permutation> out;
    for (ElementId g : classes.at(i).generators) {
        out.push_back(table->permutation(g));
    }
    return out;
}

PermutationGroup SubgroupList::group(std::size_t i) const {
    auto gens = generators(i);
    if (gens.empty()) {
        return PermutationGroup::trivial(table->degree());
    }
    return PermutationGroup::build(std::move(gens));
}

SubgroupList subgroups_up_to_conjugacy(std::shared_ptr<const ElementTable> table, const EnumerationOptions& options) {
    EnumerationOptions opts = options;
    opts.nilpotent_only = false;
    return enumerate(std::move(table), opts);
}

SubgroupList subgroups_up_to_conjugacy(const PermutationGroup& group, const EnumerationOptions& options) {
    std::uint64_t cap = options.max_order ? options.max_order : kDefaultSubgroupCap;
    if (group.order() > cap) {
        throw CapExceeded("subgroup enumeration of a group of order " + group.order().str() + " exceeds the cap " +
                          std::to_string(cap));
    }
    return subgroups_up_to_conjugacy(std::make_shared<const ElementTable>(group), options);
}

SubgroupList nilpotent_subgroups(std::shared_ptr<const ElementTable> table, EnumerationOptions options) {
    options.nilpotent_only = true;
    return enumerate(std::move(table), options);
}

SubgroupList nilpotent_subgroups(const PermutationGroup& group, EnumerationOptions options) {
    std::uint64_t cap = options.max_order ? options.max_order : kDefaultNilpotentCap;
    if (group.order() > cap) {
        throw CapExceeded("nilpotent enumeration of a group of order " + group.order().str() + " exceeds the cap " +
                          std::to_string(cap));
    }
    return nilpotent_subgroups(std::make_shared<const ElementTable>(group), options);
}

LargestNilpotent largest_nilpotent(const PermutationGroup& group, const EnumerationOptions& options) {
    LargestNilpotent out;
    out.list = nilpotent_subgroups(group, options);
    for (std::size_t i = 0; i < out.list.size(); ++i) {
        std::uint64_t order = out.list.classes[i].order;
        if (order > out.order) {
            out.order = order;
            out.witnesses.clear();
        }
        if (order == out.order) {
            out.witnesses.push_back(i);
        }
    }
    return out;
}

}  // namespace nilorb
