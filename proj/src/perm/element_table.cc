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

#include "nilorb/perm/element_table.h"

#include <algorithm>
#include <bit>
#include <random>

#include "nilorb/perm/errors.h"

namespace nilorb {

namespace {

// Fixed seed: fingerprints must be reproducible run to run.
constexpr std::uint64_t kFingerprintSeed = 0x6e696c6f72620001ull;

}  // namespace

ElementTable::ElementTable(const PermutationGroup& group, std::uint64_t cap)
    : group_(group), degree_(group.degree()) {
    if (group.order() > cap) {
        throw CapExceeded("group of order " + group.order().str() + " exceeds the element-table cap " +
                          std::to_string(cap));
    }
    if (degree_ > 65535) {
        throw CapExceeded("element tables support degree <= 65535");
    }
    base_ = group.chain().base();
    bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(degree_ - 1)));
    if (base_.size() * bits_ > 128) {
        throw CapExceeded("base too long to pack into a 128-bit key");
    }
    size_ = static_cast<std::uint32_t>(group.order());
    images_.reserve(static_cast<std::size_t>(size_) * degree_);
    index_.reserve(size_ * 2);

    std::uint32_t next = 0;
    group.chain().for_each_element([&](const Permutation& g) {
        PackedKey key = 0;
        for (std::size_t k = 0; k < base_.size(); ++k) {
            key |= static_cast<PackedKey>(g[base_[k]]) << (k * bits_);
        }
        index_.emplace(key, next++);
        for (Point x = 0; x < degree_; ++x) {
            images_.push_back(static_cast<std::uint16_t>(g[x]));
        }
        return true;
    });
    if (next != size_ || index_.size() != size_) {
        throw InternalError("element enumeration disagrees with the chain order");
    }

    {
        PackedKey key = 0;
        for (std::size_t k = 0; k < base_.size(); ++k) {
            key |= static_cast<PackedKey>(base_[k]) << (k * bits_);
        }
        identity_ = lookup(key);
    }

    std::vector<std::int32_t> base_slot(degree_, -1);
    for (std::size_t k = 0; k < base_.size(); ++k) {
        base_slot[base_[k]] = static_cast<std::int32_t>(k);
    }
    inverse_.resize(size_);
    order_.resize(size_);
    std::vector<Point> inv_base(base_.size());
    std::vector<char> seen(degree_);
    for (ElementId g = 0; g < size_; ++g) {
        auto img = images(g);
        for (Point x = 0; x < degree_; ++x) {
            if (base_slot[img[x]] >= 0) {
                inv_base[base_slot[img[x]]] = x;
            }
        }
        PackedKey key = 0;
        for (std::size_t k = 0; k < base_.size(); ++k) {
            key |= static_cast<PackedKey>(inv_base[k]) << (k * bits_);
        }
        inverse_[g] = lookup(key);

        std::fill(seen.begin(), seen.end(), 0);
        std::uint64_t order = 1;
        for (Point x = 0; x < degree_; ++x) {
            if (seen[x]) {
                continue;
            }
            std::uint64_t len = 0;
            for (Point y = x; !seen[y]; y = img[y]) {
                seen[y] = 1;
                ++len;
            }
            order = checked_lcm(order, len);
        }
        order_[g] = static_cast<std::uint32_t>(order);
    }

    std::mt19937_64 rng(kFingerprintSeed);
    key_lo_.resize(size_);
    key_hi_.resize(size_);
    for (ElementId g = 0; g < size_; ++g) {
        key_lo_[g] = rng();
        key_hi_[g] = rng();
    }

    // Greedy irredundant generating set, in the group's generator order.
    std::size_t reached = 1;
    for (const auto& perm : group.generators()) {
        if (perm.is_identity()) {
            continue;
        }
        ElementId id = index_of(perm);
        std::vector<ElementId> trial = generators_;
        trial.push_back(id);
        std::size_t now = closure(trial).size();
        if (now > reached) {
            generators_ = std::move(trial);
            reached = now;
        }
    }
}

ElementId ElementTable::lookup(PackedKey key) const {
    auto it = index_.find(key);
    if (it == index_.end()) {
        throw InternalError("base image not found in element table");
    }
    return it->second;
}

ElementId ElementTable::mul(ElementId a, ElementId b) const {
    const std::uint16_t* ia = images_.data() + static_cast<std::size_t>(a) * degree_;
    const std::uint16_t* ib = images_.data() + static_cast<std::size_t>(b) * degree_;
    PackedKey key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        key |= static_cast<PackedKey>(ib[ia[base_[k]]]) << (k * bits_);
    }
    return lookup(key);
}

ElementId ElementTable::conj(ElementId x, ElementId g) const {
    const std::uint16_t* ig = images_.data() + static_cast<std::size_t>(g) * degree_;
    const std::uint16_t* ix = images_.data() + static_cast<std::size_t>(x) * degree_;
    const std::uint16_t* igi = images_.data() + static_cast<std::size_t>(inverse_[g]) * degree_;
    PackedKey key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        key |= static_cast<PackedKey>(ig[ix[igi[base_[k]]]]) << (k * bits_);
    }
    return lookup(key);
}

ElementId ElementTable::pow(ElementId a, std::uint64_t e) const {
    ElementId result = identity_;
    ElementId base = a;
    while (e) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Permutation ElementTable::permutation(ElementId g) const {
    auto img = images(g);
    return Permutation::from_images(std::vector<Point>(img.begin(), img.end()));
}

ElementId ElementTable::index_of(const Permutation& g) const {
    if (g.degree() != degree_) {
        throw InvalidArgument("degree mismatch in element lookup");
    }
    PackedKey key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        key |= static_cast<PackedKey>(g[base_[k]]) << (k * bits_);
    }
    auto it = index_.find(key);
    if (it == index_.end()) {
        throw InvalidArgument("permutation is not an element of the group");
    }
    auto img = images(it->second);
    for (Point x = 0; x < degree_; ++x) {
        if (img[x] != g[x]) {
            throw InvalidArgument("permutation is not an element of the group");
        }
    }
    return it->second;
}

std::vector<ElementId> ElementTable::closure(std::span<const ElementId> gens) const {
    std::vector<char> in(size_, 0);
    std::vector<ElementId> elems{identity_};
    in[identity_] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (ElementId s : gens) {
            ElementId y = mul(elems[i], s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace nilorb
