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

#ifndef NILORB_PERM_ELEMENT_TABLE_H
#define NILORB_PERM_ELEMENT_TABLE_H

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "nilorb/perm/perm_group.h"

namespace nilorb {

using ElementId = std::uint32_t;

/// Every element of a (small) permutation group, addressed by index.
///
/// An element is determined by its images of the base points, so products,
/// inverses and conjugates are computed by touching only the base, then
/// looked up by their packed base image. This is the kernel behind subgroup
/// enumeration and subset searches.
class ElementTable {
  public:
    explicit ElementTable(const PermutationGroup& group, std::uint64_t cap = kDefaultElementCap);

    const PermutationGroup& group() const { return group_; }
    std::uint32_t size() const { return size_; }
    std::size_t degree() const { return degree_; }

    ElementId identity() const { return identity_; }

    /// Irredundant generating set of the whole group, as element ids.
    const std::vector<ElementId>& generators() const { return generators_; }

    Point image(ElementId g, Point x) const { return images_[static_cast<std::size_t>(g) * degree_ + x]; }
    std::span<const std::uint16_t> images(ElementId g) const {
        return {images_.data() + static_cast<std::size_t>(g) * degree_, degree_};
    }

    ElementId mul(ElementId a, ElementId b) const;
    ElementId inv(ElementId a) const { return inverse_[a]; }
    /// g^-1 x g
    ElementId conj(ElementId x, ElementId g) const;
    ElementId pow(ElementId a, std::uint64_t e) const;
    std::uint32_t element_order(ElementId a) const { return order_[a]; }

    Permutation permutation(ElementId g) const;

    /// Throws InvalidArgument for a permutation outside the group.
    ElementId index_of(const Permutation& g) const;

    /// Elements of the subgroup generated by `gens`, sorted.
    std::vector<ElementId> closure(std::span<const ElementId> gens) const;

    /// 128-bit order-independent fingerprint keys for each element.
    std::uint64_t key_lo(ElementId g) const { return key_lo_[g]; }
    std::uint64_t key_hi(ElementId g) const { return key_hi_[g]; }

  private:
    using PackedKey = unsigned __int128;
    struct KeyHash {
        std::size_t operator()(PackedKey k) const {
            auto lo = static_cast<std::uint64_t>(k);
            auto hi = static_cast<std::uint64_t>(k >> 64);
            return static_cast<std::size_t>(lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6)));
        }
    };

    ElementId lookup(PackedKey key) const;

    PermutationGroup group_;
    std::size_t degree_ = 0;
    std::uint32_t size_ = 0;
    std::vector<Point> base_;
    unsigned bits_ = 0;
    std::vector<std::uint16_t> images_;
    std::vector<ElementId> inverse_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint64_t> key_lo_;
    std::vector<std::uint64_t> key_hi_;
    std::unordered_map<PackedKey, ElementId, KeyHash> index_;
    ElementId identity_ = 0;
    std::vector<ElementId> generators_;
};

}  // namespace nilorb

#endif
