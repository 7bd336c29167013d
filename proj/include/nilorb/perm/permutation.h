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

#ifndef NILORB_PERM_PERMUTATION_H
#define NILORB_PERM_PERMUTATION_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image list.
///
/// Products act on the right: (a * b) first applies a, then b, so that
/// x^(ab) = (x^a)^b. Cycle notation is only used for construction and display.
class Permutation {
  public:
    /// Degree-zero placeholder; not a valid group element.
    Permutation() = default;

    /// Identity of the given degree.
    explicit Permutation(std::size_t degree);

    /// Validates that `images` is a bijection. Throws InvalidArgument otherwise.
    static Permutation from_images(std::vector<Point> images);

    /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

    /// Parses the whitespace-separated image-list text form ("1 0 2 3").
    static Permutation parse(std::string_view text);

    /// Image-list text form, inverse of parse().
    std::string to_string() const;

    /// Disjoint-cycle display string with 0-indexed points, e.g. "(0,1)(2,3,4)".
    std::string to_cycle_string() const;

    std::size_t degree() const { return images_.size(); }
    Point operator[](Point x) const { return images_[x]; }
    std::span<const Point> images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation pow(std::int64_t e) const;

    /// Smallest point with x^g != x, if any.
    std::optional<Point> smallest_moved_point() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) = default;

  private:
    explicit Permutation(std::vector<Point> images, bool /*trusted*/) : images_(std::move(images)) {}

    std::vector<Point> images_;
};

/// Commutator a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Conjugate g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Cycle data of a permutation: n(g) counts fixed points as 1-cycles, s(g) is
/// the number of fixed points, o(g) the element order.
struct CycleStats {
    std::size_t cycle_count = 0;
    std::size_t fixed_points = 0;
    std::uint64_t element_order = 1;

    friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

CycleStats cycle_stats(const Permutation& g);

/// Sorted multiset of cycle lengths (fixed points included as 1).
std::vector<std::size_t> cycle_type(const Permutation& g);

}  // namespace nilorb

#endif
