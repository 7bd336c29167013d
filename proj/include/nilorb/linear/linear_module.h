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

#ifndef NILORB_LINEAR_LINEAR_MODULE_H
#define NILORB_LINEAR_LINEAR_MODULE_H

#include <cstdint>
#include <span>
#include <vector>

#include "nilorb/linear/field.h"
#include "nilorb/perm/perm_group.h"
#include "json.hpp"

namespace nilorb {

/// Square matrix over GF(p), row-major.
struct Matrix {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<std::uint32_t> entries;

    static Matrix identity(std::uint32_t p, std::size_t dim);
    /// Entries are reduced mod p. Throws InvalidArgument unless rows form a square.
    static Matrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

    std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }

    Matrix operator*(const Matrix& other) const;
    std::size_t rank() const;
    bool is_invertible() const { return rank() == dim; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

/// Permutation of the p^d encoded vectors induced by v -> vA.
Permutation matrix_permutation(const Matrix& a);

/// GF(p)-linear map realized by a field element's multiplication, in the
/// field's own basis (row i is the image of x^i).
Matrix multiplication_matrix(const GaloisField& field, std::uint32_t a);
/// Matrix of x -> a x^(p^j) over the prime field.
Matrix semilinear_matrix(const GaloisField& field, const SemilinearMap& map);

/// One homogeneous piece of a module: GF(p)^dim.
struct Summand {
    std::uint32_t characteristic = 2;
    std::size_t dimension = 0;

    std::uint64_t size() const;
    friend bool operator==(const Summand&, const Summand&) = default;
};

/// A group acting on a finite vector space (or, for mixed characteristic, on
/// a product of vector spaces) as permutations of the encoded points.
///
/// Points use a mixed-radix encoding: the first summand occupies the least
/// significant position, and inside a summand coordinate 0 is the least
/// significant base-p digit.
class LinearModule {
  public:
    /// Validates that every generator fixes 0 and is additive on a basis.
    LinearModule(std::vector<Summand> summands, PermutationGroup acting_group);

    const std::vector<Summand>& summands() const { return summands_; }
    const PermutationGroup& acting_group() const { return group_; }
    std::uint64_t size() const { return size_; }
    std::size_t dimension() const;
    bool is_mixed() const;
    /// Characteristic of a homogeneous module; throws for mixed ones.
    std::uint32_t characteristic() const;

    std::vector<std::uint32_t> decode(Point v) const;
    Point encode(std::span<const std::uint32_t> coords) const;
    Point add(Point u, Point v) const;
    /// Unit vectors of every summand.
    std::vector<Point> basis() const;

    bool is_additive(const Permutation& g) const;

  private:
    std::vector<Summand> summands_;
    std::vector<std::uint32_t> radix_;
    std::uint64_t size_ = 1;
    PermutationGroup group_;
};

/// Throws InvalidArgument on a singular or mis-sized matrix, CapExceeded
/// beyond 2^20 points. An empty list yields the trivial group.
LinearModule make_linear_action(std::uint32_t p, std::size_t dim, std::span<const Matrix> generators);

/// The semilinear group of GF(p^k) as a module over GF(p).
LinearModule gamma_module(std::uint32_t p, std::uint32_t k, bool gamma0_only = false);

/// |C_V(g)|. Throws InvalidArgument for a non-additive permutation.
std::uint64_t fixed_vector_count(const LinearModule& module, const Permutation& g);

/// C_H(v), the stabilizer of point v in H.
PermutationGroup centralizer_of_vector(const PermutationGroup& group, Point v);

enum class SumAction {
    /// G_1 x ... x G_m, each factor acting on its own summand.
    kDirectProduct,
    /// Generator i acts as generator i of every summand; requires equal
    /// generator counts.
    kDiagonal,
    /// G wr S_m on m identical modules.
    kWreath,
};

LinearModule direct_sum_module(std::span<const LinearModule> modules, SumAction action);

/// {"p":3,"d":2,"matrices":[[[...]]]}
LinearModule module_from_json(const nlohmann::json& j);
nlohmann::json matrices_to_json(std::uint32_t p, std::size_t dim, std::span<const Matrix> matrices);

}  // namespace nilorb

#endif
