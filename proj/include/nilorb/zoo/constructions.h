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

#ifndef NILORB_ZOO_CONSTRUCTIONS_H
#define NILORB_ZOO_CONSTRUCTIONS_H

#include <cstdint>
#include <span>
#include <vector>

#include "nilorb/linear/linear_module.h"
#include "nilorb/perm/perm_group.h"

namespace nilorb {

/// H wr S in its imprimitive action on b blocks of size a; block j is
/// {j*a, ..., j*a + a - 1}.
PermutationGroup wreath_product(const PermutationGroup& h, const PermutationGroup& s);

/// Symmetric group on n points from a transposition and an n-cycle.
PermutationGroup symmetric_group(std::size_t n);

/// Generators of GL(d,p): diag(w,1,...,1), I + E_01 and the permutation
/// matrix of the d-cycle.
std::vector<Matrix> general_linear_generators(std::uint32_t p, std::size_t d);

/// |GL(d,p)|, exactly.
BigInt general_linear_order(std::uint32_t p, std::size_t d);

/// Matrices of x -> w x and the Frobenius on GF(p^d), over GF(p).
std::vector<Matrix> semilinear_generators(std::uint32_t p, std::size_t d);

/// Block-diagonal copies of `h` (a x a) together with the block permutations
/// of `s` (given as permutations of b points): H wr S inside GL(ab,p).
std::vector<Matrix> linear_wreath(std::span<const Matrix> h, std::span<const Permutation> s);

/// Recovers the matrix of an additive permutation of GF(p)^d.
Matrix matrix_of(const Permutation& g, std::uint32_t p, std::size_t d);

/// v -> v + t on GF(p)^d.
Permutation translation(std::uint32_t p, std::size_t d, Point t);

/// The affine group V x| H on p^d points: unit translations plus matrices.
PermutationGroup affine_group(std::uint32_t p, std::size_t d, std::span<const Matrix> matrices);

/// True when no proper non-zero subspace of GF(p)^d is invariant.
bool acts_irreducibly(std::uint32_t p, std::size_t d, std::span<const Matrix> matrices);
bool acts_irreducibly(const PermutationGroup& group, std::uint32_t p, std::size_t d);

/// Rank over GF(p) of encoded vectors of GF(p)^d.
std::size_t vector_rank(std::uint32_t p, std::size_t d, std::span<const Point> vectors);

}  // namespace nilorb

#endif
