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

#ifndef NILORB_LINEAR_FIELD_H
#define NILORB_LINEAR_FIELD_H

#include <cstdint>
#include <vector>

#include "nilorb/perm/perm_group.h"

namespace nilorb {

/// Largest field or vector space (in points) the library will realize.
inline constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 20;

/// GF(p^k) presented as GF(p)[x]/(modulus).
///
/// Elements are encoded as integers in [0, p^k) whose base-p digits are the
/// polynomial coefficients, constant term least significant. The same
/// encoding is used for vectors of GF(p)^k, so the field is also a vector
/// space over its prime field without any conversion.
struct FieldSpec {
    std::uint32_t characteristic = 2;
    std::uint32_t extension_degree = 1;
    /// k+1 coefficients, constant term first; the leading one is 1.
    std::vector<std::uint32_t> modulus;

    std::uint32_t size() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Field with the lexicographically least monic irreducible modulus,
/// coefficients compared from the constant term up.
FieldSpec make_field(std::uint32_t p, std::uint32_t k);

/// Polynomial irreducibility over GF(p) by trial division. `coeffs` is
/// constant-term first and monic.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

/// Table-driven arithmetic over a FieldSpec.
class GaloisField {
  public:
    explicit GaloisField(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t size() const { return size_; }
    std::uint32_t characteristic() const { return spec_.characteristic; }
    std::uint32_t degree() const { return spec_.extension_degree; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    /// a^(p^j)
    std::uint32_t frobenius(std::uint32_t a, std::uint32_t j) const;

    /// Generator of the multiplicative group: the smallest encoding of
    /// multiplicative order size-1.
    std::uint32_t primitive_element() const { return primitive_; }
    std::uint32_t multiplicative_order(std::uint32_t a) const;

    /// Encoding of the prime-field constant c.
    std::uint32_t constant(std::uint32_t c) const { return c % spec_.characteristic; }

  private:
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

    FieldSpec spec_;
    std::uint32_t size_;
    std::uint32_t primitive_ = 1;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// The map x -> a * x^(p^j) of GF(p^k).
struct SemilinearMap {
    std::uint32_t multiplier = 1;
    std::uint32_t frobenius_exponent = 0;

    std::uint32_t apply(const GaloisField& field, std::uint32_t x) const;
    Permutation to_permutation(const GaloisField& field) const;
};

/// All (p^k - 1) * k semilinear maps, multiplier-major.
std::vector<SemilinearMap> all_semilinear_maps(const GaloisField& field);

struct GammaGroups {
    /// Gamma(p^k): all x -> a x^sigma.
    PermutationGroup gamma;
    /// Gamma_0(p^k): the multiplications x -> a x.
    PermutationGroup gamma0;
};

/// Semilinear groups as permutation groups on the p^k field elements.
GammaGroups make_gamma(const GaloisField& field);
GammaGroups make_gamma(std::uint32_t p, std::uint32_t k);

}  // namespace nilorb

#endif
