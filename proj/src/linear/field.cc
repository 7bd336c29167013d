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

#include "nilorb/linear/field.h"

#include "nilorb/perm/errors.h"

namespace nilorb {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x) {
        if (static_cast<std::uint64_t>(a) * x % p == 1) {
            return x;
        }
    }
    throw InvalidArgument("no inverse modulo p");
}

// Remainder of f modulo g over GF(p); g non-zero.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    std::uint32_t lead_inv = inverse_mod(g.back(), p);
    while (f.size() >= g.size()) {
        std::uint32_t factor = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f.back()) * lead_inv % p);
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(factor) * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxPoints) {
            throw CapExceeded("field size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");
        }
    }
    return q;
}

}  // namespace

std::uint32_t FieldSpec::size() const {
    return static_cast<std::uint32_t>(checked_power(characteristic, extension_degree));
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    std::size_t k = coeffs.size() - 1;
    if (k <= 1) {
        return k == 1;
    }
    // Every monic divisor of degree d in [1, k/2], enumerated by its lower
    // coefficients.
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (std::uint64_t n = 0; n < count; ++n) {
            Poly g(d + 1);
            std::uint64_t m = n;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(m % p);
                m /= p;
            }
            g[d] = 1;
            if (poly_mod(coeffs, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) {
        throw InvalidArgument(std::to_string(p) + " is not prime");
    }
    if (k == 0) {
        throw InvalidArgument("extension degree must be positive");
    }
    std::uint64_t q = checked_power(p, k);
    FieldSpec spec;
    spec.characteristic = p;
    spec.extension_degree = k;
    // Lexicographic from the constant term: c_0 is the most significant digit
    // of the counter.
    for (std::uint64_t n = 0; n < q; ++n) {
        Poly f(k + 1);
        std::uint64_t m = n;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[k - 1 - i] = static_cast<std::uint32_t>(m % p);
            m /= p;
        }
        f[k] = 1;
        if (is_irreducible(p, f)) {
            spec.modulus = std::move(f);
            return spec;
        }
    }
    throw InternalError("no irreducible polynomial found");
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)), size_(spec_.size()) {
    if (spec_.modulus.size() != spec_.extension_degree + 1 || spec_.modulus.back() != 1 ||
        !is_irreducible(spec_.characteristic, spec_.modulus)) {
        throw InvalidArgument("field modulus must be monic irreducible of the extension degree");
    }
    std::uint32_t n = size_ - 1;
    auto primes = factorize(n);
    for (std::uint32_t g = 1; g < size_; ++g) {
        bool primitive = true;
        for (auto [r, e] : primes) {
            (void)e;
            std::uint32_t x = 1;
            std::uint32_t b = g;
            for (std::uint64_t t = n / r; t; t >>= 1) {
                if (t & 1) {
                    x = slow_mul(x, b);
                }
                b = slow_mul(b, b);
            }
            if (x == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            primitive_ = g;
            break;
        }
    }
    exp_.resize(n);
    log_.assign(size_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, primitive_);
    }
    if (x != 1) {
        throw InternalError("primitive element search failed");
    }
}

std::uint32_t GaloisField::slow_mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec_.characteristic;
    const std::uint32_t k = spec_.extension_degree;
    Poly fa(k), fb(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        fa[i] = a % p;
        a /= p;
        fb[i] = b % p;
        b /= p;
    }
    Poly prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p);
        }
    }
    Poly r = poly_mod(prod, spec_.modulus, p);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) {
        out = out * p + r[i];
    }
    return out;
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec_.characteristic;
    if (p == 2) {
        return a ^ b;
    }
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    while (a || b) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
    const std::uint32_t p = spec_.characteristic;
    if (p == 2) {
        return a;
    }
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    while (a) {
        out += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    return out;
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) {
        return 0;
    }
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[s % exp_.size()];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) {
        throw InvalidArgument("zero has no multiplicative inverse");
    }
    std::uint32_t n = static_cast<std::uint32_t>(exp_.size());
    return exp_[(n - log_[a]) % n];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    std::uint64_t n = exp_.size();
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % n)) % n];
}

std::uint32_t GaloisField::frobenius(std::uint32_t a, std::uint32_t j) const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < j; ++i) {
        e *= spec_.characteristic;
    }
    return pow(a, e);
}

std::uint32_t GaloisField::multiplicative_order(std::uint32_t a) const {
    if (a == 0) {
        throw InvalidArgument("zero has no multiplicative order");
    }
    std::uint32_t order = 1;
    for (std::uint32_t x = a; x != 1; x = mul(x, a)) {
        ++order;
    }
    return order;
}

std::uint32_t SemilinearMap::apply(const GaloisField& field, std::uint32_t x) const {
    return field.mul(multiplier, field.frobenius(x, frobenius_exponent));
}

Permutation SemilinearMap::to_permutation(const GaloisField& field) const {
    if (multiplier == 0 || multiplier >= field.size() || frobenius_exponent >= field.degree()) {
        throw InvalidArgument("semilinear map needs a non-zero multiplier and 0 <= j < k");
    }
    std::vector<Point> images(field.size());
    for (std::uint32_t x = 0; x < field.size(); ++x) {
        images[x] = apply(field, x);
    }
    return Permutation::from_images(std::move(images));
}

std::vector<SemilinearMap> all_semilinear_maps(const GaloisField& field) {
    std::vector<SemilinearMap> maps;
    for (std::uint32_t a = 1; a < field.size(); ++a) {
        for (std::uint32_t j = 0; j < field.degree(); ++j) {
            maps.push_back({a, j});
        }
    }
    return maps;
}

GammaGroups make_gamma(const GaloisField& field) {
    Permutation mult = SemilinearMap{field.primitive_element(), 0}.to_permutation(field);
    std::vector<Permutation> gamma_gens{mult};
    if (field.degree() > 1) {
        gamma_gens.push_back(SemilinearMap{1, 1}.to_permutation(field));
    }
    return {PermutationGroup::build(std::move(gamma_gens)), PermutationGroup::build({mult})};
}

GammaGroups make_gamma(std::uint32_t p, std::uint32_t k) { return make_gamma(GaloisField(make_field(p, k))); }

}  // namespace nilorb
