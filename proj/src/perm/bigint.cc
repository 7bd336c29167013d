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

#include "nilorb/perm/bigint.h"

#include <numeric>

namespace nilorb {

BigInt parse_decimal(std::string_view text) {
    if (text.empty()) {
        throw FormatError("empty integer literal");
    }
    BigInt r = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw FormatError("not a decimal integer: '" + std::string(text) + "'");
        }
        r = r * 10 + (c - '0');
    }
    return r;
}

std::uint64_t to_u64(const BigInt& x) {
    if (x < 0 || x > BigInt(std::numeric_limits<std::uint64_t>::max())) {
        throw OverflowError("integer " + x.str() + " does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(x);
}

std::uint64_t ceil_log2(const BigInt& x) {
    if (x < 1) {
        throw InvalidArgument("ceil_log2 of non-positive value");
    }
    std::uint64_t k = 0;
    BigInt p = 1;
    while (p < x) {
        p <<= 1;
        ++k;
    }
    return k;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t x) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        if (x % p != 0) {
            continue;
        }
        std::uint32_t e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (x > 1) {
        out.emplace_back(x, 1);
    }
    return out;
}

bool is_prime(std::uint64_t x) {
    if (x < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t q = a / g;
    if (b != 0 && q > std::numeric_limits<std::uint64_t>::max() / b) {
        throw OverflowError("element order exceeds 64 bits");
    }
    return q * b;
}

}  // namespace nilorb
