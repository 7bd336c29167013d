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

#ifndef NILORB_PERM_BIGINT_H
#define NILORB_PERM_BIGINT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilorb/perm/errors.h"

namespace nilorb {

/// Arbitrary precision integer used for group orders and every exact
/// inequality.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::uint64_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Parses a non-negative decimal string. Throws FormatError on anything else.
BigInt parse_decimal(std::string_view text);

/// Narrows to uint64_t; throws OverflowError if out of range.
std::uint64_t to_u64(const BigInt& x);

/// Smallest k with 2^k >= x, for x >= 1. Equals ceil(log2 x).
std::uint64_t ceil_log2(const BigInt& x);

/// Prime factorization by trial division (x >= 1), ascending primes.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t x);

bool is_prime(std::uint64_t x);

/// lcm with overflow detection.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace nilorb

#endif
