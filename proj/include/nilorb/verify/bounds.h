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

#ifndef NILORB_VERIFY_BOUNDS_H
#define NILORB_VERIFY_BOUNDS_H

#include <cstdint>
#include <string>

#include "nilorb/perm/bigint.h"

namespace nilorb {

/// Outcome of a comparison decided by interval arithmetic.
enum class Truth { kTrue, kFalse, kIndeterminate };

std::string truth_name(Truth t);

/// beta = log(num) / log(den), kept as the exact pair.
struct BoundConstants {
    std::uint64_t beta_num = 32;
    std::uint64_t beta_den = 9;
    /// Working precision of the first attempt; doubled on a straddle.
    unsigned precision_bits = 64;
    unsigned max_precision_bits = 4096;
};

/// Closed interval [lo, hi] of doubles that encloses an MPFR result; for
/// reporting only.
struct Enclosure {
    double lo = 0;
    double hi = 0;
    unsigned precision_bits = 0;
};

/// value <= n^(beta + k) / 2, decided from k*ln n + beta*ln n - ln 2 - ln value.
Truth at_most_n_beta_over_two(const BigInt& value, std::uint64_t n, unsigned k, const BoundConstants& c = {},
                              Enclosure* slack = nullptr);

/// n^(beta + 1) / 2 <= 2^(n / 6).
Truth n_beta_bound_below_two_power(std::uint64_t n, const BoundConstants& c = {}, Enclosure* slack = nullptr);

/// Interval enclosure of beta itself.
Enclosure beta_enclosure(const BoundConstants& c = {});

}  // namespace nilorb

#endif
