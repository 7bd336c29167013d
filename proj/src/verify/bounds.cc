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

#include "nilorb/verify/bounds.h"

#include <mpfr.h>

#include "nilorb/perm/errors.h"

namespace nilorb {

namespace {

class Interval {
  public:
    explicit Interval(unsigned prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : Interval(static_cast<unsigned>(mpfr_get_prec(o.lo_))) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval&) = delete;
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    unsigned prec() const { return static_cast<unsigned>(mpfr_get_prec(lo_)); }

    static Interval log_of(const BigInt& x, unsigned prec) {
        if (x <= 0) {
            throw InvalidArgument("logarithm of a non-positive integer");
        }
        Interval r(prec);
        std::string s = x.str();
        mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD);
        mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
        mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
        mpfr_log(r.hi_, r.hi_, MPFR_RNDU);
        return r;
    }

    static Interval log2_const(unsigned prec) {
        Interval r(prec);
        mpfr_const_log2(r.lo_, MPFR_RNDD);
        mpfr_const_log2(r.hi_, MPFR_RNDU);
        return r;
    }

    Interval plus(const Interval& o) const {
        Interval r(prec());
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }

    Interval minus(const Interval& o) const {
        Interval r(prec());
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }

    // Both operands must be non-negative.
    Interval times(const Interval& o) const {
        if (mpfr_sgn(lo_) < 0 || mpfr_sgn(o.lo_) < 0) {
            throw InternalError("interval product expects non-negative operands");
        }
        Interval r(prec());
        mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }

    // Both operands must be positive.
    Interval over(const Interval& o) const {
        if (mpfr_sgn(lo_) < 0 || mpfr_sgn(o.lo_) <= 0) {
            throw InternalError("interval quotient expects positive operands");
        }
        Interval r(prec());
        mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }

    Interval scaled(unsigned long num, unsigned long den) const {
        Interval r(prec());
        mpfr_mul_ui(r.lo_, lo_, num, MPFR_RNDD);
        mpfr_mul_ui(r.hi_, hi_, num, MPFR_RNDU);
        mpfr_div_ui(r.lo_, r.lo_, den, MPFR_RNDD);
        mpfr_div_ui(r.hi_, r.hi_, den, MPFR_RNDU);
        return r;
    }

    Interval plus_int(unsigned long k) const {
        Interval r(prec());
        mpfr_add_ui(r.lo_, lo_, k, MPFR_RNDD);
        mpfr_add_ui(r.hi_, hi_, k, MPFR_RNDU);
        return r;
    }

    // Sign of a slack interval: true when it lies in [0, inf).
    Truth non_negative() const {
        if (mpfr_sgn(lo_) >= 0) {
            return Truth::kTrue;
        }
        if (mpfr_sgn(hi_) < 0) {
            return Truth::kFalse;
        }
        return Truth::kIndeterminate;
    }

    Enclosure enclosure() const {
        return {mpfr_get_d(lo_, MPFR_RNDD), mpfr_get_d(hi_, MPFR_RNDU), prec()};
    }

  private:
    mpfr_t lo_;
    mpfr_t hi_;
};

Interval beta(const BoundConstants& c, unsigned prec) {
    return Interval::log_of(c.beta_num, prec).over(Interval::log_of(c.beta_den, prec));
}

// Evaluates `slack` at increasing precision until its sign is decided.
template <class F>
Truth decide(const BoundConstants& c, Enclosure* out, F&& slack) {
    for (unsigned prec = c.precision_bits;; prec *= 2) {
        Interval s = slack(prec);
        Truth t = s.non_negative();
        if (t != Truth::kIndeterminate || prec * 2 > c.max_precision_bits) {
            if (out) {
                *out = s.enclosure();
            }
            return t;
        }
    }
}

}  // namespace

std::string truth_name(Truth t) {
    switch (t) {
        case Truth::kTrue:
            return "true";
        case Truth::kFalse:
            return "false";
        case Truth::kIndeterminate:
            return "indeterminate";
    }
    return "indeterminate";
}

Truth at_most_n_beta_over_two(const BigInt& value, std::uint64_t n, unsigned k, const BoundConstants& c,
                              Enclosure* slack) {
    if (n == 0) {
        throw InvalidArgument("degree must be positive");
    }
    return decide(c, slack, [&](unsigned prec) {
        Interval rhs = beta(c, prec).plus_int(k).times(Interval::log_of(n, prec));
        return rhs.minus(Interval::log2_const(prec)).minus(Interval::log_of(value, prec));
    });
}

Truth n_beta_bound_below_two_power(std::uint64_t n, const BoundConstants& c, Enclosure* slack) {
    if (n == 0) {
        throw InvalidArgument("degree must be positive");
    }
    return decide(c, slack, [&](unsigned prec) {
        Interval ln2 = Interval::log2_const(prec);
        Interval lhs = beta(c, prec).plus_int(1).times(Interval::log_of(n, prec)).minus(ln2);
        return ln2.scaled(static_cast<unsigned long>(n), 6).minus(lhs);
    });
}

Enclosure beta_enclosure(const BoundConstants& c) { return beta(c, c.precision_bits).enclosure(); }

}  // namespace nilorb
