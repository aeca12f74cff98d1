/*
   Copyright 2026 The sqdisc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>

namespace sqdisc {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with positive denominator.
using RationalValue = mpq_class;

inline std::size_t bit_length(const BigInt& n) {
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

/**
 * Floor square root of a non-negative integer by Newton iteration.
 *
 * The start value 2^ceil(bits/2) is >= sqrt(n), and the iteration
 * x <- (x + n/x) / 2 decreases monotonically until it reaches floor(sqrt(n)).
 */
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) {
        throw std::domain_error("isqrt: negative argument");
    }
    if (n < 2) {
        return n;
    }
    BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((bit_length(n) + 1) / 2);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) {
            return x;
        }
        x = std::move(y);
    }
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) {
        return false;
    }
    const BigInt r = isqrt(n);
    return r * r == n;
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

/// Quotient of an exact division; the caller guarantees divisibility.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace sqdisc
