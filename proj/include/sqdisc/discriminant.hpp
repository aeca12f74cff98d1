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

#include "sqdisc/bigint.hpp"
#include "sqdisc/polynomial.hpp"
#include "sqdisc/resultant.hpp"

#include <stdexcept>
#include <string>

namespace sqdisc {

/// True iff q is zero or the square of a rational number.
inline bool is_square_rational(const RationalValue& q) {
    if (q == 0) {
        return true;
    }
    if (q < 0) {
        return false;
    }
    return is_perfect_square(BigInt(q.get_num() * q.get_den()));
}

struct DiscriminantValue {
    RationalValue value;
    bool is_square = false;
    bool is_zero = false;

    static DiscriminantValue of(RationalValue v) {
        DiscriminantValue d;
        d.value = std::move(v);
        d.value.canonicalize();
        d.is_zero = d.value == 0;
        d.is_square = is_square_rational(d.value);
        return d;
    }

    std::string to_string() const { return value.get_str(); }

    friend bool operator==(const DiscriminantValue&, const DiscriminantValue&) = default;
};

/**
 * Exact discriminant a_n^{2n-2} prod_{i<j} (a_i - a_j)^2.
 *
 * Constants give a_0^{-2} and linear polynomials give 1 (empty product);
 * otherwise (-1)^{n(n-1)/2} Res(f, f') / a_n, where the division is exact.
 */
inline DiscriminantValue discriminant(const IntPolynomial& f) {
    if (f.is_zero()) {
        throw std::domain_error("discriminant: zero polynomial");
    }
    const int n = f.degree();
    if (n == 0) {
        const BigInt a0 = f.leading();
        return DiscriminantValue::of(RationalValue(BigInt(1), BigInt(a0 * a0)));
    }
    if (n == 1) {
        return DiscriminantValue::of(RationalValue(1));
    }
    const RationalValue res = resultant(f, f.derivative());
    BigInt value = divexact(res.get_num(), f.leading());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) {
        value = -value;
    }
    return DiscriminantValue::of(RationalValue(value));
}

/**
 * Square-discriminant test for reciprocal polynomials of even degree n:
 * the discriminant is a square iff (-1)^{n/2} f(1) f(-1) is.
 */
inline bool reciprocal_square_criterion(const IntPolynomial& f) {
    if (!is_reciprocal(f)) {
        throw std::domain_error("reciprocal_square_criterion: polynomial is not reciprocal");
    }
    BigInt v = evaluate_at(f, BigInt(1)) * evaluate_at(f, BigInt(-1));
    if ((f.degree() / 2) % 2 != 0) {
        v = -v;
    }
    return is_square_rational(RationalValue(v));
}

}  // namespace sqdisc
