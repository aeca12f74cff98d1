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

// Resultants of integer polynomials.
//
// Sign convention: Res(f, g) is the determinant of the Sylvester matrix with
// the deg(g) rows of f first, i.e. Res(f, g) = lc(f)^{deg g} prod_{f(a)=0} g(a).
// For constants, Res(c, g) = c^{deg g} and Res(f, c) = c^{deg f}.

#include "sqdisc/bigint.hpp"
#include "sqdisc/modular.hpp"
#include "sqdisc/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sqdisc {

namespace detail {

/// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a = q b + r.
inline std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lcb = b.back();
    long e = static_cast<long>(a.size()) - static_cast<long>(db);
    while (!a.empty() && a.size() > db) {
        const BigInt c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < shift; ++i) {
            a[i] *= lcb;
        }
        for (std::size_t j = 0; j < db; ++j) {
            a[shift + j] = a[shift + j] * lcb - c * b[j];
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) {
            a.pop_back();
        }
        --e;
    }
    if (e > 0) {
        const BigInt scale = pow(lcb, static_cast<unsigned long>(e));
        for (auto& x : a) {
            x *= scale;
        }
    }
    return a;
}

inline std::vector<BigInt> divide_all(std::vector<BigInt> a, const BigInt& d) {
    if (d != 1) {
        for (auto& x : a) {
            x = divexact(x, d);
        }
    }
    return a;
}

inline void check_nonzero(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        throw std::domain_error("resultant: zero polynomial argument");
    }
}

/// Handles the cases where one argument is constant. Returns false otherwise.
inline bool constant_resultant(const IntPolynomial& f, const IntPolynomial& g, BigInt& out) {
    if (f.degree() == 0) {
        out = pow(f.leading(), static_cast<unsigned long>(g.degree()));
        return true;
    }
    if (g.degree() == 0) {
        out = pow(g.leading(), static_cast<unsigned long>(f.degree()));
        return true;
    }
    return false;
}

}  // namespace detail

/**
 * Exact resultant by the subresultant pseudo-remainder sequence
 * (Collins/Brown-Traub; Cohen, Algorithm 3.3.7). Intermediate divisions are exact.
 */
inline BigInt resultant_subresultant(const IntPolynomial& f, const IntPolynomial& g) {
    detail::check_nonzero(f, g);
    BigInt out;
    if (detail::constant_resultant(f, g, out)) {
        return out;
    }

    std::vector<BigInt> a = f.coeffs();
    std::vector<BigInt> b = g.coeffs();
    int sign = 1;
    if (a.size() < b.size()) {
        std::swap(a, b);
        if ((a.size() - 1) % 2 == 1 && (b.size() - 1) % 2 == 1) {
            sign = -sign;
        }
    }

    const BigInt ca = IntPolynomial(a).content();
    const BigInt cb = IntPolynomial(b).content();
    const BigInt t = pow(ca, static_cast<unsigned long>(b.size() - 1)) * pow(cb, static_cast<unsigned long>(a.size() - 1));
    a = detail::divide_all(std::move(a), ca);
    b = detail::divide_all(std::move(b), cb);

    BigInt gg = 1;
    BigInt h = 1;
    for (;;) {
        const std::size_t da = a.size() - 1;
        const std::size_t db = b.size() - 1;
        const std::size_t delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) {
            sign = -sign;
        }
        std::vector<BigInt> r = detail::pseudo_remainder(std::move(a), b);
        a = std::move(b);
        if (r.empty()) {
            return 0;
        }
        b = detail::divide_all(std::move(r), gg * pow(h, static_cast<unsigned long>(delta)));
        gg = a.back();
        if (delta > 0) {
            h = divexact(pow(gg, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.size() == 1) {
            break;
        }
    }
    const std::size_t da = a.size() - 1;
    h = divexact(pow(b.back(), static_cast<unsigned long>(da)), pow(h, static_cast<unsigned long>(da - 1)));
    return sign * t * h;
}

/// log2 of a Hadamard bound on |Res(f, g)|: ||f||_2^{deg g} ||g||_2^{deg f}.
inline double resultant_bound_bits(const IntPolynomial& f, const IntPolynomial& g) {
    auto log2_norm2 = [](const IntPolynomial& p) {
        BigInt s = 0;
        for (const auto& c : p.coeffs()) {
            s += c * c;
        }
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, s.get_mpz_t());
        return std::log2(mant) + static_cast<double>(exp);
    };
    return 0.5 * (g.degree() * log2_norm2(f) + f.degree() * log2_norm2(g));
}

/**
 * Exact resultant by reduction modulo enough 62-bit primes to exceed twice the
 * Hadamard bound, followed by incremental Chinese remaindering.
 */
inline BigInt resultant_multimodular(const IntPolynomial& f, const IntPolynomial& g) {
    detail::check_nonzero(f, g);
    BigInt out;
    if (detail::constant_resultant(f, g, out)) {
        return out;
    }

    // Symmetric range needs product > 2|Res|; a few spare bits absorb rounding in the bound.
    const double needed_bits = resultant_bound_bits(f, g) + 4.0;
    const auto& primes = modular::large_primes();

    BigInt value = 0;
    BigInt modulus = 1;
    double modulus_bits = 0.0;
    for (modular::u64 p : primes) {
        if (modulus_bits > needed_bits) {
            break;
        }
        const unsigned long pl = static_cast<unsigned long>(p);
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), pl) || mpz_divisible_ui_p(g.leading().get_mpz_t(), pl)) {
            continue;
        }
        const modular::MontgomeryField F(p);
        std::vector<modular::u64> a;
        std::vector<modular::u64> b;
        a.reserve(f.size());
        b.reserve(g.size());
        for (const auto& c : f.coeffs()) {
            a.push_back(F.to_mont(c));
        }
        for (const auto& c : g.coeffs()) {
            b.push_back(F.to_mont(c));
        }
        const modular::u64 r = F.from_mont(modular::resultant_mod(F, std::move(a), std::move(b)));

        // value += modulus * ((r - value) * modulus^{-1} mod p)
        const modular::u64 vm = static_cast<modular::u64>(mpz_fdiv_ui(value.get_mpz_t(), pl));
        const modular::u64 mm = static_cast<modular::u64>(mpz_fdiv_ui(modulus.get_mpz_t(), pl));
        const modular::u64 diff = r >= vm ? r - vm : r + p - vm;
        const modular::u64 step = modular::mulmod_slow(diff, modular::powmod_slow(mm, p - 2, p), p);
        value += modulus * BigInt(static_cast<unsigned long>(step));
        modulus *= BigInt(static_cast<unsigned long>(p));
        modulus_bits += std::log2(static_cast<double>(p));
    }
    if (modulus_bits <= needed_bits) {
        throw std::length_error("resultant_multimodular: prime table exhausted");
    }
    if (2 * value > modulus) {
        value -= modulus;
    }
    return value;
}

/// Total degree from which the multi-modular route beats the PRS on {-1,1} discriminants.
inline constexpr int kMultimodularDegreeThreshold = 40;

inline RationalValue resultant(const IntPolynomial& f, const IntPolynomial& g) {
    detail::check_nonzero(f, g);
    if (f.degree() + g.degree() >= kMultimodularDegreeThreshold) {
        return RationalValue(resultant_multimodular(f, g));
    }
    return RationalValue(resultant_subresultant(f, g));
}

}  // namespace sqdisc
