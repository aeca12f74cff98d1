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

#include "sqdisc/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sqdisc {

/// Polynomial over F_2, bit i of the packed words is the coefficient of X^i.
class F2Polynomial {
public:
    F2Polynomial() = default;

    static F2Polynomial reduce(const IntPolynomial& f) {
        F2Polynomial out;
        out.words_.assign((f.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (mpz_odd_p(f.coeffs()[i].get_mpz_t())) {
                out.words_[i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
        out.trim();
        return out;
    }

    static F2Polynomial from_bits(const std::vector<bool>& bits) {
        F2Polynomial out;
        out.words_.assign((bits.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i]) {
                out.words_[i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
        out.trim();
        return out;
    }

    bool is_zero() const { return words_.empty(); }

    int degree() const {
        if (words_.empty()) {
            return -1;
        }
        return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
    }

    bool bit(std::size_t i) const { return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1); }

    std::vector<bool> bits() const {
        std::vector<bool> out(static_cast<std::size_t>(degree() + 1));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = bit(i);
        }
        return out;
    }

    /// Formal derivative: only odd exponents survive, shifted down by one.
    F2Polynomial derivative() const {
        F2Polynomial out;
        out.words_.assign(words_.size(), 0);
        constexpr std::uint64_t kOdd = 0xAAAAAAAAAAAAAAAAULL;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t odd = words_[w] & kOdd;
            out.words_[w] |= odd >> 1;
        }
        out.trim();
        return out;
    }

    /// a <- a mod b
    static void remainder(F2Polynomial& a, const F2Polynomial& b) {
        const int db = b.degree();
        for (int da = a.degree(); da >= db; da = a.degree()) {
            a.xor_shifted(b, static_cast<std::size_t>(da - db));
        }
    }

    friend F2Polynomial gcd(F2Polynomial a, F2Polynomial b) {
        while (!b.is_zero()) {
            remainder(a, b);
            std::swap(a, b);
        }
        return a;
    }

    friend bool operator==(const F2Polynomial&, const F2Polynomial&) = default;

private:
    void xor_shifted(const F2Polynomial& b, std::size_t shift) {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        const std::size_t need = ws + b.words_.size() + 1;
        if (words_.size() < need) {
            words_.resize(need, 0);
        }
        for (std::size_t i = 0; i < b.words_.size(); ++i) {
            words_[ws + i] ^= b.words_[i] << bs;
            if (bs != 0) {
                words_[ws + i + 1] ^= b.words_[i] >> (64 - bs);
            }
        }
        trim();
    }

    void trim() {
        while (!words_.empty() && words_.back() == 0) {
            words_.pop_back();
        }
    }

    std::vector<std::uint64_t> words_;
};

/**
 * True iff f mod 2 keeps the degree of f and is squarefree over F_2, i.e.
 * gcd(f mod 2, f' mod 2) = 1. A true result means the discriminant of f is
 * odd, hence nonzero.
 */
inline bool squarefree_mod2(const IntPolynomial& f) {
    const F2Polynomial r = F2Polynomial::reduce(f);
    if (r.is_zero()) {
        throw std::domain_error("squarefree_mod2: polynomial vanishes mod 2");
    }
    if (r.degree() != f.degree()) {
        return false;
    }
    const F2Polynomial g = gcd(r, r.derivative());
    return g.degree() == 0;
}

}  // namespace sqdisc
