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

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqdisc {

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients.
 *
 * coeffs()[i] is the coefficient of X^i. The top stored coefficient is never
 * zero; the zero polynomial has no stored coefficients and degree -1.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    static IntPolynomial from_ints(std::span<const std::int64_t> coeffs) {
        std::vector<BigInt> out;
        out.reserve(coeffs.size());
        for (std::int64_t c : coeffs) {
            out.emplace_back(static_cast<long>(c));
        }
        return IntPolynomial(std::move(out));
    }

    /// X^n
    static IntPolynomial monomial(std::size_t n, const BigInt& c = 1) {
        std::vector<BigInt> out(n + 1);
        out[n] = c;
        return IntPolynomial(std::move(out));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Coefficient of X^i; zero beyond the degree.
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    const BigInt& leading() const {
        if (is_zero()) {
            throw std::domain_error("leading coefficient of the zero polynomial");
        }
        return coeffs_.back();
    }

    BigInt constant_term() const { return coeff(0); }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<BigInt> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
        }
        return IntPolynomial(std::move(out));
    }

    /// Greatest common divisor of the coefficients (non-negative).
    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) {
                break;
            }
        }
        return g;
    }

    /// Largest absolute value of a coefficient.
    BigInt height() const {
        BigInt h = 0;
        for (const auto& c : coeffs_) {
            if (abs(c) > h) {
                h = abs(c);
            }
        }
        return h;
    }

    IntPolynomial operator-() const {
        IntPolynomial out = *this;
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }

    IntPolynomial& operator+=(const IntPolynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] -= rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    IntPolynomial& operator*=(const BigInt& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
    friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// X^shift * this
    IntPolynomial shifted(std::size_t shift) const {
        if (is_zero()) {
            return {};
        }
        std::vector<BigInt> out(shift + coeffs_.size());
        std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(shift));
        return IntPolynomial(std::move(out));
    }

    /// Comma-separated coefficients, constant term first. The zero polynomial prints as "0".
    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += coeffs_[i].get_str();
        }
        return out;
    }

    /// Parses the comma-separated coefficient format; throws std::invalid_argument on bad input.
    static IntPolynomial parse(std::string_view text) {
        std::vector<BigInt> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) {
                comma = text.size();
            }
            std::string token(text.substr(pos, comma - pos));
            const auto first = token.find_first_not_of(" \t");
            const auto last = token.find_last_not_of(" \t");
            if (first == std::string::npos) {
                throw std::invalid_argument("empty coefficient in polynomial '" + std::string(text) + "'");
            }
            token = token.substr(first, last - first + 1);
            if (token.front() == '+') {
                token.erase(0, 1);
            }
            BigInt c;
            if (token.empty() || c.set_str(token, 10) != 0) {
                throw std::invalid_argument("bad coefficient '" + token + "' in polynomial '" + std::string(text) + "'");
            }
            out.push_back(std::move(c));
            pos = comma + 1;
        }
        return IntPolynomial(std::move(out));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<BigInt> coeffs_;
};

/// X^deg(f) f(1/X). Requires f(0) != 0 so that the map is an involution.
inline IntPolynomial reverse(const IntPolynomial& f) {
    if (f.is_zero() || f.constant_term() == 0) {
        throw std::domain_error("reverse: polynomial must have nonzero constant term");
    }
    std::vector<BigInt> out(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPolynomial(std::move(out));
}

/// Even degree and fixed by the reversal map.
inline bool is_reciprocal(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() % 2 != 0) {
        return false;
    }
    const auto& c = f.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

/// f(X^k)
inline IntPolynomial compose_power(const IntPolynomial& f, unsigned k) {
    if (k == 0) {
        throw std::domain_error("compose_power: k must be positive");
    }
    if (f.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(static_cast<std::size_t>(f.degree()) * k + 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i * k] = f.coeffs()[i];
    }
    return IntPolynomial(std::move(out));
}

/// f(-X)
inline IntPolynomial negate_variable(const IntPolynomial& f) {
    std::vector<BigInt> out = f.coeffs();
    for (std::size_t i = 1; i < out.size(); i += 2) {
        out[i] = -out[i];
    }
    return IntPolynomial(std::move(out));
}

inline BigInt evaluate_at(const IntPolynomial& f, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

inline RationalValue evaluate_at(const IntPolynomial& f, const RationalValue& x) {
    RationalValue acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * x + RationalValue(*it);
    }
    acc.canonicalize();
    return acc;
}

inline std::complex<double> evaluate_at(const IntPolynomial& f, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * z + it->get_d();
    }
    return acc;
}

/// Coefficients converted to double, constant term first.
inline std::vector<double> to_doubles(const IntPolynomial& f) {
    std::vector<double> out;
    out.reserve(f.size());
    for (const auto& c : f.coeffs()) {
        out.push_back(c.get_d());
    }
    return out;
}

}  // namespace sqdisc
