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

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqdisc {

/**
 * An explicit finite set of integer coefficients, with the closure flags that
 * decide which square-discriminant construction applies. The flags are always
 * recomputed from the elements.
 */
class CoeffSet {
public:
    static CoeffSet classify(std::vector<std::int64_t> elements) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (elements.empty() || (elements.size() == 1 && elements.front() == 0)) {
            throw std::domain_error("coefficient set must be nonempty and different from {0}");
        }
        CoeffSet s;
        s.elements_ = std::move(elements);
        for (std::int64_t e : s.elements_) {
            if (e == INT64_MIN) {
                throw std::domain_error("coefficient set element out of range");
            }
            s.height_ = std::max(s.height_, e < 0 ? -e : e);
        }
        s.negation_closed_ = std::all_of(s.elements_.begin(), s.elements_.end(),
                                         [&](std::int64_t e) { return s.contains(-e); });
        s.multiplication_closed_ = true;
        for (std::int64_t x : s.elements_) {
            for (std::int64_t y : s.elements_) {
                const __int128 p = static_cast<__int128>(x) * y;
                if (p > INT64_MAX || p < INT64_MIN || !s.contains(static_cast<std::int64_t>(p))) {
                    s.multiplication_closed_ = false;
                    break;
                }
            }
            if (!s.multiplication_closed_) {
                break;
            }
        }
        s.contains_pm1_ = s.contains(1) && s.contains(-1);
        return s;
    }

    /// Accepts the aliases pm1 = {-1,1}, zo = {0,1}, zpm1 = {-1,0,1}, or a comma-separated list.
    static CoeffSet parse(std::string_view text) {
        if (text == "pm1") {
            return classify({-1, 1});
        }
        if (text == "zo") {
            return classify({0, 1});
        }
        if (text == "zpm1") {
            return classify({-1, 0, 1});
        }
        std::vector<std::int64_t> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) {
                comma = text.size();
            }
            const std::string token(text.substr(pos, comma - pos));
            char* end = nullptr;
            errno = 0;
            const long long v = std::strtoll(token.c_str(), &end, 10);
            if (token.empty() || end != token.c_str() + token.size() || errno != 0) {
                throw std::invalid_argument("bad coefficient set element '" + token + "'");
            }
            out.push_back(v);
            pos = comma + 1;
        }
        return classify(std::move(out));
    }

    const std::vector<std::int64_t>& elements() const { return elements_; }
    std::int64_t height() const { return height_; }
    bool negation_closed() const { return negation_closed_; }
    bool multiplication_closed() const { return multiplication_closed_; }
    bool contains_pm1() const { return contains_pm1_; }

    bool contains(std::int64_t v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

    bool contains(const BigInt& v) const { return v.fits_slong_p() && contains(static_cast<std::int64_t>(v.get_si())); }

    bool contains_all_coefficients(const IntPolynomial& f) const {
        return std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](const BigInt& c) { return contains(c); });
    }

    /// Membership in P(N): nonzero, coefficients in the set, nonzero constant term.
    bool admits(const IntPolynomial& f) const {
        if (f.is_zero() || f.constant_term() == 0) {
            return false;
        }
        return contains_all_coefficients(f);
    }

    /// Element of least absolute value, ties toward the positive one.
    std::int64_t smallest_abs(bool nonzero) const {
        std::int64_t best = 0;
        bool found = false;
        for (std::int64_t e : elements_) {
            if (nonzero && e == 0) {
                continue;
            }
            const auto ae = e < 0 ? -e : e;
            const auto ab = best < 0 ? -best : best;
            if (!found || ae < ab || (ae == ab && e > best)) {
                best = e;
                found = true;
            }
        }
        return best;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += std::to_string(elements_[i]);
        }
        return out;
    }

    friend bool operator==(const CoeffSet& a, const CoeffSet& b) { return a.elements_ == b.elements_; }

private:
    CoeffSet() = default;

    std::vector<std::int64_t> elements_;
    std::int64_t height_ = 0;
    bool negation_closed_ = false;
    bool multiplication_closed_ = false;
    bool contains_pm1_ = false;
};

}  // namespace sqdisc
