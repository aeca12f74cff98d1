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

// Randomized property suites shared by `sqdisc selftest` and the acceptance
// runner. Every suite is seeded and deterministic.

#include "sqdisc/constructions.hpp"
#include "sqdisc/discriminant.hpp"
#include "sqdisc/f2_polynomial.hpp"
#include "sqdisc/polynomial.hpp"
#include "sqdisc/resultant.hpp"
#include "sqdisc/roots.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sqdisc::suites {

struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool passed() const { return trials > 0 && failures == 0; }

    void record(bool ok, const std::string& what) {
        ++trials;
        if (!ok) {
            if (failures == 0) {
                first_failure = what;
            }
            ++failures;
        }
    }
};

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::int64_t pick(Rng& rng, const std::vector<std::int64_t>& v) {
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v.size()) - 1))];
}

/// Degree exactly `degree`, coefficients uniform in [lo, hi], nonzero leading coefficient.
inline IntPolynomial random_polynomial(Rng& rng, int degree, long lo, long hi) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) {
        x = uniform(rng, lo, hi);
    }
    while (c.back() == 0) {
        c.back() = uniform(rng, lo, hi);
    }
    return IntPolynomial(std::move(c));
}

/// A random element of P(N) of the given degree.
inline IntPolynomial random_member(Rng& rng, const CoeffSet& set, int degree) {
    std::vector<std::int64_t> nonzero;
    for (auto e : set.elements()) {
        if (e != 0) {
            nonzero.push_back(e);
        }
    }
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const bool end = i == 0 || i + 1 == c.size();
        c[i] = static_cast<long>(pick(rng, end ? nonzero : set.elements()));
    }
    return IntPolynomial(std::move(c));
}

namespace detail {

class Timer {
public:
    explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    SuiteResult& r_;
    std::chrono::steady_clock::time_point start_;
};

inline IntPolynomial cyclotomic_like(int n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(1));
    return IntPolynomial(std::move(c));
}

}  // namespace detail

/**
 * Closed forms: disc(X^{n+1} - 1) = (-1)^{n(n-1)/2} (n+1)^{n+1} for 1 <= n <= max_power,
 * and disc(1 + X + ... + X^n) a nonzero square for n = 1 mod 4, n <= max_pn.
 */
inline SuiteResult exact_identity_suite(int max_power = 30, int max_pn = 101) {
    SuiteResult r{"exact identities"};
    detail::Timer t(r);
    for (int n = 1; n <= max_power; ++n) {
        const IntPolynomial f = IntPolynomial::monomial(static_cast<std::size_t>(n) + 1) - IntPolynomial{1};
        BigInt expected = pow(BigInt(n + 1), static_cast<unsigned long>(n + 1));
        if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) {
            expected = -expected;
        }
        r.record(discriminant(f).value == RationalValue(expected), "disc(X^" + std::to_string(n + 1) + " - 1)");
    }
    for (int n = 1; n <= max_pn; n += 4) {
        const DiscriminantValue d = discriminant(detail::cyclotomic_like(n));
        r.record(d.is_square && !d.is_zero, "disc(p_" + std::to_string(n) + ") square");
    }
    return r;
}

/// disc(fg) = disc(f) disc(g) Res(f,g)^2 on random pairs with deg <= 6, coefficients in [-3,3].
inline SuiteResult multiplicativity_suite(std::size_t trials, std::uint64_t seed = 1) {
    SuiteResult r{"discriminant multiplicativity"};
    detail::Timer t(r);
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const IntPolynomial f = random_polynomial(rng, static_cast<int>(uniform(rng, 0, 6)), -3, 3);
        const IntPolynomial g = random_polynomial(rng, static_cast<int>(uniform(rng, 0, 6)), -3, 3);
        const RationalValue res = resultant(f, g);
        const RationalValue lhs = discriminant(f * g).value;
        const RationalValue rhs = discriminant(f).value * discriminant(g).value * res * res;
        r.record(lhs == rhs, "f = " + f.to_string() + ", g = " + g.to_string());
    }
    return r;
}

/**
 * Random reciprocal polynomials of even degree <= 12. The criterion always
 * implies a square discriminant; the converse is checked whenever the
 * discriminant is nonzero (a repeated root makes it 0, a square, while the
 * criterion value need not be one).
 */
inline SuiteResult reciprocal_criterion_suite(std::size_t trials, std::uint64_t seed = 2) {
    SuiteResult r{"reciprocal square criterion"};
    detail::Timer t(r);
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const int n = 2 * static_cast<int>(uniform(rng, 1, 6));
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n / 2; ++j) {
            long v = uniform(rng, -3, 3);
            while (j == 0 && v == 0) {
                v = uniform(rng, -3, 3);
            }
            c[static_cast<std::size_t>(j)] = v;
            c[static_cast<std::size_t>(n - j)] = v;
        }
        const IntPolynomial f(std::move(c));
        const bool criterion = reciprocal_square_criterion(f);
        const DiscriminantValue d = discriminant(f);
        r.record(d.is_zero ? (!criterion || d.is_square) : criterion == d.is_square, "f = " + f.to_string());
    }
    return r;
}

/// disc(f(X) f(X^k)) is a square for random even-degree f (deg <= 8) and k in {1, 3, 5}.
inline SuiteResult compose_power_suite(std::size_t trials, std::uint64_t seed = 3) {
    SuiteResult r{"f(X) f(X^k) square discriminant"};
    detail::Timer t(r);
    Rng rng(seed);
    constexpr unsigned ks[] = {1, 3, 5};
    for (std::size_t i = 0; i < trials; ++i) {
        const IntPolynomial f = random_polynomial(rng, 2 * static_cast<int>(uniform(rng, 1, 4)), -3, 3);
        const unsigned k = ks[i % 3];
        const DiscriminantValue d = discriminant(f * compose_power(f, k));
        r.record(d.is_square, "f = " + f.to_string() + ", k = " + std::to_string(k));
    }
    return r;
}

/**
 * Randomized instances of one construction. The truncation g comes from a
 * random f in P(N) (degree 1..6), so the truncation can be compared against
 * the periodic expansion of f.
 *
 * negation: N in {+-1}, {0,+-1}, even k <= 12. multiplicative: N in {0,1}, {+-1},
 * k in {3,5,7}. pm1: N = {+-1}, k in {3,5,7}.
 */
inline SuiteResult construction_suite(ConstructionCase c, std::size_t trials, std::uint64_t seed = 4) {
    SuiteResult r{"construction (" + std::string(case_name(c)) + ")"};
    detail::Timer t(r);
    Rng rng(seed);
    std::vector<CoeffSet> sets;
    switch (c) {
        case ConstructionCase::negation: sets = {CoeffSet::classify({-1, 1}), CoeffSet::classify({-1, 0, 1})}; break;
        case ConstructionCase::multiplicative: sets = {CoeffSet::classify({0, 1}), CoeffSet::classify({-1, 1})}; break;
        case ConstructionCase::pm1: sets = {CoeffSet::classify({-1, 1})}; break;
    }
    constexpr unsigned odd_ks[] = {3, 5, 7};
    for (std::size_t i = 0; i < trials; ++i) {
        const CoeffSet& set = sets[i % sets.size()];
        const IntPolynomial f = random_member(rng, set, static_cast<int>(uniform(rng, 1, 6)));
        const unsigned k = c == ConstructionCase::negation ? 2 * static_cast<unsigned>(uniform(rng, 1, 6))
                                                           : odd_ks[static_cast<std::size_t>(uniform(rng, 0, 2))];
        const std::int64_t a = pick(rng, set.elements());
        const std::string tag = "N = {" + set.to_string() + "}, f = " + f.to_string() + ", k = " + std::to_string(k);

        const IntPolynomial g = periodic_truncation(f, k, set, c == ConstructionCase::pm1);
        const IntPolynomial fk = construct(c, g, k, a, set);
        const DiscriminantValue disc = discriminant(fk);

        // F agrees with f_k (with g for the product construction) below X^{k-1}.
        const IntPolynomial& approximant = c == ConstructionCase::multiplicative ? g : fk;
        bool ok = set.admits(fk) && disc.is_square;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            ok = ok && approximant.coeff(j) == f.coeffs()[j % f.size()];
        }
        switch (c) {
            case ConstructionCase::negation: {
                ok = ok && fk.degree() == static_cast<int>(4 * k) && is_reciprocal(fk) &&
                     evaluate_at(fk, BigInt(1)) == evaluate_at(fk, BigInt(-1)) && reciprocal_square_criterion(fk);
                if (set.elements() == std::vector<std::int64_t>{-1, 1}) {
                    ok = ok && squarefree_mod2(fk) && !disc.is_zero;
                }
                break;
            }
            case ConstructionCase::multiplicative: {
                ok = ok && fk.degree() == static_cast<int>(k * k - 1);
                if (ok && g.degree() >= 1) {
                    for (const auto& z : find_all_roots(g).roots) {
                        ok = ok && relative_residual(fk, z) < 1e-8;
                    }
                }
                break;
            }
            case ConstructionCase::pm1: {
                const CaseIIIParameters p = case_iii_parameters(g);
                ok = ok && evaluate_at(fk, BigInt(1)) == p.u && evaluate_at(fk, BigInt(-1)) == p.u &&
                     fk.degree() % 4 == 0 && is_reciprocal(fk) && reciprocal_square_criterion(fk);
                break;
            }
        }
        r.record(ok, tag);
    }
    return r;
}

/**
 * Elementary symmetric functions of the computed roots reproduce the
 * coefficients (relative 1e-6 of the largest coefficient), and the root
 * multiset is closed under conjugation within 1e-9.
 */
inline SuiteResult root_reconstruction_suite(std::size_t trials, std::uint64_t seed = 5, int max_degree = 32) {
    SuiteResult r{"root/coefficient reconstruction"};
    detail::Timer t(r);
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const IntPolynomial f = random_polynomial(rng, static_cast<int>(uniform(rng, 1, max_degree)), -2, 2);
        const RootSet rs = find_all_roots(f);
        std::vector<Complex> prod{Complex(f.leading().get_d(), 0.0)};
        for (const auto& z : rs.roots) {
            std::vector<Complex> next(prod.size() + 1, 0.0);
            for (std::size_t j = 0; j < prod.size(); ++j) {
                next[j + 1] += prod[j];
                next[j] -= z * prod[j];
            }
            prod = std::move(next);
        }
        const double scale = f.height().get_d();
        bool ok = prod.size() == f.size();
        for (std::size_t j = 0; ok && j < prod.size(); ++j) {
            ok = std::abs(prod[j] - f.coeffs()[j].get_d()) <= 1e-6 * scale;
        }
        std::vector<bool> used(rs.roots.size(), false);
        for (std::size_t a = 0; ok && a < rs.roots.size(); ++a) {
            bool matched = false;
            for (std::size_t b = 0; b < rs.roots.size() && !matched; ++b) {
                if (!used[b] && std::abs(rs.roots[b] - std::conj(rs.roots[a])) <= 1e-9) {
                    used[b] = matched = true;
                }
            }
            ok = matched;
        }
        r.record(ok, "f = " + f.to_string());
    }
    return r;
}

/// Roots of 1 + X + ... + X^n, n = 1 mod 4, n <= max_n: on the unit circle (1e-8) and (n+1)-st roots of unity (1e-7).
inline SuiteResult roots_of_unity_suite(int max_n = 101) {
    SuiteResult r{"roots of 1 + X + ... + X^n"};
    detail::Timer t(r);
    for (int n = 1; n <= max_n; n += 4) {
        const RootSet rs = find_all_roots(detail::cyclotomic_like(n));
        bool ok = static_cast<int>(rs.roots.size()) == n;
        for (const auto& z : rs.roots) {
            ok = ok && std::abs(std::abs(z) - 1.0) <= 1e-8 &&
                 std::abs(sqdisc::detail::ipow(z, static_cast<unsigned long>(n + 1)) - 1.0) <= 1e-7;
        }
        r.record(ok, "n = " + std::to_string(n));
    }
    return r;
}

}  // namespace sqdisc::suites
