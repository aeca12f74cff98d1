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

// Square-discriminant polynomials with constrained coefficients that have a
// zero close to a prescribed zero alpha of some f in P(N).
//
// Write F = f / (1 - X^{n+1}), whose coefficients are those of f repeated with
// period n+1, and let g be its truncation to degree k-1. Each construction
// builds from g a polynomial f_k with coefficients in N whose discriminant is
// a square, and F - f_k (or F - g) is divisible by X^{k-1}. A Rouche bound on a
// circle around alpha then forces a zero of f_k within the circle.

#include "sqdisc/coeff_set.hpp"
#include "sqdisc/discriminant.hpp"
#include "sqdisc/f2_polynomial.hpp"
#include "sqdisc/polynomial.hpp"
#include "sqdisc/roots.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqdisc {

enum class ConstructionCase {
    negation,        // N closed under negation: reciprocal f_k of degree 4k, k even
    multiplicative,  // N closed under multiplication: f_k = g(X) g(X^k), k odd
    pm1,             // {-1, 1} in N: reciprocal f_k with f_k(1) = f_k(-1) = u, k odd
};

enum class CaseRequest { automatic, negation, multiplicative, pm1 };

inline std::string_view case_name(ConstructionCase c) {
    switch (c) {
        case ConstructionCase::negation: return "negation";
        case ConstructionCase::multiplicative: return "multiplicative";
        case ConstructionCase::pm1: return "pm1";
    }
    return "?";
}

inline std::optional<ConstructionCase> parse_case_name(std::string_view s) {
    if (s == "negation" || s == "i") return ConstructionCase::negation;
    if (s == "multiplicative" || s == "ii") return ConstructionCase::multiplicative;
    if (s == "pm1" || s == "iii") return ConstructionCase::pm1;
    return std::nullopt;
}

inline std::optional<CaseRequest> parse_case_request(std::string_view s) {
    if (s == "auto") {
        return CaseRequest::automatic;
    }
    if (auto c = parse_case_name(s)) {
        switch (*c) {
            case ConstructionCase::negation: return CaseRequest::negation;
            case ConstructionCase::multiplicative: return CaseRequest::multiplicative;
            case ConstructionCase::pm1: return CaseRequest::pm1;
        }
    }
    return std::nullopt;
}

class UnsupportedCoeffSet : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IsolationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool case_applies(const CoeffSet& set, ConstructionCase c) {
    switch (c) {
        case ConstructionCase::negation: return set.negation_closed();
        case ConstructionCase::multiplicative: return set.multiplication_closed();
        case ConstructionCase::pm1: return set.contains_pm1();
    }
    return false;
}

inline ConstructionCase select_explicit(const CoeffSet& set, ConstructionCase c) {
    if (!case_applies(set, c)) {
        throw UnsupportedCoeffSet("unsupported coefficient set {" + set.to_string() + "} for case " +
                                  std::string(case_name(c)));
    }
    return c;
}

/// Resolves a request; automatic tries negation, then pm1, then multiplicative.
inline ConstructionCase select_case(const CoeffSet& set, CaseRequest request) {
    switch (request) {
        case CaseRequest::automatic:
            for (auto c : {ConstructionCase::negation, ConstructionCase::pm1, ConstructionCase::multiplicative}) {
                if (case_applies(set, c)) {
                    return c;
                }
            }
            throw UnsupportedCoeffSet("unsupported coefficient set {" + set.to_string() +
                                      "}: not closed under negation or multiplication and lacks +-1");
        case CaseRequest::negation: return select_explicit(set, ConstructionCase::negation);
        case CaseRequest::multiplicative: return select_explicit(set, ConstructionCase::multiplicative);
        case CaseRequest::pm1: return select_explicit(set, ConstructionCase::pm1);
    }
    throw std::logic_error("select_case: bad request");
}

inline bool required_parity_even(ConstructionCase c) { return c == ConstructionCase::negation; }

/// Smallest truncation order allowed by the case: 2 for negation, 3 otherwise.
inline unsigned minimum_order(ConstructionCase c) { return required_parity_even(c) ? 2 : 3; }

/**
 * Truncation g_j = a_{j mod (n+1)}, 0 <= j < k, of the periodic series F = f / (1 - X^{n+1}).
 *
 * A vanishing top coefficient is replaced by the nonzero element of least
 * absolute value (ties toward positive). With force_nonzero_at_one, if g(1) = 0
 * the top coefficient is set to +1 or -1, whichever leaves |g(1)| smallest and
 * nonzero (+1 on ties).
 */
inline IntPolynomial periodic_truncation(const IntPolynomial& f, unsigned k, const CoeffSet& set,
                                         bool force_nonzero_at_one) {
    if (!set.admits(f)) {
        throw std::domain_error("periodic_truncation: polynomial is not in P(N) for N = {" + set.to_string() + "}");
    }
    if (k < 2) {
        throw std::domain_error("periodic_truncation: k must be at least 2");
    }
    const std::size_t period = f.size();
    std::vector<BigInt> b(k);
    for (std::size_t j = 0; j < k; ++j) {
        b[j] = f.coeffs()[j % period];
    }
    if (b[k - 1] == 0) {
        b[k - 1] = static_cast<long>(set.smallest_abs(true));
    }
    if (force_nonzero_at_one) {
        BigInt rest = 0;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            rest += b[j];
        }
        if (rest + b[k - 1] == 0) {
            const BigInt plus = rest + 1;
            const BigInt minus = rest - 1;
            if (plus == 0) {
                b[k - 1] = -1;
            } else if (minus == 0 || abs(plus) <= abs(minus)) {
                b[k - 1] = 1;
            } else {
                b[k - 1] = -1;
            }
        }
    }
    return IntPolynomial(std::move(b));
}

namespace detail {

inline void check_truncation_shape(const IntPolynomial& g, unsigned k, bool want_even, const char* who) {
    if (k == 0 || (k % 2 == 0) != want_even) {
        throw std::domain_error(std::string(who) + ": k has the wrong parity");
    }
    if (g.degree() != static_cast<int>(k) - 1 || g.constant_term() == 0) {
        throw std::domain_error(std::string(who) + ": g must have degree k-1 and nonzero constant term");
    }
}

}  // namespace detail

/**
 * Negation-closed sets, k even: with h(X) = g(X) + X^k g(-X),
 *   f_k = h + a X^{2k} + X^{2k+1} h_rev,
 * a reciprocal polynomial of degree 4k with f_k(1) = f_k(-1).
 */
inline IntPolynomial construct_case_i(const IntPolynomial& g, unsigned k, std::int64_t a, const CoeffSet& set) {
    detail::check_truncation_shape(g, k, true, "construct_case_i");
    if (!set.contains(a)) {
        throw std::domain_error("construct_case_i: free coefficient not in the set");
    }
    for (const auto& c : g.coeffs()) {
        if (!set.contains(c) || !set.contains(BigInt(-c))) {
            throw std::domain_error("construct_case_i: coefficients of g and their negations must lie in the set");
        }
    }
    const IntPolynomial h = g + negate_variable(g).shifted(k);
    std::vector<BigInt> out(4 * static_cast<std::size_t>(k) + 1);
    for (std::size_t j = 0; j < 2 * static_cast<std::size_t>(k); ++j) {
        out[j] = h.coeff(j);
        out[4 * k - j] = h.coeff(j);
    }
    out[2 * k] = static_cast<long>(a);
    return IntPolynomial(std::move(out));
}

/// Multiplication-closed sets, k odd: f_k = g(X) g(X^k). Each coefficient is a single product b_i b_j.
inline IntPolynomial construct_case_ii(const IntPolynomial& g, unsigned k, const CoeffSet& set) {
    detail::check_truncation_shape(g, k, false, "construct_case_ii");
    if (!set.multiplication_closed()) {
        throw std::domain_error("construct_case_ii: coefficient set is not closed under multiplication");
    }
    return g * compose_power(g, k);
}

struct CaseIIIParameters {
    BigInt u;    // -1 if g(1) > 0, +1 if g(1) < 0
    BigInt ell;  // 4 g(1) - u, so |ell| = 4|g(1)| + 1
};

inline CaseIIIParameters case_iii_parameters(const IntPolynomial& g) {
    const BigInt g1 = evaluate_at(g, BigInt(1));
    if (g1 == 0) {
        throw std::domain_error("construct_case_iii: g(1) must be nonzero");
    }
    CaseIIIParameters p;
    p.u = g1 > 0 ? -1 : 1;
    p.ell = 4 * g1 - p.u;
    return p;
}

/**
 * Sets containing +-1, k odd:
 *   f_k = (1 + X^k) g + u X^{2k} (1 + ... + X^{|l|-1}) + X^{2k+|l|} (1 + X^k) g_rev,
 * reciprocal of degree 4k + 4|g(1)|, with f_k(1) = f_k(-1) = u.
 */
inline IntPolynomial construct_case_iii(const IntPolynomial& g, unsigned k, const CoeffSet& set) {
    detail::check_truncation_shape(g, k, false, "construct_case_iii");
    if (!set.contains_pm1()) {
        throw std::domain_error("construct_case_iii: coefficient set must contain -1 and 1");
    }
    const CaseIIIParameters p = case_iii_parameters(g);
    const std::size_t len = BigInt(abs(p.ell)).get_ui();
    const std::size_t kk = k;
    std::vector<BigInt> out(4 * kk + len);
    for (std::size_t j = 0; j < kk; ++j) {
        out[j] = g.coeffs()[j];
        out[j + kk] = g.coeffs()[j];
    }
    for (std::size_t j = 0; j < len; ++j) {
        out[2 * kk + j] = p.u;
    }
    const std::size_t top = out.size() - 1;
    for (std::size_t j = 0; j < 2 * kk; ++j) {
        out[top - j] = out[j];
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial construct(ConstructionCase c, const IntPolynomial& g, unsigned k, std::int64_t a,
                               const CoeffSet& set) {
    switch (c) {
        case ConstructionCase::negation: return construct_case_i(g, k, a, set);
        case ConstructionCase::multiplicative: return construct_case_ii(g, k, set);
        case ConstructionCase::pm1: return construct_case_iii(g, k, set);
    }
    throw std::logic_error("construct: bad case");
}

/// Free middle coefficient of the negation construction: least |a| in N, ties toward positive.
inline std::int64_t default_free_coefficient(const CoeffSet& set) { return set.smallest_abs(false); }

/// Bound B on the coefficients of F - f_k (negation, pm1) or F - g (multiplicative).
inline double coefficient_difference_bound(const CoeffSet& set, ConstructionCase c) {
    const double h = static_cast<double>(set.height());
    if (c == ConstructionCase::multiplicative) {
        return 2.0 * h;
    }
    return h + std::max(h, 1.0);
}

/// B r^{k-1} / (1 - r): bound for |F - f_k| on |z| <= r when X^{k-1} divides F - f_k.
inline double rouche_tail_bound(double B, double r, unsigned k) {
    return B * std::pow(r, static_cast<double>(k) - 1.0) / (1.0 - r);
}

inline constexpr unsigned kMaxTruncationOrder = 1u << 20;

/// Smallest k of the case's parity (and at least its minimum order) with rouche_tail_bound < m.
inline unsigned truncation_order_for_bound(double B, double r, double m, ConstructionCase c) {
    if (!(r >= 0.0 && r < 1.0) || !(m > 0.0)) {
        throw std::domain_error("truncation_order_for_bound: need 0 <= r < 1 and m > 0");
    }
    unsigned k = 1;
    while (!(rouche_tail_bound(B, r, k) < m)) {
        if (++k > kMaxTruncationOrder) {
            throw std::length_error("truncation_order_for_bound: order exceeds limit");
        }
    }
    if ((k % 2 == 0) != required_parity_even(c)) {
        ++k;
    }
    return std::max(k, minimum_order(c));
}

struct RoucheData {
    double R = 0.0;  // disk radius around alpha
    double m = 0.0;  // certified lower bound of |F| on the circle
    double B = 0.0;  // coefficient-difference bound
    double r = 0.0;  // |alpha| + R
    std::size_t samples = 0;
};

struct TruncationChoice {
    unsigned k = 0;
    RoucheData rouche;
};

inline constexpr std::size_t kInitialCircleSamples = 4096;
inline constexpr std::size_t kMaxCircleSamples = std::size_t{1} << 20;
inline constexpr double kTargetResidual = 1e-8;

namespace detail {

inline void check_target(const IntPolynomial& f, Complex alpha, double epsilon) {
    if (!(std::abs(alpha) < 1.0)) {
        throw std::domain_error("target zero must lie in the open unit disk (invert it via reverse first)");
    }
    if (!(epsilon > 0.0)) {
        throw std::domain_error("epsilon must be positive");
    }
    if (!(relative_residual(f, alpha) <= kTargetResidual)) {
        throw std::domain_error("target is not a zero of the polynomial");
    }
}

inline TruncationChoice choose_with_roots(const IntPolynomial& f, const RootSet& roots, Complex alpha, double epsilon,
                                          const CoeffSet& set, ConstructionCase c) {
    TruncationChoice out;
    RoucheData& d = out.rouche;
    d.R = std::min({epsilon, isolation_radius(roots, alpha, epsilon), 0.5 * (1.0 - std::abs(alpha))});
    d.r = std::abs(alpha) + d.R;
    d.B = coefficient_difference_bound(set, c);
    for (d.samples = kInitialCircleSamples;; d.samples *= 2) {
        d.m = min_modulus_on_circle(f, alpha, d.R, d.samples);
        if (d.m > 0.0) {
            break;
        }
        if (d.samples >= kMaxCircleSamples) {
            throw IsolationFailure("could not certify a positive minimum of |F| on the isolating circle");
        }
    }
    out.k = truncation_order_for_bound(d.B, d.r, d.m, c);
    return out;
}

}  // namespace detail

/**
 * Rouche data for approximating alpha: R = min(eps, half the distance to the
 * nearest other root, (1 - |alpha|)/2), a certified minimum m of |F| on
 * |z - alpha| = R (samples doubled from 4096 up to 2^20 until positive), the
 * case's coefficient bound B, and the least admissible k with B r^{k-1}/(1-r) < m.
 */
inline TruncationChoice choose_truncation_order(const IntPolynomial& f, Complex alpha, double epsilon,
                                                const CoeffSet& set, ConstructionCase c) {
    detail::check_target(f, alpha, epsilon);
    return detail::choose_with_roots(f, find_all_roots(f), alpha, epsilon, set, c);
}

struct GaloisFlags {
    bool in_alternating = false;  // square and nonzero discriminant
    bool in_wreath = false;       // reciprocal
};

struct ApproxCertificate {
    IntPolynomial polynomial;  // f in P(N) whose zero alpha is approximated
    CoeffSet set = CoeffSet::classify({-1, 1});
    Complex alpha;
    double epsilon = 0.0;
    ConstructionCase case_used = ConstructionCase::negation;
    unsigned k = 0;
    std::int64_t free_coefficient = 0;  // a, used by the negation construction only
    IntPolynomial g;
    IntPolynomial f_k;
    Complex beta;
    double achieved_error = 0.0;
    RoucheData rouche;
    DiscriminantValue disc;
    GaloisFlags galois;
    // Set when the requested root lay outside the unit disk: polynomial is then
    // the reversal of the input and alpha = 1 / original_root.
    bool inverted = false;
    Complex original_root;
};

struct CertificateCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CertificateCheck> checks;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

struct VerifyOptions {
    bool recompute_discriminant = true;
    const RootSet* roots_of_f = nullptr;
    const RootSet* roots_of_f_k = nullptr;
};

/**
 * Re-checks every certificate invariant. Structural facts (truncation,
 * construction, membership, parity, discriminant, flags) are recomputed
 * exactly; Rouche data and zeros are re-derived numerically with the same
 * deterministic routines that produced them.
 */
inline VerificationReport verify_certificate(const ApproxCertificate& c, const VerifyOptions& opt = {}) {
    VerificationReport rep;
    const CoeffSet& set = c.set;

    const bool in_p = set.admits(c.polynomial) && c.polynomial.degree() >= 1;
    rep.add("polynomial_in_P(N)", in_p);
    if (!in_p) {
        return rep;
    }
    rep.add("case_applies", case_applies(set, c.case_used), std::string(case_name(c.case_used)));
    if (!case_applies(set, c.case_used)) {
        return rep;
    }
    rep.add("alpha_in_open_disk", std::abs(c.alpha) < 1.0);
    rep.add("alpha_is_zero", relative_residual(c.polynomial, c.alpha) <= kTargetResidual);
    if (c.inverted) {
        rep.add("inversion_consistent",
                std::abs(c.alpha * c.original_root - 1.0) <= 1e-12 && std::abs(c.original_root) > 1.0);
    }
    rep.add("k_parity", c.k >= minimum_order(c.case_used) && (c.k % 2 == 0) == required_parity_even(c.case_used),
            "k = " + std::to_string(c.k));
    if (!rep.passed()) {
        return rep;
    }

    // Structure, recomputed exactly.
    IntPolynomial g;
    IntPolynomial fk;
    try {
        g = periodic_truncation(c.polynomial, c.k, set, c.case_used == ConstructionCase::pm1);
        fk = construct(c.case_used, g, c.k, c.free_coefficient, set);
    } catch (const std::exception& e) {
        rep.add("construction", false, e.what());
        return rep;
    }
    rep.add("g_is_truncation", g == c.g);
    rep.add("f_k_matches_construction", fk == c.f_k);
    rep.add("f_k_coefficients_in_set", set.admits(c.f_k));
    const unsigned kk = c.k;
    int expected_degree = 0;
    switch (c.case_used) {
        case ConstructionCase::negation: expected_degree = static_cast<int>(4 * kk); break;
        case ConstructionCase::multiplicative: expected_degree = static_cast<int>(kk * kk - 1); break;
        case ConstructionCase::pm1: {
            const BigInt g1 = evaluate_at(c.g, BigInt(1));
            expected_degree = static_cast<int>(4 * kk + 4 * BigInt(abs(g1)).get_ui());
            break;
        }
    }
    rep.add("f_k_degree", c.f_k.degree() == expected_degree, "degree " + std::to_string(c.f_k.degree()));
    if (c.case_used != ConstructionCase::multiplicative) {
        rep.add("f_k_reciprocal", is_reciprocal(c.f_k));
        rep.add("f_k_one_equals_minus_one", evaluate_at(c.f_k, BigInt(1)) == evaluate_at(c.f_k, BigInt(-1)));
    }

    // Discriminant and flags.
    const DiscriminantValue disc = opt.recompute_discriminant ? discriminant(c.f_k) : c.disc;
    rep.add("disc_matches", disc == c.disc, disc.to_string());
    rep.add("disc_is_square", disc.is_square);
    if (c.case_used != ConstructionCase::multiplicative) {
        rep.add("reciprocal_criterion_agrees", is_reciprocal(c.f_k) && reciprocal_square_criterion(c.f_k) == disc.is_square);
    }
    if (c.case_used == ConstructionCase::negation && set.elements() == std::vector<std::int64_t>{-1, 1}) {
        rep.add("disc_nonzero_mod2", squarefree_mod2(c.f_k) && !disc.is_zero);
    }
    rep.add("galois_in_alternating", c.galois.in_alternating == (disc.is_square && !disc.is_zero));
    rep.add("galois_in_wreath", c.galois.in_wreath == is_reciprocal(c.f_k));

    // Rouche data.
    const RoucheData& d = c.rouche;
    RootSet own_f;
    const RootSet* rf = opt.roots_of_f;
    if (rf == nullptr) {
        own_f = find_all_roots(c.polynomial);
        rf = &own_f;
    }
    const double iso = isolation_radius(*rf, c.alpha, c.epsilon);
    rep.add("radius_bounds", d.R > 0.0 && d.R <= c.epsilon && d.R <= 0.5 * (1.0 - std::abs(c.alpha)) && d.R <= iso);
    rep.add("r_is_alpha_plus_R", std::abs(d.r - (std::abs(c.alpha) + d.R)) <= 1e-15 && d.r < 1.0);
    rep.add("B_bounds_difference", d.B >= coefficient_difference_bound(set, c.case_used));
    const double m_check = d.samples > 0 && d.R > 0.0 && d.r < 1.0
                               ? min_modulus_on_circle(c.polynomial, c.alpha, d.R, d.samples)
                               : 0.0;
    rep.add("m_certified", d.m > 0.0 && m_check >= d.m);
    const double tail = rouche_tail_bound(d.B, d.r, c.k);
    rep.add("rouche_inequality", tail < d.m, std::to_string(tail) + " < " + std::to_string(d.m));

    // The certified zero.
    RootSet own_fk;
    const RootSet* rk = opt.roots_of_f_k;
    if (rk == nullptr) {
        own_fk = find_all_roots(c.f_k);
        rk = &own_fk;
    }
    const NearestRoot near = nearest_root(*rk, c.alpha);
    rep.add("f_k_zero_within_R", near.distance < d.R);
    rep.add("beta_is_zero_of_f_k", relative_residual(c.f_k, c.beta) <= kTargetResidual);
    rep.add("beta_in_open_disk", std::abs(c.beta) < 1.0);
    const double err = std::abs(c.alpha - c.beta);
    rep.add("achieved_error", std::abs(err - c.achieved_error) <= 1e-15 && c.achieved_error < c.epsilon,
            std::to_string(c.achieved_error));
    return rep;
}

/**
 * Builds and certifies a square-discriminant polynomial in P(N) with a zero
 * beta satisfying |alpha - beta| < epsilon, where alpha is a zero of f in the
 * open unit disk.
 */
inline ApproxCertificate approximate_square_disc(const IntPolynomial& f, Complex alpha, double epsilon,
                                                 const CoeffSet& set, CaseRequest request = CaseRequest::automatic) {
    if (!set.admits(f) || f.degree() < 1) {
        throw std::domain_error("polynomial is not a nonconstant element of P(N) for N = {" + set.to_string() + "}");
    }
    if (std::abs(alpha) >= 1.0) {
        throw std::domain_error("target zero must lie in the open unit disk (invert it via reverse first)");
    }
    const ConstructionCase c = select_case(set, request);
    detail::check_target(f, alpha, epsilon);

    ApproxCertificate cert;
    cert.polynomial = f;
    cert.set = set;
    cert.alpha = alpha;
    cert.epsilon = epsilon;
    cert.case_used = c;
    cert.original_root = alpha;

    const RootSet roots_f = find_all_roots(f);
    const TruncationChoice choice = detail::choose_with_roots(f, roots_f, alpha, epsilon, set, c);
    cert.k = choice.k;
    cert.rouche = choice.rouche;
    cert.free_coefficient = c == ConstructionCase::negation ? default_free_coefficient(set) : 0;
    cert.g = periodic_truncation(f, cert.k, set, c == ConstructionCase::pm1);
    cert.f_k = construct(c, cert.g, cert.k, cert.free_coefficient, set);

    const RootSet roots_fk = find_all_roots(cert.f_k);
    const NearestRoot near = nearest_root(roots_fk, alpha);
    cert.beta = near.root;
    cert.achieved_error = std::abs(alpha - cert.beta);
    cert.disc = discriminant(cert.f_k);
    cert.galois.in_alternating = cert.disc.is_square && !cert.disc.is_zero;
    cert.galois.in_wreath = is_reciprocal(cert.f_k);

    VerifyOptions opt;
    opt.recompute_discriminant = false;
    opt.roots_of_f = &roots_f;
    opt.roots_of_f_k = &roots_fk;
    const VerificationReport rep = verify_certificate(cert, opt);
    if (!rep.passed()) {
        std::string failed;
        for (const auto& chk : rep.checks) {
            if (!chk.passed) {
                failed += " " + chk.name;
            }
        }
        throw std::logic_error("approximate_square_disc: internal verification failed:" + failed);
    }
    return cert;
}

/**
 * Like approximate_square_disc, but a root outside the closed unit disk is
 * first mapped to 1/root of the reversed polynomial, which has the same
 * discriminant and coefficients. Roots on the unit circle are rejected.
 */
inline ApproxCertificate approximate_root(const IntPolynomial& f, Complex root, double epsilon, const CoeffSet& set,
                                          CaseRequest request = CaseRequest::automatic) {
    const double modulus = std::abs(root);
    if (modulus == 1.0) {
        throw std::domain_error("target zero lies on the unit circle");
    }
    if (modulus < 1.0) {
        return approximate_square_disc(f, root, epsilon, set, request);
    }
    ApproxCertificate cert = approximate_square_disc(reverse(f), 1.0 / root, epsilon, set, request);
    cert.inverted = true;
    cert.original_root = root;
    return cert;
}

}  // namespace sqdisc
