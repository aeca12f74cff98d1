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

// Numerical complex roots of integer polynomials and the root-geometry queries
// used by certificates and rendering. Everything here is double precision and
// deterministic: no randomness, fixed iteration order.

#include "sqdisc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqdisc {

using Complex = std::complex<double>;

struct RootSet {
    std::vector<Complex> roots;   // with multiplicity
    std::vector<double> residuals;  // |f(z)| / sum |a_i| |z|^i per root
    int source_degree = 0;
    int iterations = 0;
};

class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& what, RootSet partial) : std::runtime_error(what), partial_(std::move(partial)) {}
    const RootSet& partial() const { return partial_; }

private:
    RootSet partial_;
};

inline constexpr double kRootAcceptResidual = 1e-10;
inline constexpr double kClusterThreshold = 1e-8;
inline constexpr int kMaxAberthIterations = 1000;

namespace detail {

/// z^n by repeated squaring (deterministic, unlike std::pow on complex).
inline Complex ipow(Complex z, unsigned long n) {
    Complex r = 1.0;
    while (n != 0) {
        if (n & 1) {
            r *= z;
        }
        z *= z;
        n >>= 1;
    }
    return r;
}

/// |p(z)| / sum |a_i||z|^i, evaluated through the reversed polynomial when |z| > 1.
inline double relative_residual(std::span<const double> a, Complex z) {
    const std::size_t n = a.size() - 1;
    Complex p = 0.0;
    double scale = 0.0;
    if (std::abs(z) <= 1.0) {
        const double az = std::abs(z);
        for (std::size_t i = n + 1; i-- > 0;) {
            p = p * z + a[i];
            scale = scale * az + std::abs(a[i]);
        }
    } else {
        const Complex y = 1.0 / z;
        const double ay = std::abs(y);
        for (std::size_t i = 0; i <= n; ++i) {
            p = p * y + a[i];
            scale = scale * ay + std::abs(a[i]);
        }
    }
    return scale == 0.0 ? 0.0 : std::abs(p) / scale;
}

/// Newton correction p(z)/p'(z), using q(y) = y^n p(1/y) when |z| > 1:
/// p/p' = z q / (n q - y q').
inline Complex newton_ratio(std::span<const double> a, Complex z) {
    const std::size_t n = a.size() - 1;
    if (std::abs(z) <= 1.0) {
        Complex p = a[n];
        Complex dp = 0.0;
        for (std::size_t i = n; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + a[i];
        }
        return p / dp;
    }
    const Complex y = 1.0 / z;
    Complex q = a[0];
    Complex dq = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        dq = dq * y + q;
        q = q * y + a[i];
    }
    return z * q / (static_cast<double>(n) * q - y * dq);
}

/// Fujiwara's bound 2 max |a_{n-i}/a_n|^{1/i} (last term halved) on root moduli.
inline double fujiwara_bound(std::span<const double> a) {
    const std::size_t n = a.size() - 1;
    double bound = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        double t = std::abs(a[n - i] / a[n]);
        if (i == n) {
            t *= 0.5;
        }
        bound = std::max(bound, std::pow(t, 1.0 / static_cast<double>(i)));
    }
    return 2.0 * bound;
}

/// Makes the multiset exactly closed under conjugation: each root is paired
/// with the unused root nearest its conjugate, or snapped to the real axis
/// when it is nearer to its own conjugate.
inline void symmetrize_conjugates(std::vector<Complex>& z) {
    std::vector<bool> used(z.size(), false);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (used[i]) {
            continue;
        }
        used[i] = true;
        const Complex target = std::conj(z[i]);
        std::size_t best = z.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (!used[j]) {
                const double d = std::abs(z[j] - target);
                if (d < best_dist) {
                    best_dist = d;
                    best = j;
                }
            }
        }
        if (best < z.size() && best_dist < 2.0 * std::abs(z[i].imag())) {
            const Complex w = 0.5 * (z[i] + std::conj(z[best]));
            z[i] = w;
            z[best] = std::conj(w);
            used[best] = true;
        } else {
            z[i] = Complex(z[i].real(), 0.0);
        }
    }
}

}  // namespace detail

inline double relative_residual(const IntPolynomial& f, Complex z) {
    const auto a = to_doubles(f);
    return detail::relative_residual(a, z);
}

/**
 * All deg f complex roots by Ehrlich-Aberth simultaneous iteration.
 *
 * Zero roots are split off exactly. Starting points alternate between two
 * concentric circles at sqrt(L G) and sqrt(G U), where L and U are Fujiwara
 * bounds on the root moduli and G = |a_0/a_n|^{1/n}. Updates are applied in
 * place in index order. Converged roots get one guarded Newton polish and
 * the result is made conjugation-symmetric.
 */
inline RootSet find_all_roots(const IntPolynomial& f) {
    if (f.degree() < 1) {
        throw std::domain_error("find_all_roots: degree must be at least 1");
    }
    RootSet out;
    out.source_degree = f.degree();

    std::vector<double> all = to_doubles(f);
    std::size_t zeros = 0;
    while (all[zeros] == 0.0) {
        ++zeros;
    }
    const std::vector<double> a(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end());
    const std::size_t n = a.size() - 1;

    std::vector<Complex> z(n);
    if (n == 1) {
        z[0] = -a[0] / a[1];
    } else if (n > 1) {
        const double upper = detail::fujiwara_bound(a);
        const std::vector<double> rev(a.rbegin(), a.rend());
        const double lower = 1.0 / detail::fujiwara_bound(rev);
        const double geo = std::pow(std::abs(a[0] / a[n]), 1.0 / static_cast<double>(n));
        const double r_in = std::sqrt(lower * geo);
        const double r_out = std::sqrt(geo * upper);
        const double two_pi = 2.0 * std::numbers::pi;
        for (std::size_t j = 0; j < n; ++j) {
            const double theta = two_pi * static_cast<double>(j) / static_cast<double>(n) + 0.4;
            z[j] = std::polar(j % 2 == 0 ? r_in : r_out, theta);
        }

        const double conv_tol = 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
        std::vector<bool> done(n, false);
        std::size_t remaining = n;
        int iter = 0;
        for (; iter < kMaxAberthIterations && remaining > 0; ++iter) {
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i]) {
                    continue;
                }
                if (detail::relative_residual(a, z[i]) <= conv_tol) {
                    done[i] = true;
                    --remaining;
                    continue;
                }
                const Complex ratio = detail::newton_ratio(a, z[i]);
                Complex s = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != i) {
                        s += 1.0 / (z[i] - z[j]);
                    }
                }
                const Complex w = ratio / (1.0 - ratio * s);
                if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                    continue;
                }
                z[i] -= w;
                if (std::abs(w) <= std::numeric_limits<double>::epsilon() * std::abs(z[i])) {
                    done[i] = true;
                    --remaining;
                }
            }
        }
        out.iterations = iter;

        for (auto& zi : z) {
            const double before = detail::relative_residual(a, zi);
            const Complex step = detail::newton_ratio(a, zi);
            if (std::isfinite(step.real()) && std::isfinite(step.imag()) &&
                std::abs(step) < 1e-6 * std::max(1.0, std::abs(zi))) {
                const Complex cand = zi - step;
                if (detail::relative_residual(a, cand) < before) {
                    zi = cand;
                }
            }
        }
        detail::symmetrize_conjugates(z);
    }

    out.roots.assign(zeros, Complex(0.0, 0.0));
    out.roots.insert(out.roots.end(), z.begin(), z.end());
    out.residuals.reserve(out.roots.size());
    bool ok = true;
    for (const auto& r : out.roots) {
        const double res = detail::relative_residual(all, r);
        ok = ok && res < kRootAcceptResidual;
        out.residuals.push_back(res);
    }
    if (!ok) {
        throw RootFindingError("find_all_roots: no convergence for degree " + std::to_string(f.degree()), std::move(out));
    }
    return out;
}

/// Lexicographic (real, imaginary) order.
inline bool complex_lex_less(Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

struct NearestRoot {
    Complex root;
    double distance = 0.0;
};

/// Closest root to `target`; exact distance ties go to the lexicographically smaller root.
inline NearestRoot nearest_root(const RootSet& roots, Complex target) {
    if (roots.roots.empty()) {
        throw std::domain_error("nearest_root: empty root set");
    }
    NearestRoot best{roots.roots.front(), std::abs(roots.roots.front() - target)};
    for (const auto& r : roots.roots) {
        const double d = std::abs(r - target);
        if (d < best.distance || (d == best.distance && complex_lex_less(r, best.root))) {
            best = {r, d};
        }
    }
    return best;
}

/// min(cap, half the distance from alpha to the nearest root farther than the cluster threshold).
inline double isolation_radius(const RootSet& roots, Complex alpha, double cap) {
    double radius = cap;
    for (const auto& r : roots.roots) {
        const double d = std::abs(r - alpha);
        if (d > kClusterThreshold) {
            radius = std::min(radius, 0.5 * d);
        }
    }
    return radius;
}

/**
 * Certified lower bound for |F| on the circle |z - center| = radius, where
 * F(z) = f(z) / (1 - z^{n+1}) is the periodic power series generated by f.
 *
 * F's coefficients are bounded by H = height(f), so |F'| <= L = H/(1-r)^2 on
 * |z| <= r = |center| + radius. Every circle point lies within arc distance
 * pi R / S of one of S equally spaced samples, giving min_s |F(z_s)| - L pi R / S.
 * The bound is evaluated for every dyadic subsampling S, S/2, ... of the same
 * points and the best is returned, so doubling `samples` never lowers it.
 * Returns 0 when nothing positive can be certified.
 */
inline double min_modulus_on_circle(const IntPolynomial& f, Complex center, double radius, std::size_t samples) {
    if (!(radius > 0.0)) {
        throw std::domain_error("min_modulus_on_circle: radius must be positive");
    }
    const double r = std::abs(center) + radius;
    if (!(r < 1.0)) {
        throw std::domain_error("min_modulus_on_circle: circle must lie in the open unit disk");
    }
    if (samples == 0 || f.is_zero()) {
        return 0.0;
    }
    const double height = f.height().get_d();
    const double lipschitz = height / ((1.0 - r) * (1.0 - r));
    const unsigned long period = static_cast<unsigned long>(f.degree()) + 1;

    std::vector<double> values(samples);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t s = 0; s < samples; ++s) {
        const Complex z = center + std::polar(radius, two_pi * static_cast<double>(s) / static_cast<double>(samples));
        values[s] = std::abs(evaluate_at(f, z) / (1.0 - detail::ipow(z, period)));
    }

    double best = 0.0;
    for (std::size_t step = 1; step <= samples && samples % step == 0; step *= 2) {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < samples; s += step) {
            m = std::min(m, values[s]);
        }
        const double count = static_cast<double>(samples / step);
        best = std::max(best, m - lipschitz * std::numbers::pi * radius / count);
    }
    return best;
}

/// Roots ordered by modulus, then argument in (-pi, pi].
inline std::vector<Complex> sorted_by_modulus_then_arg(std::vector<Complex> roots) {
    std::stable_sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        const double ma = std::abs(a);
        const double mb = std::abs(b);
        if (ma != mb) {
            return ma < mb;
        }
        return std::arg(a) < std::arg(b);
    });
    return roots;
}

}  // namespace sqdisc
