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

#include "sqdisc/property_suites.hpp"
#include "sqdisc/roots.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace sqdisc;

TEST(Roots, LinearAndQuadratic) {
    const auto r1 = find_all_roots(IntPolynomial{-3, 2});
    ASSERT_EQ(r1.roots.size(), 1u);
    EXPECT_DOUBLE_EQ(r1.roots[0].real(), 1.5);
    EXPECT_EQ(r1.roots[0].imag(), 0.0);

    const auto r2 = find_all_roots(IntPolynomial{1, 0, 1});
    ASSERT_EQ(r2.roots.size(), 2u);
    auto sorted = r2.roots;
    std::sort(sorted.begin(), sorted.end(), complex_lex_less);
    EXPECT_NEAR(sorted[0].imag(), -1.0, 1e-14);
    EXPECT_NEAR(sorted[1].imag(), 1.0, 1e-14);
    EXPECT_EQ(sorted[0], std::conj(sorted[1]));
    EXPECT_THROW(find_all_roots(IntPolynomial{5}), std::domain_error);
}

TEST(Roots, ZeroRootsSplitOff) {
    const auto r = find_all_roots(IntPolynomial{0, 0, -1, 0, 1});
    ASSERT_EQ(r.roots.size(), 4u);
    EXPECT_EQ(std::count(r.roots.begin(), r.roots.end(), Complex(0.0, 0.0)), 2);
}

TEST(Roots, ResidualsBelowAcceptance) {
    suites::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const auto f = suites::random_polynomial(rng, static_cast<int>(suites::uniform(rng, 1, 60)), -1, 1);
        const auto r = find_all_roots(f);
        ASSERT_EQ(static_cast<int>(r.roots.size()), f.degree());
        ASSERT_EQ(r.residuals.size(), r.roots.size());
        for (std::size_t j = 0; j < r.roots.size(); ++j) {
            EXPECT_LT(relative_residual(f, r.roots[j]), kRootAcceptResidual);
        }
    }
}

TEST(Roots, Deterministic) {
    const IntPolynomial f = IntPolynomial::parse("1,-1,1,1,-1,-1,1,1,1,-1,1,-1,1,1,1,-1,-1");
    const auto a = find_all_roots(f);
    const auto b = find_all_roots(f);
    EXPECT_EQ(a.roots, b.roots);
}

TEST(Roots, SymmetricFunctionReconstruction) {
    const auto r = suites::root_reconstruction_suite(150, 22);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Roots, RootsOfUnity) {
    const auto r = suites::roots_of_unity_suite(101);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Roots, NearestRootTieBreak) {
    RootSet rs;
    rs.roots = {Complex(1, 0), Complex(-1, 0), Complex(0, 1)};
    const auto n = nearest_root(rs, Complex(0, 0));
    EXPECT_EQ(n.root, Complex(-1, 0));
    EXPECT_DOUBLE_EQ(n.distance, 1.0);
    EXPECT_EQ(nearest_root(rs, Complex(0.9, 0.1)).root, Complex(1, 0));
    EXPECT_THROW(nearest_root(RootSet{}, Complex(0, 0)), std::domain_error);
}

TEST(Roots, IsolationRadius) {
    RootSet rs;
    rs.roots = {Complex(0.5, 0), Complex(0.5 + 1e-12, 0), Complex(-0.5, 0)};
    EXPECT_DOUBLE_EQ(isolation_radius(rs, Complex(0.5, 0), 10.0), 0.5);
    EXPECT_DOUBLE_EQ(isolation_radius(rs, Complex(0.5, 0), 0.1), 0.1);
}

TEST(Roots, MinModulusIsALowerBound) {
    const IntPolynomial f{1, 1, -1};
    const double radius = 0.05;
    const Complex center(-0.618, 0.0);
    const double bound = min_modulus_on_circle(f, center, radius, 4096);
    EXPECT_GT(bound, 0.0);
    const unsigned long period = 3;
    double true_min = 1e300;
    for (int s = 0; s < 100000; ++s) {
        const Complex z = center + std::polar(radius, 2 * std::numbers::pi * (s + 0.37) / 100000.0);
        true_min = std::min(true_min, std::abs(evaluate_at(f, z) / (1.0 - detail::ipow(z, period))));
    }
    EXPECT_LE(bound, true_min);
    EXPECT_LE(bound, min_modulus_on_circle(f, center, radius, 8192));
    EXPECT_THROW(min_modulus_on_circle(f, Complex(0.9, 0), 0.2, 64), std::domain_error);
}

TEST(Roots, SortedByModulusThenArg) {
    const auto s = sorted_by_modulus_then_arg({Complex(0, 2), Complex(0, -1), Complex(1, 0), Complex(-0.5, 0)});
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0], Complex(-0.5, 0));
    EXPECT_EQ(s[1], Complex(0, -1));
    EXPECT_EQ(s[2], Complex(1, 0));
    EXPECT_EQ(s[3], Complex(0, 2));
}
