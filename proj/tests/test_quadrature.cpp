// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hardy/quadrature.hpp"

using namespace hardy;

TEST(GaussLegendre, IntegratesPolynomialsExactly)
{
    // A 10-point rule is exact through degree 19.
    for (int p = 0; p <= 19; ++p) {
        const double got = gauss_panel<10>([p](double x) { return std::pow(x, p); }, 0.0, 1.0);
        EXPECT_NEAR(got, 1.0 / (p + 1), 1e-15) << "degree " << p;
    }
    const auto& r = gauss_legendre<10>();
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-15);
}

TEST(Adaptive, SmoothIntegrand)
{
    const auto r = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, std::numbers::e - 1.0, 1e-14);
    EXPECT_GE(r.err_est, 0.0);
    EXPECT_GE(r.nodes, 1u);
}

TEST(Adaptive, KinkedIntegrand)
{
    // |x - 1/3| has a corner that no panel boundary hits.
    const auto r = integrate_adaptive([](double x) { return std::abs(x - 1.0 / 3.0); }, 0.0, 1.0);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, (1.0 / 9.0 + 4.0 / 9.0) / 2.0, 1e-11);
}

TEST(Adaptive, ComplexValued)
{
    const auto r = integrate_adaptive([](double t) { return std::polar(1.0, t); }, 0.0, std::numbers::pi);
    EXPECT_NEAR(std::abs(r.value - std::complex<double>(0.0, 2.0)), 0.0, 1e-14);
}

TEST(Adaptive, BudgetExhaustionIsReported)
{
    QuadConfig cfg;
    cfg.max_nodes = 500;
    cfg.rtol = 1e-15;
    cfg.atol = 0.0;
    const auto r = integrate_adaptive([](double x) { return std::sqrt(std::abs(x - 0.3)); }, 0.0, 1.0, cfg);
    EXPECT_FALSE(r.converged);
    EXPECT_GT(r.err_est, 0.0);
    // Best estimate is still close.
    const double exact = 2.0 / 3.0 * (std::pow(0.3, 1.5) + std::pow(0.7, 1.5));
    EXPECT_NEAR(r.value, exact, 1e-6);
}

TEST(Graded, LogEndpointSingularity)
{
    // int_0^1 ln(u) du = -1.
    const auto r = integrate_graded([](double u) { return std::log(u); }, 1.0);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, -1.0, 1e-12);

    // int_0^2 ln(u)^2 du = 2 (ln 2)^2 - 4 ln 2 + 4.
    const double l2 = std::log(2.0);
    const auto s = integrate_graded([](double u) { return std::log(u) * std::log(u); }, 2.0);
    EXPECT_NEAR(s.value, 2.0 * l2 * l2 - 4.0 * l2 + 4.0, 1e-11);
}

TEST(Graded, InverseSqrtSingularity)
{
    // Algebraic singularities are not the target: the innermost panel of
    // width 4 * 2^-48 alone holds about 2.4e-7 of the mass, so accuracy
    // stalls near 1e-9.
    const auto r = integrate_graded([](double u) { return 1.0 / std::sqrt(u); }, 4.0);
    EXPECT_NEAR(r.value, 4.0, 1e-8);
}

TEST(PeriodicMean, TrigonometricPolynomialIsExact)
{
    const auto r = periodic_mean([](double t) { return 3.0 + std::cos(5.0 * t) + std::sin(2.0 * t); });
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 3.0, 1e-15);
}

TEST(PeriodicMean, AnalyticPeriodicConvergesGeometrically)
{
    // (1/2pi) int 1/(2 - cos t) dt = 1/sqrt(3).
    const auto r = periodic_mean([](double t) { return 1.0 / (2.0 - std::cos(t)); });
    EXPECT_NEAR(r.value, 1.0 / std::sqrt(3.0), 1e-14);
    EXPECT_LE(r.nodes, 256u);
}

TEST(PeriodicMean, BudgetExhaustion)
{
    QuadConfig cfg;
    cfg.max_nodes = 64;
    cfg.rtol = 1e-16;
    cfg.atol = 0.0;
    const auto r = periodic_mean([](double t) { return std::abs(std::sin(t / 2.0)); }, cfg, 32);
    EXPECT_FALSE(r.converged);
}

TEST(Summation, CompensatedBeatsNaive)
{
    std::vector<double> xs{1.0, 1e-16, 1e-16, 1e-16, 1e-16, -1.0};
    EXPECT_NEAR(compensated_sum<double>(xs), 4e-16, 1e-30);
}

TEST(Summation, PairwiseMatchesExactForIntegers)
{
    std::vector<double> xs(1001);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
    EXPECT_EQ(pairwise_sum<double>(xs), 500500.0);
}
