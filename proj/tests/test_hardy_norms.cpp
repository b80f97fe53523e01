// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hardy/corpus.hpp"
#include "hardy/hardy_norms.hpp"
#include "oracles.hpp"

using namespace hardy;
using namespace std::complex_literals;

namespace
{
constexpr double pi = std::numbers::pi;

// (1/2pi) int |sin(N t/2) / sin(t/2)| dt, value of ||sum_{k<N} z^k||_{H^1},
// from a 30-digit reference computation split at the kernel zeros.
constexpr double dirichlet_l1_8 = 1.83238407681661774378930188716;
constexpr double dirichlet_l1_32 = 7.52113880886083654216012616361 / pi;
} // namespace

TEST(H1Norm, Examples)
{
    EXPECT_NEAR(h1_norm_boundary(TaylorPoly{1.0}).value, 1.0, 1e-15);
    EXPECT_NEAR(h1_norm_boundary(TaylorPoly{0.0, 0.0, 0.0, 0.0, 0.0, 1.0}).value, 1.0, 1e-12);
    // (1/2pi) int 2|cos(t/2)| dt = 4/pi.
    const auto r = h1_norm_boundary(TaylorPoly{1.0, 1.0});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 4.0 / pi, 1e-12);
    EXPECT_EQ(h1_norm_boundary(TaylorPoly{}).value, 0.0);
}

TEST(H1Norm, DirichletKernelWithZerosOnCircle)
{
    std::vector<cplx> ones8(8, 1.0), ones32(32, 1.0);
    EXPECT_NEAR(h1_norm_boundary(TaylorPoly{ones8}).value, dirichlet_l1_8, 1e-10);
    EXPECT_NEAR(h1_norm_boundary(TaylorPoly{ones32}).value, dirichlet_l1_32, 1e-10);
}

TEST(H1Norm, MatchesBruteForceMidpoint)
{
    const auto f = random_poly(9, 123);
    const double brute = oracle::midpoint(
        [&f](double t) { return std::abs(eval(f, std::polar(1.0, t))); }, 0.0, 2.0 * pi, 400000) /
        (2.0 * pi);
    EXPECT_NEAR(h1_norm_boundary(f).value, brute, 1e-8);
}

TEST(HinfNorm, Examples)
{
    EXPECT_NEAR(hinf_norm(TaylorPoly{0.0, 1.0}), 1.0, 1e-14);
    EXPECT_NEAR(hinf_norm(TaylorPoly{1.0, 1.0}), 2.0, 1e-14);
    EXPECT_NEAR(hinf_norm(TaylorPoly{0.0, 1.0, 0.0, 1.0}), 2.0, 1e-12);
    EXPECT_EQ(hinf_norm(TaylorPoly{}), 0.0);
    EXPECT_EQ(hinf_norm(TaylorPoly{3.0 - 4i}), 5.0);
}

TEST(HinfNorm, PeakBetweenGridPoints)
{
    // |1 + e^{i(t - a)}| peaks at t = a, chosen off every dyadic grid.
    const double a = 0.1234567;
    const TaylorPoly f{1.0, std::polar(1.0, -a)};
    EXPECT_NEAR(hinf_norm(f), 2.0, 2e-10);
}

TEST(HinfNorm, DominatesSamplesAndMatchesDenseSearch)
{
    SplitMix64 rng{17};
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(1 + rng.next() % 24, rng.next());
        const double h = hinf_norm(f);
        double dense = 0.0;
        for (int j = 0; j < 200000; ++j) dense = std::max(dense, std::abs(eval_boundary(f, 2.0 * pi * j / 200000.0)));
        EXPECT_GE(h, dense * (1.0 - 1e-15));
        EXPECT_NEAR(h, dense, 1e-8 * h);
        for (cplx v : boundary_samples(f, 777, UnitComplex::from_angle(rng.uniform())))
            EXPECT_LE(std::abs(v), h * (1.0 + 1e-14));
    }
}

TEST(HardySum, Examples)
{
    EXPECT_EQ(hardy_sum(TaylorPoly{7.0}), 0.0);
    EXPECT_EQ(hardy_sum(TaylorPoly{0.0, 1.0}), 1.0);
    EXPECT_EQ(hardy_sum(make_log_family(4)), 25.0 / 12.0);
    EXPECT_EQ(hardy_sum(TaylorPoly{9.0, 3.0 + 4i}), 5.0);
}

TEST(VerifyHardy, Examples)
{
    const auto r = verify_hardy(TaylorPoly{0.0, 1.0});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, 1.0);
    EXPECT_NEAR(r.rhs, pi, 1e-12);

    const auto z = verify_hardy(TaylorPoly{});
    EXPECT_TRUE(z.pass);
    EXPECT_EQ(z.lhs, 0.0);
    EXPECT_EQ(z.rhs, 0.0);

    const auto l = verify_hardy(make_log_family(32), "logfam:32");
    EXPECT_TRUE(l.pass);
    EXPECT_TRUE(l.converged);
    EXPECT_NEAR(l.lhs, 4.05849519543652010275983818025, 1e-13);
    EXPECT_NEAR(l.rhs, pi * dirichlet_l1_32, 1e-9);
    EXPECT_EQ(l.function_id, "logfam:32");
}

TEST(VerifyHardy, RecordInvariant)
{
    for (const auto& f : standard_corpus(3)) {
        const auto r = verify_hardy(f.poly, f.id);
        EXPECT_EQ(r.pass, r.lhs <= r.rhs * (1.0 + 1e-9) + r.quad_err);
        EXPECT_EQ(r.margin, r.rhs - r.lhs);
        EXPECT_TRUE(r.pass) << f.id;
    }
}

TEST(NormProperties, ScalingCovariance)
{
    SplitMix64 rng{2};
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_poly(1 + rng.next() % 16, rng.next());
        const cplx c = std::polar(std::exp(rng.uniform(-3.0, 3.0)), rng.uniform(0.0, 2.0 * pi));
        const auto g = c * f;
        EXPECT_NEAR(hardy_sum(g), std::abs(c) * hardy_sum(f), 1e-13 * hardy_sum(g));
        const double a = h1_norm_boundary(g).value, b = h1_norm_boundary(f).value;
        EXPECT_NEAR(a, std::abs(c) * b, 1e-9 * a);
        EXPECT_EQ(verify_hardy(g).pass, verify_hardy(f).pass);
    }
}

TEST(NormProperties, RotationInvariance)
{
    SplitMix64 rng{3};
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_poly(1 + rng.next() % 16, rng.next());
        const auto eta = UnitComplex::from_angle(rng.uniform(0.0, 2.0 * pi));
        const auto g = rotate(f, eta);
        EXPECT_NEAR(hardy_sum(g), hardy_sum(f), 1e-13 * hardy_sum(f));
        const double a = h1_norm_boundary(g).value, b = h1_norm_boundary(f).value;
        EXPECT_NEAR(a, b, 1e-9 * b);
        EXPECT_NEAR(hinf_norm(g), hinf_norm(f), 1e-9 * hinf_norm(f));
    }
}

TEST(NormReport, FieldsAreConsistent)
{
    const auto f = make_log_family(8);
    const auto n = norm_report(f);
    EXPECT_NEAR(n.hinf, 761.0 / 280.0, 1e-12); // attained at z = 1
    EXPECT_NEAR(n.h1_deriv, dirichlet_l1_8, 1e-10);
    EXPECT_EQ(n.hardy_sum, hardy_sum(f));
    EXPECT_GE(n.quad_error, 0.0);
}
