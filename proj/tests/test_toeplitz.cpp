// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hardy/corpus.hpp"
#include "hardy/toeplitz.hpp"

using namespace hardy;
using namespace std::complex_literals;

namespace
{
constexpr double pi = std::numbers::pi;

// ||f||_inf + pi ||f'||_1 for the degree-8 logarithmic family, 30-digit reference.
constexpr double logfam8_bound = 8.47446149713914452811381841165;

double coeff_distance(const TaylorPoly& a, const TaylorPoly& b)
{
    double d = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        const cplx x = k < a.size() ? a[k] : cplx{};
        const cplx y = k < b.size() ? b[k] : cplx{};
        d = std::max(d, std::abs(x - y));
    }
    return d;
}

// Analytic projection of conj(f) h from the full Laurent product.
TaylorPoly projection_oracle(const TaylorPoly& f, const TaylorPoly& h)
{
    // conj(f(zeta)) h(zeta) = sum_{j,k} conj(a_j) b_k zeta^{k-j}; keep k - j >= 0.
    std::vector<cplx> c(h.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t k = j; k < h.size(); ++k) c[k - j] += std::conj(f[j]) * h[k];
    return TaylorPoly{c};
}
} // namespace

TEST(ToeplitzApply, Examples)
{
    const TaylorPoly h{1.0, 2.0 - 1i, 0.5i};
    EXPECT_EQ(toeplitz_apply(TaylorPoly{1.0}, h), h);
    EXPECT_EQ(toeplitz_apply(TaylorPoly{0.0, 1.0}, TaylorPoly{0.0, 0.0, 1.0}), (TaylorPoly{0.0, 1.0}));
    EXPECT_TRUE(toeplitz_apply(TaylorPoly{0.0, 1.0}, TaylorPoly{1.0}).is_zero());
    EXPECT_TRUE(toeplitz_apply(TaylorPoly{}, h).is_zero());
    // Multiplication by conj(i) = -i.
    EXPECT_EQ(toeplitz_apply(TaylorPoly{1i}, TaylorPoly{2.0}), (TaylorPoly{-2i}));
    EXPECT_EQ(toeplitz_apply(TaylorPoly{0.0, 1.0}, TaylorPoly{0.0, 1.0}), (TaylorPoly{1.0}));
    EXPECT_EQ(toeplitz_apply(TaylorPoly{1.0, 1.0}, TaylorPoly{0.0, 1.0, 1.0}), (TaylorPoly{1.0, 2.0, 1.0}));
}

TEST(ToeplitzApply, AgreesWithOracleAndBruteForce)
{
    SplitMix64 rng{71};
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(rng.next() % 17, rng.next());
        const auto h = random_poly(rng.next() % 17, rng.next());
        const auto fast = toeplitz_apply(f, h);
        const double scale = std::max(1.0, hinf_norm(f) * hinf_norm(h));
        EXPECT_LE(coeff_distance(fast, projection_oracle(f, h)), 1e-14 * scale);
        const std::size_t n = f.size() + h.size() + rng.next() % 8;
        EXPECT_LE(coeff_distance(fast, toeplitz_apply_bruteforce(f, h, n)), 1e-12 * scale);
    }
}

TEST(ToeplitzApply, BruteForceRejectsAliasingGrid)
{
    const auto f = random_poly(5, 1);
    const auto h = random_poly(7, 2);
    EXPECT_THROW(toeplitz_apply_bruteforce(f, h, 12), domain_error);
    EXPECT_NO_THROW(toeplitz_apply_bruteforce(f, h, 13));
}

TEST(ToeplitzApply, LinearInSymbolConjugateAndLinearInArgument)
{
    SplitMix64 rng{72};
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_poly(rng.next() % 10, rng.next());
        const auto g = random_poly(rng.next() % 10, rng.next());
        const auto h = random_poly(rng.next() % 10, rng.next());
        const auto k = random_poly(rng.next() % 10, rng.next());
        const cplx a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        EXPECT_LE(coeff_distance(toeplitz_apply(f, h + a * k), toeplitz_apply(f, h) + a * toeplitz_apply(f, k)),
                  1e-13);
        EXPECT_LE(coeff_distance(toeplitz_apply(f + a * g, h),
                                 toeplitz_apply(f, h) + std::conj(a) * toeplitz_apply(g, h)),
                  1e-13);
    }
}

TEST(OperatorBound, Examples)
{
    EXPECT_NEAR(operator_bound(TaylorPoly{1.0}).value, 1.0, 1e-15);
    EXPECT_NEAR(operator_bound(TaylorPoly{0.0, 1.0}).value, 1.0 + pi, 1e-12);
    const auto r = operator_bound(make_log_family(8));
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, logfam8_bound, 1e-9);
}

TEST(EmpiricalLowerBound, Examples)
{
    const auto corpus = toeplitz_h_corpus();
    ASSERT_EQ(corpus.size(), 50u);
    std::vector<TaylorPoly> hs;
    for (const auto& h : corpus) hs.push_back(h.poly);

    // T_1 is the identity on unit vectors.
    EXPECT_NEAR(empirical_norm_lb(TaylorPoly{1.0}, hs).value, 1.0, 1e-12);
    // T_z is the backward shift, h -> (h - h(0))/z, so each ratio is
    // ||h - h(0)||_inf / ||h||_inf and lies in [0, 2].
    double want = 0.0;
    for (const auto& h : hs) {
        std::vector<cplx> c(h.coeffs().begin(), h.coeffs().end());
        c[0] = 0.0;
        want = std::max(want, hinf_norm(TaylorPoly{c}) / hinf_norm(h));
    }
    const double got = empirical_norm_lb(TaylorPoly{0.0, 1.0}, hs).value;
    EXPECT_NEAR(got, want, 1e-12);
    EXPECT_GE(got, 1.0);
    EXPECT_LE(got, 2.0);
    EXPECT_EQ(empirical_norm_lb(TaylorPoly{}, hs).value, 0.0);
    EXPECT_THROW(empirical_norm_lb(TaylorPoly{1.0}, std::span<const TaylorPoly>{}), domain_error);
}

TEST(EmpiricalLowerBound, NeverExceedsOperatorBound)
{
    std::vector<TaylorPoly> hs;
    for (const auto& h : toeplitz_h_corpus()) hs.push_back(h.poly);
    for (const auto& f : corpus_subset(1)) {
        const auto lb = empirical_norm_lb(f.poly, hs);
        const auto ub = operator_bound(f.poly);
        EXPECT_LE(lb.value, ub.value * (1.0 + 1e-9) + ub.err_est) << f.id;
        EXPECT_LT(lb.witness, hs.size());
    }
}

TEST(EmpiricalLowerBound, MonotoneInCorpus)
{
    std::vector<TaylorPoly> hs;
    for (const auto& h : toeplitz_h_corpus(9)) hs.push_back(h.poly);
    const auto f = random_poly(6, 3);
    double prev = 0.0;
    for (std::size_t m = 1; m <= hs.size(); ++m) {
        const double v = empirical_norm_lb(f, std::span<const TaylorPoly>(hs.data(), m)).value;
        EXPECT_GE(v, prev);
        prev = v;
    }
}

TEST(ToeplitzCorpus, DeterministicWithUnitNormMembers)
{
    const auto a = toeplitz_h_corpus();
    const auto b = toeplitz_h_corpus();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].id, b[i].id);
        EXPECT_EQ(a[i].poly, b[i].poly);
        EXPECT_FALSE(a[i].poly.is_zero());
    }
    EXPECT_EQ(a[0].poly, TaylorPoly{1.0});
    EXPECT_EQ(a[3].poly, (TaylorPoly{0.0, 0.0, 0.0, 1.0}));
    // Truncated Blaschke factors stay close to unimodular on the circle.
    for (std::size_t i = 37; i < 50; ++i) EXPECT_NEAR(hinf_norm(a[i].poly), 1.0, 0.02) << i;
}

TEST(ReflectedConjugate, Examples)
{
    const auto s = reflected_conjugate_boundary(TaylorPoly{0.0, 1.0}, UnitComplex{}, 4);
    const cplx want[] = {1.0, 1i, -1.0, -1i};
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(s[j] - want[j]), 0.0, 1e-15);
    for (cplx v : reflected_conjugate_boundary(TaylorPoly{2.0 + 1i}, UnitComplex::from_angle(1.0), 5))
        EXPECT_EQ(v, 2.0 - 1i);
    EXPECT_THROW(reflected_conjugate_boundary(TaylorPoly{1.0}, UnitComplex{}, 0), domain_error);
}

TEST(ReflectedConjugate, SameModulusAsF)
{
    SplitMix64 rng{81};
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(1 + rng.next() % 12, rng.next());
        const auto eta = UnitComplex::from_angle(rng.uniform(0.0, 2 * pi));
        const std::size_t n = 128;
        const auto g = reflected_conjugate_boundary(f, eta, n);
        for (std::size_t j = 0; j < n; ++j) {
            const double t = 2 * pi * static_cast<double>(j) / n;
            const cplx want = std::conj(eval(f, std::polar(1.0, eta.angle() - t)));
            EXPECT_NEAR(std::abs(g[j] - want), 0.0, 1e-13);
            EXPECT_NEAR(std::abs(g[j]), std::abs(eval_boundary(f, eta.angle() - t)), 1e-13);
        }
    }
}
