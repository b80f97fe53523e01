// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_HARDY_NORMS_HPP_
#define HARDY_HARDY_NORMS_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hardy/function_spec.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/taylor_poly.hpp"
#include "hardy/verify_record.hpp"

namespace hardy
{
/** @brief H^1 norm of a polynomial, (1/2pi) * integral of |p(e^{it})| dt.
 *
 *  For a polynomial the integral means M_1(r) are nondecreasing in r
 *  (|p| is subharmonic), so the supremum over r < 1 equals the boundary
 *  value at r = 1 and no radial limit is needed.
 *
 *  |p| on the circle has corners at zeros of p lying on the circle (the
 *  Dirichlet kernel sum_{k<N} z^k has N - 1 of them), so the integral is
 *  taken with the adaptive Gauss rule; the initial partition has at least
 *  two panels per degree.
 */
inline QuadResult<double> h1_norm_boundary(const TaylorPoly& p, const QuadConfig& cfg = {})
{
    if (p.is_zero()) return {0.0, 0.0, 1, true};
    if (p.is_constant()) return {std::abs(p[0]), 0.0, 1, true};
    const std::size_t panels = std::bit_ceil(std::max<std::size_t>(8, 2 * p.size()));
    auto integrand = [&p](double t) { return std::abs(eval_boundary(p, t)); };
    auto res = integrate_adaptive(integrand, 0.0, 2.0 * std::numbers::pi, cfg, panels);
    const double scale = 0.5 / std::numbers::pi;
    res.value *= scale;
    res.err_est *= scale;
    return res;
}

/// Default boundary grid for hinf_norm before refinement.
inline constexpr std::size_t hinf_grid = 4096;
/// Number of grid local maxima refined by golden-section search.
inline constexpr std::size_t hinf_candidates = 5;

/** @brief sup over the closed disc of |p|.
 *
 *  By the maximum principle the sup is attained on the circle. The circle is
 *  sampled on max(4096, 64 * (deg + 1)) points (rounded up to a power of
 *  two); the five largest discrete local maxima (ties broken by lower angle)
 *  are polished by golden-section search on their two neighbouring cells.
 *  The result is never below the largest grid sample.
 */
inline double hinf_norm(const TaylorPoly& p)
{
    if (p.is_zero()) return 0.0;
    if (p.is_constant()) return std::abs(p[0]);

    const std::size_t n = std::bit_ceil(std::max(hinf_grid, 64 * p.size()));
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    auto modulus = [&p](double t) { return std::abs(eval_boundary(p, t)); };

    std::vector<double> vals(n);
    for (std::size_t j = 0; j < n; ++j) vals[j] = modulus(h * static_cast<double>(j));

    std::vector<std::size_t> peaks;
    for (std::size_t j = 0; j < n; ++j) {
        const double prev = vals[(j + n - 1) % n];
        const double next = vals[(j + 1) % n];
        if (vals[j] >= prev && vals[j] >= next) peaks.push_back(j);
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&vals](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    if (peaks.size() > hinf_candidates) peaks.resize(hinf_candidates);

    double best = *std::max_element(vals.begin(), vals.end());
    constexpr double inv_phi = 0.6180339887498949;
    for (std::size_t j : peaks) {
        double lo = h * (static_cast<double>(j) - 1.0);
        double hi = h * (static_cast<double>(j) + 1.0);
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = modulus(x1), f2 = modulus(x2);
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = modulus(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = modulus(x1);
            }
        }
        best = std::max({best, f1, f2});
    }
    return best;
}

/// sum_{k>=1} |a_k|, compensated so that short rational sums round correctly.
inline double hardy_sum(const TaylorPoly& p)
{
    if (p.size() <= 1) return 0.0;
    std::vector<double> mods;
    mods.reserve(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) mods.push_back(std::abs(p[k]));
    return compensated_sum<double>(mods);
}

struct NormReport
{
    double hinf = 0.0;
    double h1_deriv = 0.0;
    double hardy_sum = 0.0;
    double quad_error = 0.0;
    bool converged = true;
};

inline NormReport norm_report(const TaylorPoly& p, const QuadConfig& cfg = {})
{
    const auto h1 = h1_norm_boundary(derivative(p), cfg);
    return {hinf_norm(p), h1.value, hardy_sum(p), h1.err_est, h1.converged};
}

/** @brief Checks sum_{k>=1}|a_k| <= pi * ||p'||_{H^1}.
 *
 *  The zero polynomial is a trivial pass with both sides zero.
 */
inline VerifyRecord verify_hardy(const TaylorPoly& p, const std::string& id,
                                 const QuadConfig& cfg = {})
{
    if (p.is_zero()) return make_record(id, 0.0, 0.0, 0.0, 0.0);
    const auto h1 = h1_norm_boundary(derivative(p), cfg);
    const double rhs = std::numbers::pi * h1.value;
    return make_record(id, 0.0, hardy_sum(p), rhs, std::numbers::pi * h1.err_est, h1.converged);
}

inline VerifyRecord verify_hardy(const TaylorPoly& p, const QuadConfig& cfg = {})
{
    return verify_hardy(p, to_spec(p), cfg);
}

} // namespace hardy

#endif // HARDY_HARDY_NORMS_HPP_
