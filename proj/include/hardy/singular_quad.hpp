// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_SINGULAR_QUAD_HPP_
#define HARDY_SINGULAR_QUAD_HPP_

#include <bit>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "hardy/function_spec.hpp"
#include "hardy/hardy_norms.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/taylor_poly.hpp"
#include "hardy/verify_record.hpp"

namespace hardy
{
namespace detail
{
// Angle reduced to [0, pi] using 2pi-periodicity and evenness.
inline double fold_angle(double theta) noexcept
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::remainder(theta, two_pi); // [-pi, pi]
    return std::abs(t);
}

template <typename T>
QuadResult<T> scaled(QuadResult<T> r, double s)
{
    r.value *= s;
    r.err_est *= std::abs(s);
    return r;
}

inline QuadResult<double> combine(std::initializer_list<QuadResult<double>> parts)
{
    QuadResult<double> out{0.0, 0.0, 0, true};
    for (const auto& p : parts) {
        out.value += p.value;
        out.err_est += p.err_est;
        out.nodes += p.nodes;
        out.converged = out.converged && p.converged;
    }
    return out;
}
} // namespace detail

/// Equispaced angles 2 pi j / n, j = 0..n-1.
inline std::vector<UnitComplex> uniform_eta_grid(std::size_t n = 64)
{
    if (n == 0) throw domain_error("uniform_eta_grid: grid must be nonempty");
    std::vector<UnitComplex> grid;
    grid.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        grid.push_back(UnitComplex::from_angle(2.0 * std::numbers::pi * static_cast<double>(j) /
                                               static_cast<double>(n)));
    return grid;
}

/** @brief Symmetric-difference boundary integral
 *
 *      (1/pi) * int_0^pi |f(e^{i(th+t)}) - f(e^{i(th-t)})| / (2 sin(t/2)) dt,
 *
 *  with eta = e^{i th}; this equals int_T |f(zeta eta) - f(conj(zeta) eta)| /
 *  |1 - zeta| dm(zeta).
 *
 *  The numerator is evaluated without cancellation as
 *  2 |sum_k a_k eta^k sin(k t)|. At t = 0 the integrand takes its limit
 *  2 |f'(eta)|. On (0, pi] it is smooth wherever the numerator does not
 *  vanish, and the adaptive rule absorbs the corners where it does
 *  (e.g. monomials).
 */
inline QuadResult<double> theorem1_lhs(const TaylorPoly& f, UnitComplex eta,
                                       const QuadConfig& cfg = {})
{
    if (f.is_constant()) return {0.0, 0.0, 1, true};
    const std::size_t n = f.size();
    std::vector<cplx> b(n);
    cplx slope{};
    for (std::size_t k = 1; k < n; ++k) {
        b[k] = f[k] * std::polar(1.0, static_cast<double>(k) * eta.angle());
        slope += static_cast<double>(k) * b[k];
    }
    const double limit_at_zero = 2.0 * std::abs(slope);
    auto integrand = [&b, n, limit_at_zero](double t) {
        if (t == 0.0) return limit_at_zero;
        cplx s{};
        for (std::size_t k = 1; k < n; ++k) s += b[k] * std::sin(static_cast<double>(k) * t);
        return std::abs(s) / std::sin(0.5 * t);
    };
    const std::size_t panels = std::bit_ceil(std::max<std::size_t>(8, 2 * n));
    auto res = integrate_adaptive(integrand, 0.0, std::numbers::pi, cfg, panels);
    return detail::scaled(res, 1.0 / std::numbers::pi);
}

/** @brief Checks the integrated Hardy inequality at every eta in the grid.
 *
 *  One record per eta with rhs = pi * ||f'||_{H^1}; quad_err adds the
 *  left-side and right-side error estimates. A zero f yields a single trivial
 *  record.
 */
inline std::vector<VerifyRecord> verify_theorem1(const TaylorPoly& f,
                                                 std::span<const UnitComplex> eta_grid,
                                                 const std::string& id,
                                                 const QuadConfig& cfg = {})
{
    if (eta_grid.empty()) throw domain_error("verify_theorem1: eta grid is empty");
    if (f.is_zero()) return {make_record(id, 0.0, 0.0, 0.0, 0.0)};
    const auto h1 = h1_norm_boundary(derivative(f), cfg);
    const double rhs = std::numbers::pi * h1.value;
    std::vector<VerifyRecord> out;
    out.reserve(eta_grid.size());
    for (const UnitComplex& eta : eta_grid) {
        const auto lhs = theorem1_lhs(f, eta, cfg);
        out.push_back(make_record(id, eta.angle(), lhs.value, rhs,
                                  lhs.err_est + std::numbers::pi * h1.err_est,
                                  lhs.converged && h1.converged));
    }
    return out;
}

inline std::vector<VerifyRecord> verify_theorem1(const TaylorPoly& f,
                                                 std::span<const UnitComplex> eta_grid,
                                                 const QuadConfig& cfg = {})
{
    return verify_theorem1(f, eta_grid, to_spec(f), cfg);
}

/** @brief Kernel integral
 *
 *      I(e^{i th}) = (1/pi) int_0^pi |ln|sin((th+t)/2) / sin((th-t)/2)|| dt / sin(t/2).
 *
 *  The integrand has a logarithmic singularity at t = th; the range is split
 *  there and each side is integrated on a mesh graded toward the split, in
 *  terms of the distance d = |t - th|. With the sum-to-product identities the
 *  log ratio is log1p(2 cos(th/2) sin(t/2) / sin(d/2)) for t < th and
 *  log1p(2 sin(th/2) cos(t/2) / sin(d/2)) for t > th, both free of
 *  cancellation.
 *
 *  I is even and 2pi-periodic in th. At th = 0 the ratio is identically one
 *  and I = 0, although I(th) -> pi as th -> 0+.
 */
inline QuadResult<double> kernel_integral(double theta, const QuadConfig& cfg = {})
{
    const double th = detail::fold_angle(theta);
    if (th == 0.0) return {0.0, 0.0, 1, true};
    const double c_half = std::cos(0.5 * th);
    const double s_half = std::sin(0.5 * th);

    // t in [0, th): u = th - t.
    auto below = [=](double u) {
        const double t = th - u;
        const double x = 2.0 * c_half * std::sin(0.5 * t) / std::sin(0.5 * u);
        const double log1p_over_x = x == 0.0 ? 1.0 : std::log1p(x) / x;
        return log1p_over_x * 2.0 * c_half / std::sin(0.5 * u);
    };
    // t in (th, pi]: u = t - th.
    auto above = [=](double u) {
        const double t = th + u;
        const double x = 2.0 * s_half * std::cos(0.5 * t) / std::sin(0.5 * u);
        return std::log1p(x) / std::sin(0.5 * t);
    };

    auto lo = integrate_graded(below, th, cfg);
    QuadResult<double> hi{0.0, 0.0, 0, true};
    if (th < std::numbers::pi) hi = integrate_graded(above, std::numbers::pi - th, cfg);
    return detail::scaled(detail::combine({lo, hi}), 1.0 / std::numbers::pi);
}

namespace detail
{
// |ln|(1+x)/(1-x)|| / x for x = 1 - u, 0 < u <= 1.
inline double log_ratio_below_one(double u)
{
    const double x = 1.0 - u;
    if (x < 0.5) return x == 0.0 ? 2.0 : 2.0 * std::atanh(x) / x;
    return std::log((2.0 - u) / u) / x;
}

// |ln|(1+x)/(1-x)|| / x for x = 1 + u, u > 0.
inline double log_ratio_above_one(double u) { return std::log((2.0 + u) / u) / (1.0 + u); }
} // namespace detail

/** @brief int_a^b |ln|(1+x)/(1-x)|| dx / x for 0 <= a < b.
 *
 *  Pieces that end at the logarithmic singularity x = 1 are integrated on a
 *  mesh graded toward it; other pieces adaptively.
 */
inline QuadResult<double> log_ratio_integral(double a, double b, const QuadConfig& cfg = {})
{
    if (!(0.0 <= a && a < b)) throw domain_error("log_ratio_integral: need 0 <= a < b");
    QuadResult<double> below{0.0, 0.0, 0, true};
    QuadResult<double> above{0.0, 0.0, 0, true};
    if (a < 1.0) {
        if (b >= 1.0) {
            below = integrate_graded(detail::log_ratio_below_one, 1.0 - a, cfg);
        } else {
            // 1 - b > 0: u stays away from the singularity.
            auto in_u = [](double u) { return detail::log_ratio_below_one(u); };
            below = integrate_adaptive(in_u, 1.0 - b, 1.0 - a, cfg);
        }
    }
    if (b > 1.0) {
        if (a <= 1.0) {
            above = integrate_graded(detail::log_ratio_above_one, b - 1.0, cfg);
        } else {
            auto in_u = [](double u) { return detail::log_ratio_above_one(u); };
            above = integrate_adaptive(in_u, a - 1.0, b - 1.0, cfg);
        }
    }
    return detail::combine({below, above});
}

/** @brief The constant closing the kernel estimate,
 *
 *      (2/pi) int_0^inf |ln|(1+x)/(1-x)|| dx / x = (4/pi) int_0^1 ln((1+x)/(1-x)) dx / x,
 *
 *  where the tail over (1, inf) is folded onto (0, 1) by x -> 1/x. The value
 *  is pi.
 */
inline QuadResult<double> reference_constant(const QuadConfig& cfg = {})
{
    return detail::scaled(log_ratio_integral(0.0, 1.0, cfg), 4.0 / std::numbers::pi);
}

/** @brief f(z) recovered from f' by
 *
 *      f(z) = f(0) - (1/2 pi i) int_T f'(xi) ln|1 - xi conj(z)|^2 dxi.
 *
 *  With xi = e^{is} the integral becomes the mean of
 *  f'(e^{is}) e^{is} ln|1 - e^{is} conj(z)|^2, a smooth periodic function for
 *  |z| < 1, taken with the doubling trapezoid rule. Points with |z| > 0.99
 *  are rejected: the kernel approaches a log singularity there.
 */
inline QuadResult<cplx> reconstruct(const TaylorPoly& f, cplx z, const QuadConfig& cfg = {})
{
    if (!(std::abs(z) <= 0.99)) throw domain_error("reconstruct: |z| must not exceed 0.99");
    const TaylorPoly df = derivative(f);
    const cplx zbar = std::conj(z);
    auto integrand = [&df, zbar](double s) {
        const cplx xi = std::polar(1.0, s);
        return detail::horner(df.coeffs(), xi) * xi * std::log(std::norm(1.0 - xi * zbar));
    };
    const std::size_t n0 = std::bit_ceil(std::max<std::size_t>(32, 2 * f.size()));
    auto res = periodic_mean(integrand, cfg, n0);
    res.value = f[0] - res.value;
    return res;
}

/// |ln(((1-r)^2 + r|1 - xi zeta|^2) / ((1-r)^2 + r|1 - xi conj(zeta)|^2))|.
inline double majorant_log_ratio(double r, cplx xi, cplx zeta)
{
    const double c = (1.0 - r) * (1.0 - r);
    const double num = c + r * std::norm(1.0 - xi * zeta);
    const double den = c + r * std::norm(1.0 - xi * std::conj(zeta));
    return std::abs(std::log(num / den));
}

/** @brief r-free majorant int_T |f'(xi eta)| |ln|(1 - xi zeta)/(1 - xi conj(zeta))|^2| dm(xi).
 *
 *  With zeta = e^{i phi} the log factor is 2|ln|sin((s+phi)/2)| - ln|sin((s-phi)/2)||,
 *  singular at s = +-phi. The circle is cut at both singular points and at
 *  the two arc midpoints; each quarter is graded toward its singular end.
 */
inline QuadResult<double> intermediate_majorant(const TaylorPoly& f, UnitComplex eta,
                                                UnitComplex zeta, const QuadConfig& cfg = {})
{
    const TaylorPoly df = rotate(derivative(f), eta);
    const double phi = detail::fold_angle(zeta.angle());
    if (df.is_zero() || phi == 0.0 || phi == std::numbers::pi) return {0.0, 0.0, 1, true};

    // Node at s = p + delta where p is +phi or -phi.
    auto piece = [&df, phi](double p, double dir) {
        return [&df, phi, p, dir](double u) {
            const double delta = dir * u;
            const double s = p + delta;
            double s_plus, s_minus; // sin((s+phi)/2), sin((s-phi)/2)
            if (p > 0.0) {
                s_minus = std::sin(0.5 * delta);
                s_plus = std::sin(phi + 0.5 * delta);
            } else {
                s_plus = std::sin(0.5 * delta);
                s_minus = std::sin(-phi + 0.5 * delta);
            }
            const double lg =
                2.0 * std::abs(std::log(std::abs(s_plus)) - std::log(std::abs(s_minus)));
            return std::abs(eval_boundary(df, s)) * lg;
        };
    };
    const double outer = std::numbers::pi - phi; // half of the arc (phi, 2pi - phi)
    auto r = detail::combine({
        integrate_graded(piece(phi, +1.0), outer, cfg),
        integrate_graded(piece(-phi, -1.0), outer, cfg),
        integrate_graded(piece(-phi, +1.0), phi, cfg),
        integrate_graded(piece(phi, -1.0), phi, cfg),
    });
    return detail::scaled(r, 0.5 / std::numbers::pi);
}

/** @brief Pointwise step of the integrated inequality:
 *  |f(r zeta eta) - f(r conj(zeta) eta)| against the r-free majorant.
 */
inline VerifyRecord intermediate_bound_check(const TaylorPoly& f, UnitComplex eta,
                                             UnitComplex zeta, double r, const std::string& id,
                                             const QuadConfig& cfg = {})
{
    if (!(r > 0.0 && r < 1.0)) throw domain_error("intermediate_bound_check: r must lie in (0, 1)");
    const cplx e = eta.value();
    const cplx z = zeta.value();
    const double lhs = std::abs(eval(f, r * z * e) - eval(f, r * std::conj(z) * e));
    const auto rhs = intermediate_majorant(f, eta, zeta, cfg);
    return make_record(id, eta.angle(), lhs, rhs.value, rhs.err_est, rhs.converged);
}

inline VerifyRecord intermediate_bound_check(const TaylorPoly& f, UnitComplex eta,
                                             UnitComplex zeta, double r,
                                             const QuadConfig& cfg = {})
{
    return intermediate_bound_check(f, eta, zeta, r, to_spec(f), cfg);
}

} // namespace hardy

#endif // HARDY_SINGULAR_QUAD_HPP_
