// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_QUADRATURE_HPP_
#define HARDY_QUADRATURE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <queue>
#include <type_traits>
#include <span>
#include <vector>

namespace hardy
{
/** @brief Stopping rule shared by every integrator.
 *
 *  An integral is accepted once the error estimate satisfies
 *  err <= atol + rtol * |value|. Integrators that exhaust max_nodes return the
 *  best estimate with converged == false.
 */
struct QuadConfig
{
    double atol = 1e-12;
    double rtol = 1e-10;
    std::size_t max_nodes = std::size_t{1} << 20;

    double tolerance(double magnitude) const noexcept { return atol + rtol * magnitude; }
};

template <typename T>
struct QuadResult
{
    T value{};
    double err_est = 0.0;
    std::size_t nodes = 0;
    bool converged = true;
};

/// Neumaier-compensated sum.
template <typename T>
T compensated_sum(std::span<const T> xs) noexcept
{
    T sum{};
    T comp{};
    auto step = [](double& s, double& c, double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    };
    for (const T& x : xs) {
        if constexpr (std::is_same_v<T, double>) {
            step(sum, comp, x);
        } else {
            double sr = sum.real(), si = sum.imag(), cr = comp.real(), ci = comp.imag();
            step(sr, cr, x.real());
            step(si, ci, x.imag());
            sum = {sr, si};
            comp = {cr, ci};
        }
    }
    return sum + comp;
}

/// Pairwise (cascade) sum; fixed association order for a given length.
template <typename T>
T pairwise_sum(std::span<const T> xs) noexcept
{
    if (xs.size() <= 8) {
        T s{};
        for (const T& x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace detail
{
struct GaussRule
{
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Newton iteration on P_m from the Chebyshev-like initial guess.
inline GaussRule make_gauss_legendre(int m)
{
    GaussRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged node for the weight.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[m - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[m - 1 - i] = w;
    }
    if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
    return rule;
}
} // namespace detail

/// Cached m-point Gauss-Legendre rule on [-1, 1].
template <int M>
const detail::GaussRule& gauss_legendre()
{
    static const detail::GaussRule rule = detail::make_gauss_legendre(M);
    return rule;
}

/// Single application of the M-point Gauss-Legendre rule on [a, b].
template <int M, typename F>
auto gauss_panel(F&& f, double a, double b)
{
    const auto& rule = gauss_legendre<M>();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    using T = decltype(f(a));
    std::array<T, M> terms;
    for (int i = 0; i < M; ++i) terms[i] = rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * pairwise_sum<T>(terms);
}

namespace detail
{
inline constexpr int panel_order = 10;

template <typename T>
struct Panel
{
    double a, b;
    T left, right; // rule applied to each half
    double err;    // |whole - (left + right)|
    bool frozen;   // too narrow to split further
};

template <typename F>
auto make_panel(F& f, double a, double b, double min_width)
{
    using T = decltype(f(a));
    const double m = 0.5 * (a + b);
    const T whole = gauss_panel<panel_order>(f, a, b);
    const T left = gauss_panel<panel_order>(f, a, m);
    const T right = gauss_panel<panel_order>(f, m, b);
    return Panel<T>{a, b, left, right, std::abs(whole - (left + right)), (b - a) < min_width};
}

// Globally adaptive bisection over a fixed initial partition. The panel with
// the largest error estimate is split first; ties go to the leftmost panel.
template <typename F>
auto adaptive_over(F& f, std::span<const double> breaks, const QuadConfig& cfg,
                   double min_width)
{
    using T = decltype(f(breaks[0]));
    using P = Panel<T>;
    constexpr std::size_t per_panel = 3 * panel_order;
    constexpr std::size_t per_split = 4 * panel_order;

    auto worse = [](const P& x, const P& y) {
        if (x.frozen != y.frozen) return x.frozen; // unsplittable panels sink
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a;
    };
    std::priority_queue<P, std::vector<P>, decltype(worse)> heap(worse);

    QuadResult<T> res;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        heap.push(make_panel(f, breaks[i], breaks[i + 1], min_width));
        res.nodes += per_panel;
    }

    auto totals = [&]() {
        std::vector<P> all;
        all.reserve(heap.size());
        auto copy = heap;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const P& x, const P& y) { return x.a < y.a; });
        std::vector<T> vals(all.size());
        std::vector<double> errs(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            vals[i] = all[i].left + all[i].right;
            errs[i] = all[i].err;
        }
        return std::pair{pairwise_sum<T>(vals), pairwise_sum<double>(errs)};
    };

    // Running totals drive the loop; the final answer is re-summed in
    // positional order so it does not depend on the split history.
    T value{};
    double err = 0.0;
    {
        auto [v, e] = totals();
        value = v;
        err = e;
    }
    while (err > cfg.tolerance(std::abs(value))) {
        if (heap.top().frozen || res.nodes + per_split > cfg.max_nodes) {
            res.converged = false;
            break;
        }
        P worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        P lo = make_panel(f, worst.a, m, min_width);
        P hi = make_panel(f, m, worst.b, min_width);
        res.nodes += per_split;
        value += (lo.left + lo.right + hi.left + hi.right) - (worst.left + worst.right);
        err += lo.err + hi.err - worst.err;
        heap.push(lo);
        heap.push(hi);
        if (err < 0.0) err = 0.0;
    }
    auto [v, e] = totals();
    res.value = v;
    res.err_est = e;
    return res;
}
} // namespace detail

/** @brief Globally adaptive Gauss-Legendre quadrature of f over [a, b].
 *
 *  Each panel is integrated with a 10-point rule on both halves; the
 *  difference to the whole-panel rule is the panel's error estimate. The
 *  integrand may have kinks; it must be finite at interior points.
 */
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, const QuadConfig& cfg = {},
                        std::size_t initial_panels = 8)
{
    initial_panels = std::max<std::size_t>(initial_panels, 1);
    std::vector<double> breaks(initial_panels + 1);
    for (std::size_t i = 0; i <= initial_panels; ++i)
        breaks[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(initial_panels);
    breaks.back() = b;
    return detail::adaptive_over(f, breaks, cfg, 1e-13 * std::abs(b - a));
}

/// Geometric grading ratio and depth for integrate_graded.
inline constexpr double grading_ratio = 0.5;
inline constexpr int grading_levels = 48;

/** @brief Integrates g(u) over (0, length] where g may carry an integrable
 *  (logarithmic-type) singularity at u = 0.
 *
 *  The integrand receives the distance u from the singular point rather than
 *  an absolute abscissa, so nodes close to the singularity keep full relative
 *  precision. The initial partition shrinks geometrically toward u = 0
 *  (ratio 1/2, 48 levels) and is then refined adaptively.
 */
template <typename G>
auto integrate_graded(G&& g, double length, const QuadConfig& cfg = {})
{
    std::vector<double> breaks;
    breaks.reserve(grading_levels + 2);
    breaks.push_back(0.0);
    for (int j = grading_levels; j >= 1; --j) breaks.push_back(length * std::pow(grading_ratio, j));
    breaks.push_back(length);
    // Below this width a panel is left alone; its contribution is already
    // bounded by the width times the logarithm of the width.
    return detail::adaptive_over(g, breaks, cfg, 1e-300);
}

/** @brief Mean value (1/2pi) * integral over [0, 2pi) of a smooth periodic
 *  function by the trapezoid rule with nested doubling.
 *
 *  Starts at n0 nodes (a power of two is expected) and doubles until
 *  successive means differ by at most the configured tolerance.
 */
template <typename F>
auto periodic_mean(F&& f, const QuadConfig& cfg = {}, std::size_t n0 = 32)
{
    using T = decltype(f(0.0));
    QuadResult<T> res;
    std::size_t n = std::max<std::size_t>(n0, 2);
    std::vector<T> vals(n);
    for (std::size_t j = 0; j < n; ++j)
        vals[j] = f(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    T sum = pairwise_sum<T>(vals);
    T mean = sum / static_cast<double>(n);
    res.nodes = n;
    for (;;) {
        if (2 * n > cfg.max_nodes) {
            res.converged = false;
            break;
        }
        // New nodes sit at the odd multiples of pi / n.
        vals.assign(n, T{});
        for (std::size_t j = 0; j < n; ++j)
            vals[j] = f(std::numbers::pi * static_cast<double>(2 * j + 1) / static_cast<double>(n));
        sum += pairwise_sum<T>(vals);
        n *= 2;
        res.nodes = n;
        const T next = sum / static_cast<double>(n);
        const double delta = std::abs(next - mean);
        mean = next;
        res.err_est = delta;
        if (delta <= cfg.tolerance(std::abs(mean))) break;
    }
    res.value = mean;
    return res;
}

} // namespace hardy

#endif // HARDY_QUADRATURE_HPP_
