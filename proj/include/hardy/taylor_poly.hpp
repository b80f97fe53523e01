// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_TAYLOR_POLY_HPP_
#define HARDY_TAYLOR_POLY_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hardy/rng.hpp"

namespace hardy
{
using cplx = std::complex<double>;

/// Raised for inputs outside an operation's mathematical domain.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Slack allowed when a point is meant to lie in the closed unit disc.
inline constexpr double disc_slack = 1e-12;

/** @brief A point on the unit circle, kept together with its angle.
 *
 *  The angle is stored as given; value() is always exp(i*angle), so the two
 *  agree to rounding by construction.
 */
class UnitComplex
{
public:
    constexpr UnitComplex() = default;

    static UnitComplex from_angle(double theta) { return UnitComplex{theta}; }

    /// Projects z onto the circle. z must be nonzero.
    static UnitComplex from_value(cplx z)
    {
        if (z == cplx{}) throw domain_error("UnitComplex::from_value: zero has no angle");
        if (std::abs(std::abs(z) - 1.0) > disc_slack)
            throw domain_error("UnitComplex::from_value: |z| differs from 1");
        return UnitComplex{std::arg(z)};
    }

    double angle() const noexcept { return angle_; }
    cplx value() const noexcept { return std::polar(1.0, angle_); }
    UnitComplex conj() const noexcept { return UnitComplex{-angle_}; }

    friend UnitComplex operator*(UnitComplex a, UnitComplex b) noexcept
    {
        return UnitComplex{a.angle_ + b.angle_};
    }

private:
    explicit constexpr UnitComplex(double theta) : angle_(theta) {}
    double angle_ = 0.0;
};

/** @brief Analytic polynomial f(z) = a_0 + a_1 z + ... + a_N z^N.
 *
 *  Coefficients are kept in canonical form: trailing zeros are trimmed, so the
 *  zero polynomial has no coefficients and degree() returns std::nullopt.
 *  The coefficient a_k is also the Fourier coefficient f^(k) of the boundary
 *  function, so the same storage serves both views.
 */
class TaylorPoly
{
public:
    TaylorPoly() = default;

    explicit TaylorPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    TaylorPoly(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim(); }

    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    std::optional<std::size_t> degree() const noexcept
    {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient a_k, zero beyond the stored range.
    cplx operator[](std::size_t k) const noexcept
    {
        return k < coeffs_.size() ? coeffs_[k] : cplx{};
    }

    friend bool operator==(const TaylorPoly&, const TaylorPoly&) = default;

    friend TaylorPoly operator*(cplx c, const TaylorPoly& f)
    {
        std::vector<cplx> out(f.coeffs_.begin(), f.coeffs_.end());
        for (auto& a : out) a *= c;
        return TaylorPoly{std::move(out)};
    }

    friend TaylorPoly operator+(const TaylorPoly& f, const TaylorPoly& g)
    {
        std::vector<cplx> out(std::max(f.size(), g.size()));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] + g[k];
        return TaylorPoly{std::move(out)};
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
    }

    std::vector<cplx> coeffs_;
};

namespace detail
{
inline cplx horner(std::span<const cplx> a, cplx z) noexcept
{
    cplx acc{};
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}
} // namespace detail

/// Horner evaluation, highest coefficient first. Rejects |z| > 1 + 1e-12.
inline cplx eval(const TaylorPoly& f, cplx z)
{
    if (!(std::abs(z) <= 1.0 + disc_slack))
        throw domain_error("eval: point lies outside the closed unit disc");
    return detail::horner(f.coeffs(), z);
}

/// Evaluation on the circle at angle t, skipping the domain check.
inline cplx eval_boundary(const TaylorPoly& f, double t) noexcept
{
    return detail::horner(f.coeffs(), std::polar(1.0, t));
}

inline TaylorPoly derivative(const TaylorPoly& f)
{
    if (f.size() <= 1) return {};
    std::vector<cplx> out(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) out[k - 1] = static_cast<double>(k) * f[k];
    return TaylorPoly{std::move(out)};
}

/// g(z) = f(z*eta), i.e. a_k -> a_k eta^k.
inline TaylorPoly rotate(const TaylorPoly& f, UnitComplex eta)
{
    std::vector<cplx> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
        out[k] = f[k] * std::polar(1.0, static_cast<double>(k) * eta.angle());
    return TaylorPoly{std::move(out)};
}

/// Values f(exp(2 pi i j / n) * eta) for j = 0..n-1.
inline std::vector<cplx> boundary_samples(const TaylorPoly& f, std::size_t n,
                                          UnitComplex eta = {})
{
    if (n == 0) throw domain_error("boundary_samples: grid size must be positive");
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        out[j] = eval_boundary(f, t + eta.angle());
    }
    return out;
}

/// Partial sum of -log(1 - z): a_0 = 0, a_k = 1/k for 1 <= k <= n.
inline TaylorPoly make_log_family(std::size_t n)
{
    if (n == 0) throw domain_error("make_log_family: N must be at least 1");
    std::vector<cplx> out(n + 1);
    for (std::size_t k = 1; k <= n; ++k) out[k] = 1.0 / static_cast<double>(k);
    return TaylorPoly{std::move(out)};
}

/** @brief Seeded random polynomial of the given degree.
 *
 *  Each coefficient is an independent standard complex Gaussian
 *  (real and imaginary parts N(0, 1/2), so E|a_k|^2 = 1), drawn from a
 *  SplitMix64 stream seeded with `seed` via Box-Muller. The same
 *  (degree, seed) pair always yields the same coefficients.
 */
inline TaylorPoly random_poly(std::size_t degree, std::uint64_t seed)
{
    SplitMix64 rng{seed};
    std::vector<cplx> out(degree + 1);
    for (auto& a : out) a = rng.complex_normal();
    return TaylorPoly{std::move(out)};
}

} // namespace hardy

#endif // HARDY_TAYLOR_POLY_HPP_
