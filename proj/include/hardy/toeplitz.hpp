// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_TOEPLITZ_HPP_
#define HARDY_TOEPLITZ_HPP_

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "hardy/function_spec.hpp"
#include "hardy/hardy_norms.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/taylor_poly.hpp"

namespace hardy
{
/** @brief T_f h = analytic projection of conj(f) h, in coefficients.
 *
 *  Expanding the Cauchy kernel 1/(1 - conj(zeta) z) = sum_n conj(zeta)^n z^n
 *  and using orthonormality of zeta^k under dm gives
 *  c_n = sum_{k>=n} conj(a_{k-n}) b_k for 0 <= n <= deg h.
 */
inline TaylorPoly toeplitz_apply(const TaylorPoly& f, const TaylorPoly& h)
{
    std::vector<cplx> c(h.size());
    for (std::size_t n = 0; n < h.size(); ++n) {
        cplx acc{};
        for (std::size_t k = n; k < h.size() && k - n < f.size(); ++k)
            acc += std::conj(f[k - n]) * h[k];
        c[n] = acc;
    }
    return TaylorPoly{std::move(c)};
}

/** @brief Reference T_f h from boundary samples.
 *
 *  Samples conj(f) h at n equispaced points, applies a direct DFT and keeps
 *  frequencies 0..deg h. The product has frequencies -deg f..deg h, so the
 *  transform is alias-free only when n > deg f + deg h.
 */
inline TaylorPoly toeplitz_apply_bruteforce(const TaylorPoly& f, const TaylorPoly& h,
                                            std::size_t n)
{
    if (h.is_zero() || f.is_zero()) return {};
    const std::size_t span = *f.degree() + *h.degree();
    if (n <= span)
        throw domain_error("toeplitz_apply_bruteforce: grid of " + std::to_string(n) +
                           " points aliases; need more than " + std::to_string(span));
    const auto fs = boundary_samples(f, n);
    const auto hs = boundary_samples(h, n);
    std::vector<cplx> prod(n);
    for (std::size_t j = 0; j < n; ++j) prod[j] = std::conj(fs[j]) * hs[j];

    std::vector<cplx> c(h.size());
    std::vector<cplx> terms(n);
    for (std::size_t m = 0; m < h.size(); ++m) {
        for (std::size_t j = 0; j < n; ++j) {
            // exp(-2 pi i j m / n), index reduced mod n to keep the angle small.
            const std::size_t jm = (j * m) % n;
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(jm) /
                               static_cast<double>(n);
            terms[j] = prod[j] * std::polar(1.0, ang);
        }
        c[m] = pairwise_sum<cplx>(terms) / static_cast<double>(n);
    }
    return TaylorPoly{std::move(c)};
}

/// Right-hand side of the Toeplitz norm bound, ||f||_inf + pi ||f'||_{H^1}.
inline QuadResult<double> operator_bound(const TaylorPoly& f, const QuadConfig& cfg = {})
{
    auto h1 = h1_norm_boundary(derivative(f), cfg);
    h1.value = hinf_norm(f) + std::numbers::pi * h1.value;
    h1.err_est *= std::numbers::pi;
    return h1;
}

struct NormLowerBound
{
    double value = 0.0;
    std::size_t witness = 0; // index into the corpus
};

/** @brief max over the corpus of ||T_f (h / ||h||_inf)||_inf.
 *
 *  Every term is the norm of T_f at a unit-norm vector, so the maximum is a
 *  lower bound on ||T_f||. Zero members are skipped; ties keep the earliest.
 */
inline NormLowerBound empirical_norm_lb(const TaylorPoly& f, std::span<const TaylorPoly> corpus)
{
    if (corpus.empty()) throw domain_error("empirical_norm_lb: corpus is empty");
    NormLowerBound best;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const double hn = hinf_norm(corpus[i]);
        if (hn == 0.0) continue;
        const double v = hinf_norm(toeplitz_apply(f, (1.0 / hn) * corpus[i]));
        if (v > best.value) best = {v, i};
    }
    return best;
}

/** @brief Samples of g(zeta) = conj(f(conj(zeta) eta)) on the n-point grid.
 *
 *  g is the bounded second piece in the splitting of T_f; on the circle it
 *  has the same modulus as f, sampled in reflected order.
 */
inline std::vector<cplx> reflected_conjugate_boundary(const TaylorPoly& f, UnitComplex eta,
                                                      std::size_t n)
{
    if (n == 0) throw domain_error("reflected_conjugate_boundary: grid size must be positive");
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        out[j] = std::conj(eval_boundary(f, eta.angle() - t));
    }
    return out;
}

/** @brief Fixed 50-member test corpus for T_f norm probes.
 *
 *  z^k for k = 0..16, twenty random polynomials of degree 1..16 and thirteen
 *  Blaschke factors (z - w)/(1 - conj(w) z) with |w| <= 0.7, truncated after
 *  z^16. Everything is drawn from SplitMix64(seed).
 */
inline std::vector<NamedPoly> toeplitz_h_corpus(std::uint64_t seed = 2024)
{
    std::vector<NamedPoly> out;
    for (std::size_t k = 0; k <= 16; ++k) {
        std::vector<cplx> c(k + 1);
        c[k] = 1.0;
        TaylorPoly p{std::move(c)};
        out.push_back({to_spec(p), std::move(p)});
    }
    SplitMix64 rng{seed};
    for (int i = 0; i < 20; ++i) {
        const std::size_t deg = 1 + rng.next() % 16;
        const std::uint64_t s = rng.next();
        out.push_back({random_spec(deg, s), random_poly(deg, s)});
    }
    for (int i = 0; i < 13; ++i) {
        const cplx w = std::polar(0.7 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
        // (z - w) * sum_k (conj(w) z)^k, kept through z^16.
        std::vector<cplx> c(17);
        cplx wk = 1.0; // conj(w)^k
        for (std::size_t k = 0; k <= 16; ++k) {
            c[k] += -w * wk;
            if (k + 1 <= 16) c[k + 1] += wk;
            wk *= std::conj(w);
        }
        TaylorPoly p{std::move(c)};
        out.push_back({to_spec(p), std::move(p)});
    }
    return out;
}

} // namespace hardy

#endif // HARDY_TOEPLITZ_HPP_
