// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_RNG_HPP_
#define HARDY_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace hardy
{
/** @brief SplitMix64 (Steele, Lea & Flood 2014).
 *
 *  Every corpus in this library is drawn from this generator so that reports
 *  are reproducible from a seed alone. The standard-library distributions are
 *  avoided on purpose: their output is implementation-defined.
 */
class SplitMix64
{
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream.
    constexpr SplitMix64 split() noexcept { return SplitMix64{next()}; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Complex Gaussian with independent N(0, 1/2) parts (Box-Muller).
    std::complex<double> complex_normal() noexcept
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    std::uint64_t state_;
};

} // namespace hardy

#endif // HARDY_RNG_HPP_
