// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_CORPUS_HPP_
#define HARDY_CORPUS_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "hardy/function_spec.hpp"
#include "hardy/taylor_poly.hpp"

namespace hardy
{
inline constexpr std::array<std::size_t, 6> corpus_degrees{1, 2, 4, 8, 16, 32};
inline constexpr std::size_t corpus_per_degree = 10;

/** @brief The seeded verification corpus: ten random polynomials for each
 *  degree in {1, 2, 4, 8, 16, 32}.
 *
 *  Member i of degree d is random_poly(d, 1000 * seed + 10 * d + i), so each
 *  member's id ("random:d,s") reproduces it on its own.
 */
inline std::vector<NamedPoly> standard_corpus(std::uint64_t seed = 1)
{
    std::vector<NamedPoly> out;
    out.reserve(corpus_degrees.size() * corpus_per_degree);
    for (std::size_t d : corpus_degrees)
        for (std::size_t i = 0; i < corpus_per_degree; ++i) {
            const std::uint64_t s = 1000 * seed + 10 * d + i;
            out.push_back({random_spec(d, s), random_poly(d, s)});
        }
    return out;
}

/// Every third member of the standard corpus (20 polynomials, all degrees).
inline std::vector<NamedPoly> corpus_subset(std::uint64_t seed = 1)
{
    auto all = standard_corpus(seed);
    std::vector<NamedPoly> out;
    for (std::size_t i = 0; i < all.size(); i += 3) out.push_back(std::move(all[i]));
    return out;
}

/// logfam:N for N = 2, 4, ..., max_n.
inline std::vector<NamedPoly> logfam_sweep(std::size_t max_n = 256)
{
    std::vector<NamedPoly> out;
    for (std::size_t n = 2; n <= max_n; n *= 2) out.push_back({logfam_spec(n), make_log_family(n)});
    return out;
}

} // namespace hardy

#endif // HARDY_CORPUS_HPP_
