// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_EXTREMAL_HPP_
#define HARDY_EXTREMAL_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hardy/hardy_norms.hpp"
#include "hardy/rng.hpp"
#include "hardy/singular_quad.hpp"
#include "hardy/taylor_poly.hpp"
#include "hardy/toeplitz.hpp"

namespace hardy
{
/// Ceiling shared by every studied ratio, with the slack used to flag faults.
inline constexpr double ratio_ceiling = std::numbers::pi;
inline constexpr double ratio_ceiling_slack = 1e-6;

/// max over the grid of theorem1_lhs(f, eta) / ||f'||_{H^1}.
inline double ratio_theorem1(const TaylorPoly& f, std::span<const UnitComplex> eta_grid,
                             const QuadConfig& cfg = {})
{
    if (f.is_constant()) throw domain_error("ratio_theorem1: f' vanishes identically");
    if (eta_grid.empty()) throw domain_error("ratio_theorem1: eta grid is empty");
    const double h1 = h1_norm_boundary(derivative(f), cfg).value;
    double best = 0.0;
    for (const auto& eta : eta_grid) best = std::max(best, theorem1_lhs(f, eta, cfg).value);
    return best / h1;
}

/// hardy_sum(f) / ||f'||_{H^1}.
inline double ratio_hardy(const TaylorPoly& f, const QuadConfig& cfg = {})
{
    if (f.is_constant()) throw domain_error("ratio_hardy: f' vanishes identically");
    return hardy_sum(f) / h1_norm_boundary(derivative(f), cfg).value;
}

/** @brief (lb - ||f||_inf) / ||f'||_{H^1} with lb the corpus lower bound on ||T_f||.
 *
 *  The Toeplitz norm bound caps this at pi.
 */
inline double ratio_toeplitz(const TaylorPoly& f, std::span<const TaylorPoly> h_corpus,
                             const QuadConfig& cfg = {})
{
    if (f.is_constant()) throw domain_error("ratio_toeplitz: f' vanishes identically");
    const double lb = empirical_norm_lb(f, h_corpus).value;
    return (lb - hinf_norm(f)) / h1_norm_boundary(derivative(f), cfg).value;
}

enum class Objective { thm1, hardy, toeplitz };

inline std::string to_string(Objective o)
{
    switch (o) {
    case Objective::thm1: return "thm1";
    case Objective::hardy: return "hardy";
    case Objective::toeplitz: return "toeplitz";
    }
    return "?";
}

inline std::optional<Objective> parse_objective(std::string_view s)
{
    if (s == "thm1") return Objective::thm1;
    if (s == "hardy") return Objective::hardy;
    if (s == "toeplitz") return Objective::toeplitz;
    return std::nullopt;
}

/// Real parameter vector -> polynomial.
struct Family
{
    std::string name;
    std::size_t dimension = 0;
    std::function<TaylorPoly(std::span<const double>)> build;
    std::vector<double> start; // default starting point
};

/// f = sum_{k=1}^{d} c_k z^k with real c_k.
inline Family monomial_family(std::size_t d)
{
    return {"monomials:" + std::to_string(d), d,
            [](std::span<const double> c) {
                std::vector<cplx> a(c.size() + 1);
                for (std::size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k];
                return TaylorPoly{std::move(a)};
            },
            [d] {
                std::vector<double> s(d, 0.0);
                if (d) s[0] = 1.0;
                return s;
            }()};
}

/// f = sum_{k=1}^{d} c_k z^k / k; c = (1, ..., 1) is logfam:d.
inline Family logfam_span_family(std::size_t d)
{
    return {"logfam-span:" + std::to_string(d), d,
            [](std::span<const double> c) {
                std::vector<cplx> a(c.size() + 1);
                for (std::size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / static_cast<double>(k + 1);
                return TaylorPoly{std::move(a)};
            },
            std::vector<double>(d, 1.0)};
}

/// d free complex coefficients a_1..a_d, parameterized as (re_1, im_1, ...).
inline Family free_family(std::size_t d)
{
    return {"free:" + std::to_string(d), 2 * d,
            [](std::span<const double> c) {
                std::vector<cplx> a(c.size() / 2 + 1);
                for (std::size_t k = 0; 2 * k + 1 < c.size(); ++k) a[k + 1] = {c[2 * k], c[2 * k + 1]};
                return TaylorPoly{std::move(a)};
            },
            [d] {
                std::vector<double> s(2 * d, 0.0);
                if (d) s[0] = 1.0;
                return s;
            }()};
}

inline std::optional<Family> family_by_name(std::string_view kind, std::size_t d)
{
    if (kind == "monomials") return monomial_family(d);
    if (kind == "logfam-span") return logfam_span_family(d);
    if (kind == "free") return free_family(d);
    return std::nullopt;
}

struct SearchConfig
{
    std::size_t budget = 500;       // objective evaluations, restarts included
    std::size_t restarts = 3;
    std::uint64_t seed = 1;
    double initial_step = 0.25;
    double ftol = 1e-10;            // simplex value spread
    double xtol = 1e-8;             // simplex diameter
    std::size_t eta_grid = 16;      // for the thm1 objective
    QuadConfig quad{};
};

struct TracePoint
{
    std::vector<double> params;
    double objective;
};

struct SearchState
{
    std::string family;
    std::vector<double> params;
    double objective = -std::numeric_limits<double>::infinity();
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    bool converged = false;
    bool fault = false; // an evaluation exceeded the theorem ceiling
    std::vector<TracePoint> trace;
};

/** @brief Memoized objective keyed by the bit pattern of the coefficients.
 *
 *  Shareable across threads; concurrent inserts of one key store equal
 *  values, so the last write wins harmlessly.
 */
class ObjectiveCache
{
public:
    std::optional<double> find(const TaylorPoly& f) const
    {
        std::lock_guard lock(mu_);
        auto it = map_.find(key(f));
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(const TaylorPoly& f, double v)
    {
        std::lock_guard lock(mu_);
        map_[key(f)] = v;
    }

    std::size_t size() const
    {
        std::lock_guard lock(mu_);
        return map_.size();
    }

private:
    static std::string key(const TaylorPoly& f)
    {
        std::string k(f.size() * sizeof(cplx), '\0');
        if (!k.empty()) std::memcpy(k.data(), f.coeffs().data(), k.size());
        return k;
    }

    mutable std::mutex mu_;
    std::unordered_map<std::string, double> map_;
};

/// Objective evaluator: family parameters -> ratio, or nullopt when rejected.
class RatioObjective
{
public:
    RatioObjective(Objective kind, const SearchConfig& cfg)
        : kind_(kind), cfg_(cfg), eta_(uniform_eta_grid(std::max<std::size_t>(cfg.eta_grid, 1)))
    {
        if (kind_ == Objective::toeplitz)
            for (auto& h : toeplitz_h_corpus()) h_corpus_.push_back(std::move(h.poly));
    }

    std::optional<double> operator()(const TaylorPoly& f)
    {
        if (auto hit = cache_.find(f)) return *hit;
        std::optional<double> v;
        try {
            switch (kind_) {
            case Objective::thm1: v = ratio_theorem1(f, eta_, cfg_.quad); break;
            case Objective::hardy: v = ratio_hardy(f, cfg_.quad); break;
            case Objective::toeplitz: v = ratio_toeplitz(f, h_corpus_, cfg_.quad); break;
            }
        } catch (const domain_error&) {
            v.reset();
        }
        if (v && !std::isfinite(*v)) v.reset();
        if (v) cache_.store(f, *v);
        return v;
    }

    const ObjectiveCache& cache() const noexcept { return cache_; }

private:
    Objective kind_;
    SearchConfig cfg_;
    std::vector<UnitComplex> eta_;
    std::vector<TaylorPoly> h_corpus_;
    ObjectiveCache cache_;
};

/** @brief Nelder-Mead maximization of a ratio over a coefficient family.
 *
 *  Standard coefficients (reflection 1, expansion 2, contraction 1/2,
 *  shrink 1/2). The first run starts from family.start with an axis-aligned
 *  simplex of size initial_step; each of the `restarts` further runs starts
 *  from the incumbent with a simplex whose edge lengths are drawn from
 *  SplitMix64(seed + r). Points whose evaluation fails score -inf. The trace
 *  records the best-so-far after every iteration, so it is nondecreasing.
 *  Any value above pi * (1 + 1e-6) sets fault; such a value indicates a
 *  numerics problem, not a counterexample.
 */
inline SearchState search(const Family& family, Objective objective, const SearchConfig& cfg)
{
    if (family.dimension == 0) throw domain_error("search: family dimension must be positive");
    if (cfg.budget == 0) throw domain_error("search: budget must be positive");
    const std::size_t dim = family.dimension;
    RatioObjective ratio(objective, cfg);

    SearchState st;
    st.family = family.name;
    constexpr double ninf = -std::numeric_limits<double>::infinity();

    auto evaluate = [&](const std::vector<double>& x) -> double {
        ++st.evaluations;
        const auto v = ratio(family.build(x));
        if (!v) return ninf;
        if (*v > ratio_ceiling * (1.0 + ratio_ceiling_slack)) st.fault = true;
        if (*v > st.objective) {
            st.objective = *v;
            st.params = x;
        }
        return *v;
    };

    std::vector<double> x0 = family.start;
    x0.resize(dim, 0.0);
    st.params = x0;
    evaluate(x0);
    st.trace.push_back({st.params, st.objective});

    for (std::size_t run = 0; run <= cfg.restarts && st.evaluations < cfg.budget; ++run) {
        std::vector<double> steps(dim, cfg.initial_step);
        if (run > 0) {
            SplitMix64 rng{cfg.seed + run};
            for (auto& s : steps) s = cfg.initial_step * rng.uniform(0.5, 1.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        }
        const std::vector<double> base = st.params;
        std::vector<std::vector<double>> simplex(dim + 1, base);
        std::vector<double> val(dim + 1);
        val[0] = st.objective;
        for (std::size_t i = 0; i < dim; ++i) {
            simplex[i + 1][i] += steps[i];
            val[i + 1] = st.evaluations < cfg.budget ? evaluate(simplex[i + 1]) : ninf;
        }

        bool run_converged = false;
        std::vector<std::size_t> order(dim + 1);
        while (st.evaluations < cfg.budget) {
            // Best first; stable on ties so earlier vertices win.
            for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return val[a] > val[b]; });
            const std::size_t best = order.front(), worst = order.back(),
                              second = order[dim - 1];

            double diam = 0.0;
            for (std::size_t i = 0; i <= dim; ++i)
                for (std::size_t k = 0; k < dim; ++k)
                    diam = std::max(diam, std::abs(simplex[i][k] - simplex[best][k]));
            if (std::isfinite(val[worst]) && val[best] - val[worst] <= cfg.ftol && diam <= cfg.xtol) {
                run_converged = true;
                break;
            }
            ++st.iterations;

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t i = 0; i <= dim; ++i)
                if (i != worst)
                    for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k] / static_cast<double>(dim);
            auto along = [&](double t) {
                std::vector<double> p(dim);
                for (std::size_t k = 0; k < dim; ++k) p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
                return p;
            };

            auto xr = along(-1.0);
            const double fr = evaluate(xr);
            if (fr > val[best]) {
                auto xe = along(-2.0);
                const double fe = st.evaluations < cfg.budget ? evaluate(xe) : ninf;
                if (fe > fr) {
                    simplex[worst] = std::move(xe);
                    val[worst] = fe;
                } else {
                    simplex[worst] = std::move(xr);
                    val[worst] = fr;
                }
            } else if (fr > val[second]) {
                simplex[worst] = std::move(xr);
                val[worst] = fr;
            } else {
                const bool outside = fr > val[worst];
                auto xc = along(outside ? -0.5 : 0.5);
                const double fc = st.evaluations < cfg.budget ? evaluate(xc) : ninf;
                if (outside ? fc >= fr : fc > val[worst]) {
                    simplex[worst] = std::move(xc);
                    val[worst] = fc;
                } else {
                    for (std::size_t i = 0; i <= dim && st.evaluations < cfg.budget; ++i) {
                        if (i == best) continue;
                        for (std::size_t k = 0; k < dim; ++k)
                            simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
                        val[i] = evaluate(simplex[i]);
                    }
                }
            }
            st.trace.push_back({st.params, st.objective});
        }
        st.converged = run_converged;
    }
    return st;
}

} // namespace hardy

#endif // HARDY_EXTREMAL_HPP_
