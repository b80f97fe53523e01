// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_RUNNER_HPP_
#define HARDY_RUNNER_HPP_

// Sweep driver behind the hardyverify command line tool.
//
// Exit status contract:
//   0   every record passed and every integral converged
//   1   some inequality check failed
//   2   some integral did not converge (takes precedence over 1)
//   64  usage error (bad flag, bad spec, bad config file)

#include <algorithm>
#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/corpus.hpp"
#include "hardy/extremal.hpp"
#include "hardy/function_spec.hpp"
#include "hardy/hardy_norms.hpp"
#include "hardy/report.hpp"
#include "hardy/singular_quad.hpp"
#include "hardy/toeplitz.hpp"

namespace hardy
{
enum class Command
{
    constants,
    verify_hardy,
    verify_thm1,
    kernel_sup,
    toeplitz_check,
    reconstruct_check,
    extremal
};

inline constexpr std::array<std::pair<Command, const char*>, 7> command_names{{
    {Command::constants, "constants"},
    {Command::verify_hardy, "verify-hardy"},
    {Command::verify_thm1, "verify-thm1"},
    {Command::kernel_sup, "kernel-sup"},
    {Command::toeplitz_check, "toeplitz-check"},
    {Command::reconstruct_check, "reconstruct-check"},
    {Command::extremal, "extremal"},
}};

inline std::string to_string(Command c)
{
    for (auto [k, name] : command_names)
        if (k == c) return name;
    return "?";
}

inline std::optional<Command> parse_command(std::string_view s)
{
    for (auto [k, name] : command_names)
        if (s == name) return k;
    return std::nullopt;
}

enum class Format { json, csv };

/// Raised for invalid run configurations; maps to exit status 64.
class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_numerics = 2;
inline constexpr int exit_usage = 64;

struct RunConfig
{
    Command command = Command::constants;
    std::vector<std::string> specs; // empty: the command's default corpus
    std::size_t eta_grid = 64;
    std::size_t theta_grid = 128;
    double tol = 1e-10;             // quadrature relative tolerance
    std::uint64_t seed = 1;
    Format format = Format::json;
    std::optional<std::string> out;
    std::size_t budget = 500;
    std::string family = "logfam-span";
    std::size_t dim = 8;
    std::string objective = "hardy";

    /// Throws usage_error on out-of-range values or malformed specs.
    void validate() const
    {
        if (eta_grid == 0) throw usage_error("--eta-grid must be at least 1");
        if (theta_grid == 0) throw usage_error("--theta-grid must be at least 1");
        if (!(tol > 0.0)) throw usage_error("--tol must be positive");
        if (budget == 0) throw usage_error("--budget must be at least 1");
        if (dim == 0) throw usage_error("--dim must be at least 1");
        if (!parse_objective(objective)) throw usage_error("unknown objective '" + objective + "'");
        if (!family_by_name(family, dim)) throw usage_error("unknown family '" + family + "'");
        for (const auto& s : specs) {
            try {
                (void)parse_spec(s);
            } catch (const spec_error& e) {
                throw usage_error(e.what());
            }
        }
    }

    QuadConfig quad() const
    {
        QuadConfig q;
        q.rtol = tol;
        q.atol = std::min(q.atol, tol);
        return q;
    }
};

/** @brief Fills fields from a flat JSON object whose keys mirror the flags
 *  (spec, eta_grid, theta_grid, tol, seed, format, out, budget, family, dim,
 *  objective). `spec` may be a string or an array of strings. Keys listed in
 *  `skip` are left alone so that command-line flags win.
 */
inline void apply_config_json(RunConfig& cfg, const nlohmann::json& j,
                              const std::vector<std::string>& skip = {})
{
    if (!j.is_object()) throw usage_error("config file must hold a JSON object");
    auto wanted = [&](const std::string& key) {
        return j.contains(key) && std::find(skip.begin(), skip.end(), key) == skip.end();
    };
    try {
        if (wanted("spec")) {
            cfg.specs.clear();
            if (j["spec"].is_string())
                cfg.specs.push_back(j["spec"].get<std::string>());
            else
                cfg.specs = j["spec"].get<std::vector<std::string>>();
        }
        if (wanted("eta_grid")) cfg.eta_grid = j["eta_grid"].get<std::size_t>();
        if (wanted("theta_grid")) cfg.theta_grid = j["theta_grid"].get<std::size_t>();
        if (wanted("tol")) cfg.tol = j["tol"].get<double>();
        if (wanted("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (wanted("budget")) cfg.budget = j["budget"].get<std::size_t>();
        if (wanted("family")) cfg.family = j["family"].get<std::string>();
        if (wanted("dim")) cfg.dim = j["dim"].get<std::size_t>();
        if (wanted("objective")) cfg.objective = j["objective"].get<std::string>();
        if (wanted("out")) cfg.out = j["out"].get<std::string>();
        if (wanted("format")) {
            const auto f = j["format"].get<std::string>();
            if (f == "json")
                cfg.format = Format::json;
            else if (f == "csv")
                cfg.format = Format::csv;
            else
                throw usage_error("format must be json or csv");
        }
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("config file: ") + e.what());
    }
}

struct RunOutcome
{
    int exit_code = exit_ok;
    json report;
    std::vector<VerifyRecord> records;
    std::string rendered; // report in the requested format
};

namespace detail
{
inline std::vector<NamedPoly> specs_or(const RunConfig& cfg, std::vector<NamedPoly> fallback)
{
    if (cfg.specs.empty()) return fallback;
    std::vector<NamedPoly> out;
    for (const auto& s : cfg.specs) out.push_back(parse_named(s));
    return out;
}

inline json config_json(const RunConfig& cfg)
{
    return json{{"specs", cfg.specs},
                {"eta_grid", cfg.eta_grid},
                {"theta_grid", cfg.theta_grid},
                {"tol", cfg.tol},
                {"seed", cfg.seed},
                {"format", cfg.format == Format::json ? "json" : "csv"},
                {"budget", cfg.budget},
                {"family", cfg.family},
                {"dim", cfg.dim},
                {"objective", cfg.objective}};
}

inline std::vector<VerifyRecord> run_constants(const RunConfig& cfg, json& details)
{
    constexpr double tol = 1e-8;
    const auto q = cfg.quad();
    const auto ref = reference_constant(q);
    const auto sub = log_ratio_integral(0.0, 1.0, q);
    const double pi2_4 = std::numbers::pi * std::numbers::pi / 4.0;
    details = json{{"reference_constant", {{"value", ref.value}, {"err_est", ref.err_est}, {"nodes", ref.nodes}}},
                   {"log_ratio_integral_0_1", {{"value", sub.value}, {"err_est", sub.err_est}, {"nodes", sub.nodes}}},
                   {"pi", std::numbers::pi},
                   {"pi_squared_over_4", pi2_4}};
    // Equality checks are recorded as |deviation| <= tolerance.
    return {make_record("reference_constant", 0.0, std::abs(ref.value - std::numbers::pi), tol, 0.0,
                        ref.converged),
            make_record("log_ratio_integral_0_1", 0.0, std::abs(sub.value - pi2_4), tol, 0.0,
                        sub.converged)};
}

inline std::vector<VerifyRecord> run_verify_hardy(const RunConfig& cfg, json& details)
{
    auto fallback = standard_corpus(cfg.seed);
    for (auto& p : logfam_sweep(256)) fallback.push_back(std::move(p));
    std::vector<VerifyRecord> out;
    details = json::array();
    for (const auto& f : specs_or(cfg, std::move(fallback))) {
        out.push_back(verify_hardy(f.poly, f.id, cfg.quad()));
        json nr = to_json(norm_report(f.poly, cfg.quad()));
        details.push_back(json{{"function", f.id}, {"norms", nr}});
    }
    return out;
}

inline std::vector<VerifyRecord> run_verify_thm1(const RunConfig& cfg)
{
    const auto grid = uniform_eta_grid(cfg.eta_grid);
    std::vector<VerifyRecord> out;
    for (const auto& f : specs_or(cfg, standard_corpus(cfg.seed))) {
        auto recs = verify_theorem1(f.poly, grid, f.id, cfg.quad());
        out.insert(out.end(), recs.begin(), recs.end());
    }
    return out;
}

inline std::vector<VerifyRecord> run_kernel_sup(const RunConfig& cfg, json& details)
{
    std::vector<VerifyRecord> out;
    double best = 0.0, best_theta = 0.0;
    for (std::size_t j = 1; j <= cfg.theta_grid; ++j) {
        const double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(cfg.theta_grid);
        const auto k = kernel_integral(theta, cfg.quad());
        out.push_back(make_record("kernel", theta, k.value, std::numbers::pi, k.err_est, k.converged));
        if (k.value > best) {
            best = k.value;
            best_theta = theta;
        }
    }
    details = json{{"max", best}, {"argmax_theta", best_theta}, {"ceiling", std::numbers::pi}};
    return out;
}

inline std::vector<VerifyRecord> run_toeplitz_check(const RunConfig& cfg, json& details)
{
    const auto hs = toeplitz_h_corpus(cfg.seed);
    std::vector<TaylorPoly> h_polys;
    for (const auto& h : hs) h_polys.push_back(h.poly);

    std::vector<VerifyRecord> out;
    details = json::array();
    for (const auto& f : specs_or(cfg, corpus_subset(cfg.seed))) {
        const auto bound = operator_bound(f.poly, cfg.quad());
        for (const auto& h : hs) {
            const double hn = hinf_norm(h.poly);
            const double lhs = hinf_norm(toeplitz_apply(f.poly, h.poly));
            out.push_back(make_record(f.id + " @ " + h.id, 0.0, lhs, bound.value * hn,
                                      bound.err_est * hn, bound.converged));
        }
        const auto lb = empirical_norm_lb(f.poly, h_polys);
        details.push_back(toeplitz_summary_json(f.id, bound.value, lb.value, hs[lb.witness].id));
    }
    return out;
}

inline std::vector<VerifyRecord> run_reconstruct_check(const RunConfig& cfg)
{
    constexpr double tol = 1e-8;
    constexpr std::size_t points = 100;
    std::vector<VerifyRecord> out;
    SplitMix64 rng{cfg.seed};
    for (const auto& f : specs_or(cfg, corpus_subset(cfg.seed))) {
        for (std::size_t i = 0; i < points; ++i) {
            const cplx z = std::polar(0.9 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
            const auto rec = reconstruct(f.poly, z, cfg.quad());
            out.push_back(make_record(f.id, std::arg(z), std::abs(rec.value - eval(f.poly, z)), tol, 0.0,
                                      rec.converged));
        }
    }
    return out;
}

inline std::vector<VerifyRecord> run_extremal(const RunConfig& cfg, json& details)
{
    const Family fam = *family_by_name(cfg.family, cfg.dim);
    SearchConfig sc;
    sc.budget = cfg.budget;
    sc.seed = cfg.seed;
    sc.quad = cfg.quad();
    const auto st = search(fam, *parse_objective(cfg.objective), sc);
    details = to_json(st);
    details["objective_kind"] = cfg.objective;
    details["fault"] = st.fault;
    // A fault is a numerics problem, not a violated theorem.
    return {make_record(fam.name, 0.0, st.objective, ratio_ceiling * (1.0 + ratio_ceiling_slack), 0.0,
                        !st.fault)};
}
} // namespace detail

/// Unconverged quadrature takes precedence over a failed inequality.
inline int exit_code_for(const Summary& s)
{
    if (s.unconverged > 0) return exit_numerics;
    if (s.passed < s.total) return exit_violation;
    return exit_ok;
}

/// Executes one command; throws usage_error for invalid configurations.
inline RunOutcome run(const RunConfig& cfg)
{
    cfg.validate();
    RunOutcome res;
    json details = nullptr;
    switch (cfg.command) {
    case Command::constants: res.records = detail::run_constants(cfg, details); break;
    case Command::verify_hardy: res.records = detail::run_verify_hardy(cfg, details); break;
    case Command::verify_thm1: res.records = detail::run_verify_thm1(cfg); break;
    case Command::kernel_sup: res.records = detail::run_kernel_sup(cfg, details); break;
    case Command::toeplitz_check: res.records = detail::run_toeplitz_check(cfg, details); break;
    case Command::reconstruct_check: res.records = detail::run_reconstruct_check(cfg); break;
    case Command::extremal: res.records = detail::run_extremal(cfg, details); break;
    }

    const Summary sum = summarize(res.records);
    json recs = json::array();
    for (const auto& r : res.records) recs.push_back(to_json(r));
    res.report = json{{"command", to_string(cfg.command)},
                      {"config", detail::config_json(cfg)},
                      {"records", std::move(recs)},
                      {"summary", to_json(sum)}};
    if (!details.is_null()) res.report["details"] = std::move(details);

    res.exit_code = exit_code_for(sum);
    res.rendered = cfg.format == Format::json ? dump_report(res.report) : to_csv(res.records);
    return res;
}

} // namespace hardy

#endif // HARDY_RUNNER_HPP_
