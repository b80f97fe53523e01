// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

// hardyverify: numerical checks of Hardy-space inequalities for CI.
//
// Usage
// -----
//   hardyverify <command> [options]
//
// Commands: constants, verify-hardy, verify-thm1, kernel-sup,
// toeplitz-check, reconstruct-check, extremal.
//
// Exit codes: 0 all checks pass, 1 inequality violated, 2 quadrature did not
// converge, 64 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/runner.hpp"

namespace
{
int run_main(int argc, char** argv)
{
    using namespace hardy;
    CLI::App app{"Numerical verification of Hardy-space inequalities", "hardyverify"};

    RunConfig cfg;
    std::string command;
    std::string format = "json";
    std::string out;
    std::string config_path;

    std::vector<std::string> names;
    for (auto [k, n] : command_names) names.emplace_back(n);
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));
    app.add_option("--spec", cfg.specs,
                   "Function spec: poly:a0,a1,... | logfam:N | random:degree,seed (repeatable)");
    app.add_option("--eta-grid", cfg.eta_grid, "Number of equispaced eta angles")->capture_default_str();
    app.add_option("--theta-grid", cfg.theta_grid, "Number of kernel angles in (0, pi]")->capture_default_str();
    app.add_option("--tol", cfg.tol, "Quadrature relative tolerance")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Corpus and search seed")->capture_default_str();
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--out", out, "Report path (default: stdout)");
    app.add_option("--budget", cfg.budget, "Objective evaluations for extremal")->capture_default_str();
    app.add_option("--family", cfg.family, "extremal family: monomials | logfam-span | free")->capture_default_str();
    app.add_option("--dim", cfg.dim, "extremal family size")->capture_default_str();
    app.add_option("--objective", cfg.objective, "extremal ratio: thm1 | hardy | toeplitz")->capture_default_str();
    app.add_option("--config", config_path, "Flat JSON file with defaults for the flags above");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        cfg.command = *parse_command(command);
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw usage_error("cannot open config file " + config_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw usage_error("config file " + config_path + ": " + e.what());
            }
            std::vector<std::string> given;
            for (const char* key : {"spec", "eta_grid", "theta_grid", "tol", "seed", "format", "out",
                                    "budget", "family", "dim", "objective"}) {
                std::string flag = "--" + std::string(key);
                for (auto& c : flag)
                    if (c == '_') c = '-';
                if (app.count(flag) > 0) given.emplace_back(key);
            }
            apply_config_json(cfg, j, given);
            if (app.count("--format") > 0) cfg.format = format == "csv" ? Format::csv : Format::json;
            if (app.count("--out") > 0) cfg.out = out;
        } else {
            cfg.format = format == "csv" ? Format::csv : Format::json;
            if (!out.empty()) cfg.out = out;
        }

        const RunOutcome res = run(cfg);
        if (cfg.out) {
            std::ofstream f(*cfg.out, std::ios::binary);
            if (!f) {
                std::cerr << "hardyverify: cannot write " << *cfg.out << "\n";
                return exit_usage;
            }
            f << res.rendered;
        } else {
            std::cout << res.rendered;
        }
        const auto s = summarize(res.records);
        std::cerr << "hardyverify " << command << ": " << s.passed << "/" << s.total << " passed";
        if (s.unconverged) std::cerr << ", " << s.unconverged << " unconverged";
        std::cerr << "\n";
        return res.exit_code;
    } catch (const usage_error& e) {
        std::cerr << "hardyverify: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "hardyverify: numerical failure: " << e.what() << "\n";
        return exit_numerics;
    }
}
} // namespace

int main(int argc, char** argv) { return run_main(argc, argv); }
