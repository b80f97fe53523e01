// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_REPORT_HPP_
#define HARDY_REPORT_HPP_

// JSON and CSV encodings of the verification results.
//
// JSON objects keep insertion order (nlohmann::ordered_json) and doubles are
// written in shortest round-trip form, so parsing a report and dumping it
// again reproduces it byte for byte.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/extremal.hpp"
#include "hardy/hardy_norms.hpp"
#include "hardy/verify_record.hpp"

namespace hardy
{
using json = nlohmann::ordered_json;

inline json to_json(const VerifyRecord& r)
{
    return json{{"function", r.function_id}, {"eta", r.eta_angle},   {"lhs", r.lhs},
                {"rhs", r.rhs},              {"margin", r.margin},   {"quad_err", r.quad_err},
                {"pass", r.pass},            {"converged", r.converged}};
}

inline VerifyRecord record_from_json(const json& j)
{
    VerifyRecord r;
    r.function_id = j.at("function").get<std::string>();
    r.eta_angle = j.at("eta").get<double>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.margin = j.at("margin").get<double>();
    r.quad_err = j.at("quad_err").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.converged = j.value("converged", true);
    return r;
}

inline json to_json(const NormReport& n)
{
    return json{{"hinf", n.hinf},
                {"h1_deriv", n.h1_deriv},
                {"hardy_sum", n.hardy_sum},
                {"quad_error", n.quad_error}};
}

inline json to_json(const SearchState& s)
{
    return json{{"family", s.family},
                {"best_params", s.params},
                {"objective", s.objective},
                {"ceiling", ratio_ceiling},
                {"converged", s.converged},
                {"trace_len", s.trace.size()}};
}

inline json toeplitz_summary_json(const std::string& f, double bound, double empirical_lb,
                                  const std::string& witness_h)
{
    return json{{"f", f}, {"bound", bound}, {"empirical_lb", empirical_lb}, {"witness_h", witness_h}};
}

struct Summary
{
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t unconverged = 0;
    double max_violation = 0.0; // largest lhs - rhs, floored at zero
};

inline Summary summarize(std::span<const VerifyRecord> records)
{
    Summary s;
    s.total = records.size();
    for (const auto& r : records) {
        if (r.pass) ++s.passed;
        if (!r.converged) ++s.unconverged;
        s.max_violation = std::max(s.max_violation, r.lhs - r.rhs);
    }
    return s;
}

inline json to_json(const Summary& s)
{
    return json{{"total", s.total},
                {"passed", s.passed},
                {"max_violation", s.max_violation},
                {"unconverged", s.unconverged}};
}

inline std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

namespace detail
{
inline std::string csv_number(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

inline std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
} // namespace detail

inline constexpr const char* csv_header = "function,eta,lhs,rhs,margin,quad_err,pass,converged";

/// One row per record under a fixed header; the function column is quoted.
inline std::string to_csv(std::span<const VerifyRecord> records)
{
    std::string out = std::string(csv_header) + "\n";
    for (const auto& r : records) {
        out += detail::csv_quote(r.function_id);
        for (double x : {r.eta_angle, r.lhs, r.rhs, r.margin, r.quad_err}) {
            out += ',';
            out += detail::csv_number(x);
        }
        out += r.pass ? ",true" : ",false";
        out += r.converged ? ",true\n" : ",false\n";
    }
    return out;
}

} // namespace hardy

#endif // HARDY_REPORT_HPP_
