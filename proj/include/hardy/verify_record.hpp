// Copyright 2026 The hardyverify Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDY_VERIFY_RECORD_HPP_
#define HARDY_VERIFY_RECORD_HPP_

#include <string>

namespace hardy
{
/// Relative slack granted to the right-hand side of every inequality check.
inline constexpr double verify_rel_slack = 1e-9;

/** @brief One inequality check lhs <= rhs with its provenance.
 *
 *  pass holds iff lhs <= rhs * (1 + 1e-9) + quad_err. A check whose
 *  quadrature did not converge keeps converged == false so that callers can
 *  report a numerics failure separately from a violated inequality.
 */
struct VerifyRecord
{
    std::string function_id;
    double eta_angle = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double quad_err = 0.0;
    bool pass = true;
    bool converged = true;

    friend bool operator==(const VerifyRecord&, const VerifyRecord&) = default;
};

inline bool passes(double lhs, double rhs, double quad_err) noexcept
{
    return lhs <= rhs * (1.0 + verify_rel_slack) + quad_err;
}

inline VerifyRecord make_record(std::string function_id, double eta_angle, double lhs,
                                double rhs, double quad_err, bool converged = true)
{
    return VerifyRecord{std::move(function_id), eta_angle,  lhs,
                        rhs,                    rhs - lhs,  quad_err,
                        passes(lhs, rhs, quad_err), converged};
}

} // namespace hardy

#endif // HARDY_VERIFY_RECORD_HPP_
