// Copyright 2026 The Bellcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLCONE_CONDITIONS_H
#define BELLCONE_CONDITIONS_H

#include <Eigen/Dense>
#include <optional>
#include <string_view>

#include "bellcone/behaviour.h"
#include "bellcone/bell.h"

namespace bellcone {

/// Default tolerance for condition margins, independent of the validation
/// tolerance.
inline constexpr double kDefaultConditionTol = 1e-9;

/// The necessary conditions for quantum realizability implemented here. Every
/// one is an inequality measured <= bound that all quantum behaviours satisfy,
/// so a violation certifies non-membership in the quantum set.
enum class ConditionId {
    trace_norm_p,                   // ||P||_1 <= sqrt(m_a m_b)
    trace_norm_centered,            // same for the centered arrangement
    functional_p,                   // <P, G> <= ||G||_inf sqrt(m_a m_b)
    functional_centered,            // <M, G> <= marginal-corrected bound
    corr_norm,                      // ||C||_1 <= sqrt(m_a m_b)
    corr_functional,                // sum g_xy C_xy <= ||g||_inf sqrt(m_a m_b)
    corr_norm_centered,             // same for C_xy - <A_x><B_y>
    corr_functional_centered,       // centered correlator functional bound
};

/// Wire token used by the CLI and report output ("thm1", "ineq4", ...).
std::string_view condition_token(ConditionId id);
std::optional<ConditionId> condition_from_token(std::string_view token);
bool condition_needs_expression(ConditionId id);
bool condition_uses_correlators(ConditionId id);

struct ConditionReport {
    ConditionId id;
    double measured = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // bound - measured
    double tol = kDefaultConditionTol;
    bool satisfied = true;  // margin >= -tol
};

// Norm conditions on the behaviour alone.
ConditionReport check_trace_norm_bound(const Behaviour &b, double tol = kDefaultConditionTol);
ConditionReport check_centered_trace_norm_bound(const Behaviour &b,
                                                double tol = kDefaultConditionTol);
// Two-outcome correlator versions.
ConditionReport check_correlator_norm_bound(const Behaviour &b, double tol = kDefaultConditionTol);
ConditionReport check_centered_correlator_norm_bound(const Behaviour &b,
                                                     double tol = kDefaultConditionTol);

// Functional bounds for a fixed expression. The raw bound depends only on
// the expression; the centered variants subtract marginal corrections and so
// need the behaviour as well.
double bound_raw_functional(const BellExpression &g);
ConditionReport raw_functional_report(const Behaviour &b, const BellExpression &g,
                                      double tol = kDefaultConditionTol);
ConditionReport centered_functional_report(const Behaviour &b, const BellExpression &g,
                                           double tol = kDefaultConditionTol);

// Correlator-space functionals: coeffs is an m_a x m_b matrix applied to the
// correlator table.
double bound_correlator_functional(const Eigen::MatrixXd &coeffs);
ConditionReport correlator_functional_report(const Behaviour &b, const Eigen::MatrixXd &coeffs,
                                             double tol = kDefaultConditionTol);
ConditionReport centered_correlator_functional_report(const Behaviour &b,
                                                      const Eigen::MatrixXd &coeffs,
                                                      double tol = kDefaultConditionTol);

/// Two-outcome witness pair: the behaviour matrix trace norm on the left and
/// (sqrt(m_a m_b) + ||C||_1) / 2 on the right; lhs >= rhs for every
/// normalized behaviour, so a correlator-norm violation forces a trace-norm
/// violation.
struct TraceCorrelatorWitness {
    double trace_norm_p = 0.0;
    double correlator_rhs = 0.0;
};

TraceCorrelatorWitness trace_norm_correlator_witness(const Behaviour &b);

/// Feasible point of the dual semidefinite program certifying the functional
/// bound: x weights the marginal-sum constraints, min_eig is the smallest
/// eigenvalue of diag(x) - W/2 with W = [[0, G], [G^T, 0]] (nonnegative means
/// feasible), and objective is the certified bound.
struct DualCertificate {
    Eigen::VectorXd x;
    double min_eig = 0.0;
    double objective = 0.0;

    bool feasible(double tol = kDefaultConditionTol) const { return min_eig >= -tol; }
};

/// Certificate for the raw functional bound; its objective is
/// ||G||_inf sqrt(m_a m_b) for every normalized behaviour.
DualCertificate dual_certificate(const BellExpression &g);

/// Certificate for the centered functional bound; the same multiplier vector
/// scores x^T (p_a - p_a^2; p_b - p_b^2), reproducing the marginal-corrected
/// bound for the given behaviour.
DualCertificate dual_certificate_centered(const Behaviour &b, const BellExpression &g);

}  // namespace bellcone

#endif
