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

#include "bellcone/conditions.h"

#include <cmath>
#include <stdexcept>

#include "bellcone/matrices.h"
#include "bellcone/numlin.h"

namespace bellcone {

namespace {

ConditionReport make_report(ConditionId id, double measured, double bound, double tol) {
    ConditionReport r;
    r.id = id;
    r.measured = measured;
    r.bound = bound;
    r.margin = bound - measured;
    r.tol = tol;
    r.satisfied = r.margin >= -tol;
    return r;
}

double root_mm(const Scenario &s) {
    return std::sqrt(static_cast<double>(s.m_a) * s.m_b);
}

/// The two marginal-correction terms of the centered bounds:
/// (1/2) sqrt(m_b/m_a) sum p(a|x)^2 and (1/2) sqrt(m_a/m_b) sum p(b|y)^2.
std::pair<double, double> centered_corrections(const Behaviour &b) {
    const Scenario &s = b.scenario();
    MarginalVectors marg = marginal_vectors(b);
    double sum_a = marg.alice.squaredNorm();
    double sum_b = marg.bob.squaredNorm();
    double ma = s.m_a, mb = s.m_b;
    return {0.5 * std::sqrt(mb / ma) * sum_a, 0.5 * std::sqrt(ma / mb) * sum_b};
}

/// Same corrections in the correlator picture, using mean outcomes.
std::pair<double, double> correlator_corrections(const CorrelatorSummary &c, const Scenario &s) {
    double sum_a = c.alice_mean.squaredNorm();
    double sum_b = c.bob_mean.squaredNorm();
    double ma = s.m_a, mb = s.m_b;
    return {0.5 * std::sqrt(mb / ma) * sum_a, 0.5 * std::sqrt(ma / mb) * sum_b};
}

void require_correlator_coeffs(const Eigen::MatrixXd &coeffs, const Scenario &s) {
    if (coeffs.rows() != s.m_a || coeffs.cols() != s.m_b) {
        throw std::invalid_argument("correlator coefficients must be one value per input pair");
    }
}

}  // namespace

std::string_view condition_token(ConditionId id) {
    switch (id) {
        case ConditionId::trace_norm_p:
            return "thm1";
        case ConditionId::trace_norm_centered:
            return "thm2";
        case ConditionId::functional_p:
            return "ineq2";
        case ConditionId::functional_centered:
            return "ineq4";
        case ConditionId::corr_norm:
            return "corr-norm";
        case ConditionId::corr_functional:
            return "corr-epping";
        case ConditionId::corr_norm_centered:
            return "thm8";
        case ConditionId::corr_functional_centered:
            return "ineq15";
    }
    return "unknown";
}

std::optional<ConditionId> condition_from_token(std::string_view token) {
    for (ConditionId id : {
             ConditionId::trace_norm_p,
             ConditionId::trace_norm_centered,
             ConditionId::functional_p,
             ConditionId::functional_centered,
             ConditionId::corr_norm,
             ConditionId::corr_functional,
             ConditionId::corr_norm_centered,
             ConditionId::corr_functional_centered,
         }) {
        if (condition_token(id) == token) return id;
    }
    return std::nullopt;
}

bool condition_needs_expression(ConditionId id) {
    switch (id) {
        case ConditionId::functional_p:
        case ConditionId::functional_centered:
        case ConditionId::corr_functional:
        case ConditionId::corr_functional_centered:
            return true;
        default:
            return false;
    }
}

bool condition_uses_correlators(ConditionId id) {
    switch (id) {
        case ConditionId::corr_norm:
        case ConditionId::corr_functional:
        case ConditionId::corr_norm_centered:
        case ConditionId::corr_functional_centered:
            return true;
        default:
            return false;
    }
}

ConditionReport check_trace_norm_bound(const Behaviour &b, double tol) {
    double measured = trace_norm(input_major_matrix(b).data);
    return make_report(ConditionId::trace_norm_p, measured, root_mm(b.scenario()), tol);
}

ConditionReport check_centered_trace_norm_bound(const Behaviour &b, double tol) {
    double measured = trace_norm(centered_matrix(b).data);
    auto [corr_a, corr_b] = centered_corrections(b);
    const Scenario &s = b.scenario();
    double bound = root_mm(s) - corr_a - corr_b;
    return make_report(ConditionId::trace_norm_centered, measured, bound, tol);
}

ConditionReport check_correlator_norm_bound(const Behaviour &b, double tol) {
    CorrelatorSummary c = correlators(b);
    return make_report(ConditionId::corr_norm, trace_norm(c.joint), root_mm(b.scenario()), tol);
}

ConditionReport check_centered_correlator_norm_bound(const Behaviour &b, double tol) {
    CorrelatorSummary c = correlators(b);
    auto [corr_a, corr_b] = correlator_corrections(c, b.scenario());
    double bound = root_mm(b.scenario()) - corr_a - corr_b;
    return make_report(ConditionId::corr_norm_centered, trace_norm(c.centered), bound, tol);
}

double bound_raw_functional(const BellExpression &g) {
    return spectral_norm(g.coeffs) * root_mm(g.scenario);
}

ConditionReport raw_functional_report(const Behaviour &b, const BellExpression &g, double tol) {
    return make_report(ConditionId::functional_p, evaluate(g, b), bound_raw_functional(g), tol);
}

ConditionReport centered_functional_report(const Behaviour &b, const BellExpression &g,
                                           double tol) {
    if (!(g.scenario == b.scenario())) {
        throw std::invalid_argument("expression scenario " + g.scenario.str() +
                                    " does not match behaviour scenario " + b.scenario().str());
    }
    double measured = centered_matrix(b).data.cwiseProduct(g.coeffs).sum();
    auto [corr_a, corr_b] = centered_corrections(b);
    double norm_g = spectral_norm(g.coeffs);
    double bound = norm_g * (root_mm(g.scenario) - corr_a - corr_b);
    return make_report(ConditionId::functional_centered, measured, bound, tol);
}

double bound_correlator_functional(const Eigen::MatrixXd &coeffs) {
    return spectral_norm(coeffs) *
           std::sqrt(static_cast<double>(coeffs.rows()) * coeffs.cols());
}

ConditionReport correlator_functional_report(const Behaviour &b, const Eigen::MatrixXd &coeffs,
                                             double tol) {
    require_correlator_coeffs(coeffs, b.scenario());
    CorrelatorSummary c = correlators(b);
    double measured = coeffs.cwiseProduct(c.joint).sum();
    return make_report(ConditionId::corr_functional, measured, bound_correlator_functional(coeffs),
                       tol);
}

ConditionReport centered_correlator_functional_report(const Behaviour &b,
                                                      const Eigen::MatrixXd &coeffs, double tol) {
    require_correlator_coeffs(coeffs, b.scenario());
    CorrelatorSummary c = correlators(b);
    double measured = coeffs.cwiseProduct(c.centered).sum();
    auto [corr_a, corr_b] = correlator_corrections(c, b.scenario());
    double norm_g = spectral_norm(coeffs);
    double bound = norm_g * (root_mm(b.scenario()) - corr_a - corr_b);
    return make_report(ConditionId::corr_functional_centered, measured, bound, tol);
}

TraceCorrelatorWitness trace_norm_correlator_witness(const Behaviour &b) {
    CorrelatorSummary c = correlators(b);
    TraceCorrelatorWitness w;
    w.trace_norm_p = trace_norm(input_major_matrix(b).data);
    w.correlator_rhs = 0.5 * (root_mm(b.scenario()) + trace_norm(c.joint));
    return w;
}

namespace {

/// Shared core of both certificates: the multiplier vector and the smallest
/// eigenvalue of diag(x) - W/2.
DualCertificate certificate_core(const BellExpression &g) {
    const Scenario &s = g.scenario;
    const int n_a = s.n_a(), n_b = s.n_b();
    double norm_g = spectral_norm(g.coeffs);
    double ma = s.m_a, mb = s.m_b;

    DualCertificate cert;
    cert.x.resize(n_a + n_b);
    cert.x.head(n_a).setConstant(0.5 * norm_g * std::sqrt(mb / ma));
    cert.x.tail(n_b).setConstant(0.5 * norm_g * std::sqrt(ma / mb));

    Eigen::MatrixXd slack = Eigen::MatrixXd::Zero(n_a + n_b, n_a + n_b);
    slack.diagonal() = cert.x;
    slack.block(0, n_a, n_a, n_b) = -0.5 * g.coeffs;
    slack.block(n_a, 0, n_b, n_a) = -0.5 * g.coeffs.transpose();
    cert.min_eig = min_eigenvalue_symmetric(slack);
    return cert;
}

}  // namespace

DualCertificate dual_certificate(const BellExpression &g) {
    DualCertificate cert = certificate_core(g);
    // x dotted with the stacked marginals: each party's marginals sum to its
    // input count, so the objective is norm-independent of the behaviour.
    cert.objective = bound_raw_functional(g);
    return cert;
}

DualCertificate dual_certificate_centered(const Behaviour &b, const BellExpression &g) {
    if (!(g.scenario == b.scenario())) {
        throw std::invalid_argument("expression scenario " + g.scenario.str() +
                                    " does not match behaviour scenario " + b.scenario().str());
    }
    DualCertificate cert = certificate_core(g);
    MarginalVectors marg = marginal_vectors(b);
    const int n_a = g.scenario.n_a();
    Eigen::VectorXd stacked(cert.x.size());
    stacked.head(n_a) = marg.alice - marg.alice.cwiseProduct(marg.alice);
    stacked.tail(cert.x.size() - n_a) = marg.bob - marg.bob.cwiseProduct(marg.bob);
    cert.objective = cert.x.dot(stacked);
    return cert;
}

}  // namespace bellcone
