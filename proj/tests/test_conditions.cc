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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "bellcone/bell.h"
#include "bellcone/conditions.h"
#include "bellcone/generators.h"
#include "bellcone/matrices.h"
#include "bellcone/numlin.h"
#include "test_helpers.h"

using namespace bellcone;
using bellcone::testing::random_local_behaviour;
using bellcone::testing::random_matrix;
using bellcone::testing::random_ns_behaviour;

namespace {

const double kRoot2 = std::sqrt(2.0);

void check_report_consistency(const ConditionReport &r) {
    CHECK(r.margin == doctest::Approx(r.bound - r.measured).epsilon(1e-12));
    CHECK(r.satisfied == (r.margin >= -r.tol));
}

BellExpression random_expression(std::mt19937_64 &rng, const Scenario &s) {
    return make_expression(s, random_matrix(rng, s.n_a(), s.n_b()));
}

}  // namespace

TEST_CASE("condition tokens round trip") {
    std::vector<ConditionId> ids = {
        ConditionId::trace_norm_p,    ConditionId::trace_norm_centered,
        ConditionId::functional_p,    ConditionId::functional_centered,
        ConditionId::corr_norm,       ConditionId::corr_functional,
        ConditionId::corr_norm_centered, ConditionId::corr_functional_centered};
    for (ConditionId id : ids) {
        auto token = condition_token(id);
        auto back = condition_from_token(token);
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(condition_token(ConditionId::trace_norm_p) == "thm1");
    CHECK(condition_token(ConditionId::trace_norm_centered) == "thm2");
    CHECK(condition_token(ConditionId::functional_p) == "ineq2");
    CHECK(condition_token(ConditionId::functional_centered) == "ineq4");
    CHECK(condition_token(ConditionId::corr_norm) == "corr-norm");
    CHECK(condition_token(ConditionId::corr_functional) == "corr-epping");
    CHECK(condition_token(ConditionId::corr_norm_centered) == "thm8");
    CHECK(condition_token(ConditionId::corr_functional_centered) == "ineq15");
    CHECK_FALSE(condition_from_token("thm3").has_value());

    CHECK(condition_needs_expression(ConditionId::functional_p));
    CHECK(condition_needs_expression(ConditionId::corr_functional_centered));
    CHECK_FALSE(condition_needs_expression(ConditionId::trace_norm_p));
    CHECK(condition_uses_correlators(ConditionId::corr_norm));
    CHECK_FALSE(condition_uses_correlators(ConditionId::functional_centered));
}

TEST_CASE("trace norm condition on the standard behaviours") {
    LdbFamily family(Scenario(2, 2, 2, 2));
    for (std::uint64_t i = 0; i < family.size(); ++i) {
        ConditionReport r = check_trace_norm_bound(family.behaviour(i));
        check_report_consistency(r);
        CHECK(r.bound == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(std::abs(r.margin) < 1e-9);
        CHECK(r.satisfied);
    }

    ConditionReport pr = check_trace_norm_bound(pr_box_2d(2));
    check_report_consistency(pr);
    CHECK(pr.measured == doctest::Approx(1.0 + kRoot2).epsilon(1e-12));
    CHECK(pr.bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(pr.satisfied);

    ConditionReport maxent = check_trace_norm_bound(max_ent_behaviour(5));
    CHECK(maxent.measured == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(maxent.satisfied);
}

TEST_CASE("centered trace norm condition on the standard behaviours") {
    ConditionReport mixed = check_centered_trace_norm_bound(fully_mixed(Scenario(2, 2, 2, 2)));
    check_report_consistency(mixed);
    CHECK(mixed.measured == 0.0);
    CHECK(mixed.bound == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mixed.satisfied);

    LdbFamily family(Scenario(2, 2, 2, 2));
    for (std::uint64_t i = 0; i < family.size(); i += 3) {
        ConditionReport det = check_centered_trace_norm_bound(family.behaviour(i));
        CHECK(std::abs(det.measured) < 1e-12);
        CHECK(std::abs(det.bound) < 1e-12);
        CHECK(det.satisfied);
    }

    // The centered box matrix is a quarter of a Kronecker product of two
    // Hadamard-type matrices, so its trace norm is exactly sqrt 2.
    ConditionReport pr = check_centered_trace_norm_bound(pr_box_2d(2));
    CHECK(pr.measured == doctest::Approx(kRoot2).epsilon(1e-12));
    CHECK(pr.bound == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(pr.satisfied);
}

TEST_CASE("raw functional bounds depend only on the expression") {
    CHECK(bound_raw_functional(chsh_expression()) ==
          doctest::Approx(4.0 * kRoot2).epsilon(1e-12));
    CHECK(bound_raw_functional(chsh_shifted_expression()) == doctest::Approx(2.0).epsilon(1e-12));

    BellExpression zero = make_expression(Scenario(2, 2, 2, 2),
                                          Eigen::MatrixXd::Zero(4, 4), "zero");
    CHECK(bound_raw_functional(zero) == 0.0);
}

TEST_CASE("raw functional reports on the box and the noisy box") {
    Behaviour pr = pr_box_2d(2);
    ConditionReport loose = raw_functional_report(pr, chsh_expression());
    check_report_consistency(loose);
    CHECK(loose.measured == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(loose.bound == doctest::Approx(4.0 * kRoot2).epsilon(1e-12));
    CHECK(loose.satisfied);

    ConditionReport tight = raw_functional_report(pr, chsh_shifted_expression());
    CHECK(tight.measured == doctest::Approx(1.0 + kRoot2).epsilon(1e-12));
    CHECK(tight.bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(tight.satisfied);

    double v = 1.0 / kRoot2;
    std::vector<Behaviour> parts{pr, fully_mixed(pr.scenario())};
    std::vector<double> weights{v, 1.0 - v};
    ConditionReport critical = raw_functional_report(mix(weights, parts),
                                                     chsh_shifted_expression());
    CHECK(std::abs(critical.margin) < 1e-12);
    CHECK(critical.satisfied);

    BellExpression wrong = make_expression(Scenario(3, 2, 2, 2), Eigen::MatrixXd::Zero(6, 4));
    CHECK_THROWS_AS(raw_functional_report(pr, wrong), std::invalid_argument);
}

TEST_CASE("centered functional reports") {
    BellExpression zero = make_expression(Scenario(2, 2, 2, 2), Eigen::MatrixXd::Zero(4, 4));
    ConditionReport z = centered_functional_report(fully_mixed(Scenario(2, 2, 2, 2)), zero);
    check_report_consistency(z);
    CHECK(z.measured == 0.0);
    CHECK(z.bound == 0.0);
    CHECK(z.satisfied);

    ConditionReport mixed = centered_functional_report(fully_mixed(Scenario(2, 2, 2, 2)),
                                                       chsh_expression());
    CHECK(mixed.measured == 0.0);
    CHECK(mixed.bound == doctest::Approx(2.0 * kRoot2).epsilon(1e-12));
    CHECK(mixed.satisfied);

    // On the expression its own centered matrix saturates, the centered
    // functional check coincides with the centered trace norm check.
    Behaviour pr = pr_box_2d(2);
    BellExpression extremal = extremal_bell_from(centered_matrix(pr));
    ConditionReport functional = centered_functional_report(pr, extremal);
    ConditionReport norm = check_centered_trace_norm_bound(pr);
    CHECK(functional.measured == doctest::Approx(norm.measured).epsilon(1e-10));
    CHECK(functional.bound == doctest::Approx(norm.bound).epsilon(1e-10));
    CHECK_FALSE(functional.satisfied);

    BellExpression wrong = make_expression(Scenario(3, 2, 2, 2), Eigen::MatrixXd::Zero(6, 4));
    CHECK_THROWS_AS(centered_functional_report(pr, wrong), std::invalid_argument);
}

TEST_CASE("correlator norm conditions") {
    ConditionReport pr = check_correlator_norm_bound(pr_box_2d(2));
    check_report_consistency(pr);
    CHECK(pr.measured == doctest::Approx(2.0 * kRoot2).epsilon(1e-12));
    CHECK(pr.bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(pr.satisfied);

    double v = 1.0 / kRoot2;
    std::vector<Behaviour> parts{pr_box_2d(2), fully_mixed(Scenario(2, 2, 2, 2))};
    std::vector<double> weights{v, 1.0 - v};
    ConditionReport critical = check_correlator_norm_bound(mix(weights, parts));
    CHECK(std::abs(critical.margin) < 1e-12);
    CHECK(critical.satisfied);

    LdbFamily family(Scenario(2, 2, 2, 2));
    for (std::uint64_t i = 0; i < family.size(); i += 5) {
        ConditionReport centered = check_centered_correlator_norm_bound(family.behaviour(i));
        check_report_consistency(centered);
        CHECK(std::abs(centered.measured) < 1e-12);
        CHECK(std::abs(centered.bound) < 1e-12);
        CHECK(centered.satisfied);
    }

    ConditionReport mixed = check_centered_correlator_norm_bound(fully_mixed(Scenario(2, 2, 2, 2)));
    CHECK(mixed.measured == 0.0);
    CHECK(mixed.bound == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(check_correlator_norm_bound(pr_box_2d(3)), std::invalid_argument);
}

TEST_CASE("correlator functional conditions") {
    Eigen::MatrixXd chsh_coeffs(2, 2);
    chsh_coeffs << 1.0, 1.0, 1.0, -1.0;
    CHECK(bound_correlator_functional(chsh_coeffs) ==
          doctest::Approx(2.0 * kRoot2).epsilon(1e-12));

    ConditionReport pr = correlator_functional_report(pr_box_2d(2), chsh_coeffs);
    check_report_consistency(pr);
    CHECK(pr.measured == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_FALSE(pr.satisfied);

    double v = 1.0 / kRoot2;
    std::vector<Behaviour> parts{pr_box_2d(2), fully_mixed(Scenario(2, 2, 2, 2))};
    std::vector<double> weights{v, 1.0 - v};
    ConditionReport critical = correlator_functional_report(mix(weights, parts), chsh_coeffs);
    CHECK(std::abs(critical.margin) < 1e-12);

    ConditionReport centered = centered_correlator_functional_report(
        fully_mixed(Scenario(2, 2, 2, 2)), chsh_coeffs);
    check_report_consistency(centered);
    CHECK(centered.measured == 0.0);
    CHECK(centered.bound == doctest::Approx(2.0 * kRoot2).epsilon(1e-12));
    CHECK(centered.satisfied);

    Eigen::MatrixXd wrong = Eigen::MatrixXd::Zero(3, 2);
    CHECK_THROWS_AS(correlator_functional_report(pr_box_2d(2), wrong), std::invalid_argument);
}

TEST_CASE("witness pair ties the correlator norm to the trace norm") {
    TraceCorrelatorWitness pr = trace_norm_correlator_witness(pr_box_2d(2));
    CHECK(pr.trace_norm_p == doctest::Approx(1.0 + kRoot2).epsilon(1e-12));
    CHECK(pr.correlator_rhs == doctest::Approx(1.0 + kRoot2).epsilon(1e-12));

    TraceCorrelatorWitness mixed = trace_norm_correlator_witness(fully_mixed(Scenario(2, 2, 2, 2)));
    CHECK(mixed.trace_norm_p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mixed.correlator_rhs == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(83);
    for (const Scenario &s : {Scenario(2, 2, 2, 2), Scenario(3, 3, 2, 2)}) {
        Behaviour box = s.m_a == 2 ? pr_box_2d(2) : pr_box_mm22_lift(s.m_a);
        for (int trial = 0; trial < 500; ++trial) {
            Behaviour b = random_ns_behaviour(rng, s, box);
            TraceCorrelatorWitness w = trace_norm_correlator_witness(b);
            CHECK(w.trace_norm_p >= w.correlator_rhs - 1e-9);
        }
    }
}

TEST_CASE("a correlator norm violation forces a trace norm violation") {
    std::mt19937_64 rng(89);
    int violations_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Scenario s = (trial % 3 == 0) ? Scenario(3, 3, 2, 2) : Scenario(2, 2, 2, 2);
        Behaviour box = s.m_a == 2 ? pr_box_2d(2) : pr_box_mm22_lift(s.m_a);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double v = unit(rng);
        std::vector<Behaviour> parts{box, random_local_behaviour(rng, s)};
        std::vector<double> weights{v, 1.0 - v};
        Behaviour b = mix(weights, parts);
        ConditionReport corr = check_correlator_norm_bound(b);
        if (corr.margin < -1e-6) {
            ++violations_seen;
            ConditionReport trace = check_trace_norm_bound(b);
            CHECK(trace.margin < 1e-9);
        }
    }
    CHECK(violations_seen > 10);
}

TEST_CASE("dual certificate for the shifted expression") {
    DualCertificate cert = dual_certificate(chsh_shifted_expression());
    CHECK(cert.min_eig >= -1e-10);
    CHECK(cert.feasible());
    CHECK(cert.objective == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(cert.x.size() == 8);
    CHECK((cert.x.array() - 0.5).abs().maxCoeff() < 1e-12);
}

TEST_CASE("dual certificate of the zero expression") {
    BellExpression zero = make_expression(Scenario(2, 2, 2, 2), Eigen::MatrixXd::Zero(4, 4));
    DualCertificate cert = dual_certificate(zero);
    CHECK(cert.objective == 0.0);
    CHECK(cert.min_eig >= -1e-12);
    CHECK(cert.feasible());
}

TEST_CASE("random dual certificates are feasible and certify the bounds") {
    std::mt19937_64 rng(97);
    std::vector<Scenario> scenarios = {Scenario(2, 2, 2, 2), Scenario(3, 3, 2, 2),
                                       Scenario(2, 2, 3, 3), Scenario(3, 3, 3, 3)};
    for (int trial = 0; trial < 200; ++trial) {
        const Scenario &s = scenarios[trial % scenarios.size()];
        BellExpression g = random_expression(rng, s);
        DualCertificate cert = dual_certificate(g);
        CHECK(cert.min_eig >= -1e-9);
        double expected = spectral_norm(g.coeffs) * std::sqrt(static_cast<double>(s.m_a) * s.m_b);
        CHECK(cert.objective == doctest::Approx(expected).epsilon(1e-9));

        Behaviour b = random_local_behaviour(rng, s);
        MarginalVectors marg = marginal_vectors(b);
        Eigen::VectorXd stacked(s.n_a() + s.n_b());
        stacked << marg.alice, marg.bob;
        // The multiplier vector scores every normalized behaviour's marginals
        // the same way, which is exactly why the bound is behaviour-free.
        CHECK(cert.x.dot(stacked) == doctest::Approx(cert.objective).epsilon(1e-9));

        DualCertificate centered = dual_certificate_centered(b, g);
        CHECK(centered.min_eig >= -1e-9);
        ConditionReport report = centered_functional_report(b, g);
        CHECK(centered.objective == doctest::Approx(report.bound).epsilon(1e-9));
        Eigen::VectorXd centered_stack = stacked - stacked.cwiseProduct(stacked);
        CHECK(centered.x.dot(centered_stack) ==
              doctest::Approx(centered.objective).epsilon(1e-9));
    }
}
