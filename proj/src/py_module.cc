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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bellcone/behaviour.h"
#include "bellcone/bell.h"
#include "bellcone/closed_forms.h"
#include "bellcone/conditions.h"
#include "bellcone/generators.h"
#include "bellcone/io.h"
#include "bellcone/matrices.h"
#include "bellcone/numlin.h"
#include "bellcone/scenario.h"
#include "bellcone/slice.h"

namespace py = pybind11;
using namespace bellcone;

namespace {

std::vector<std::string> violation_strings(const ValidationReport &report) {
    std::vector<std::string> out;
    out.reserve(report.violations.size());
    for (const Violation &v : report.violations) out.push_back(v.describe());
    return out;
}

ConditionId condition_id_from_token(const std::string &token) {
    std::optional<ConditionId> id = condition_from_token(token);
    if (!id) throw std::invalid_argument("unknown condition token \"" + token + "\"");
    return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Block-matrix analysis of bipartite Bell-scenario behaviours";
    m.attr("DEFAULT_TOL") = kDefaultConditionTol;

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<int, int, int, int>(), py::arg("m_a"), py::arg("m_b"), py::arg("d_a"),
             py::arg("d_b"))
        .def_readonly("m_a", &Scenario::m_a)
        .def_readonly("m_b", &Scenario::m_b)
        .def_readonly("d_a", &Scenario::d_a)
        .def_readonly("d_b", &Scenario::d_b)
        .def("n_a", &Scenario::n_a)
        .def("n_b", &Scenario::n_b)
        .def("two_outcome", &Scenario::two_outcome)
        .def("symmetric", &Scenario::symmetric)
        .def("__eq__", [](const Scenario &a, const Scenario &b) { return a == b; })
        .def("__repr__", [](const Scenario &s) { return "Scenario" + s.str(); });

    py::class_<Behaviour>(m, "Behaviour")
        .def_static("from_flat", &Behaviour::from_flat, py::arg("scenario"), py::arg("values"))
        .def_property_readonly("scenario", &Behaviour::scenario)
        .def(
            "prob",
            [](const Behaviour &b, int x, int y, int a, int bo) { return b(x, y, a, bo); },
            py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"))
        .def("flat",
             [](const Behaviour &b) {
                 return std::vector<double>(b.flat().begin(), b.flat().end());
             })
        .def("__eq__", [](const Behaviour &a, const Behaviour &b) { return a == b; });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_property_readonly("valid", &ValidationReport::valid)
        .def_property_readonly("violations", &violation_strings)
        .def_readonly("tol", &ValidationReport::tol);

    m.def("validate", &validate, py::arg("behaviour"), py::arg("tol") = kDefaultValidationTol);

    py::enum_<MatrixKind>(m, "MatrixKind")
        .value("input_major", MatrixKind::input_major)
        .value("output_major", MatrixKind::output_major)
        .value("centered", MatrixKind::centered);

    py::class_<BehaviourMatrix>(m, "BehaviourMatrix")
        .def_readonly("kind", &BehaviourMatrix::kind)
        .def_readonly("scenario", &BehaviourMatrix::scenario)
        .def_readonly("data", &BehaviourMatrix::data);

    m.def("input_major_matrix", [](const Behaviour &b) { return input_major_matrix(b).data; });
    m.def("output_major_matrix", [](const Behaviour &b) { return output_major_matrix(b).data; });
    m.def("centered_matrix", [](const Behaviour &b) { return centered_matrix(b).data; });
    m.def("behaviour_matrix", &behaviour_matrix, py::arg("behaviour"), py::arg("kind"));

    py::class_<MarginalVectors>(m, "MarginalVectors")
        .def_readonly("alice", &MarginalVectors::alice)
        .def_readonly("bob", &MarginalVectors::bob);
    m.def("marginal_vectors", &marginal_vectors);

    py::class_<CorrelatorSummary>(m, "CorrelatorSummary")
        .def_readonly("joint", &CorrelatorSummary::joint)
        .def_readonly("alice_mean", &CorrelatorSummary::alice_mean)
        .def_readonly("bob_mean", &CorrelatorSummary::bob_mean)
        .def_readonly("centered", &CorrelatorSummary::centered);
    m.def("correlators", &correlators);
    m.def("behaviour_from_correlators", &behaviour_from_correlators, py::arg("scenario"),
          py::arg("summary"));

    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("values", &SpectrumResult::values)
        .def_readonly("residual", &SpectrumResult::residual);
    m.def("singular_values", &singular_values, py::arg("matrix"), py::arg("tol") = 1e-10);
    m.def("trace_norm", &trace_norm);
    m.def("spectral_norm", &spectral_norm);
    m.def("frobenius_norm", &frobenius_norm);
    m.def("min_eigenvalue_symmetric", &min_eigenvalue_symmetric);
    m.def("circulant_eigenvalues", &circulant_eigenvalues);
    m.def("circulant_from_first_row", &circulant_from_first_row);
    m.def("pinching_lower_bound", &pinching_lower_bound, py::arg("matrix"),
          py::arg("row_block_sizes"), py::arg("col_block_sizes"));

    py::class_<LdbAssignment>(m, "LdbAssignment")
        .def_readonly("alice", &LdbAssignment::alice)
        .def_readonly("bob", &LdbAssignment::bob);
    py::class_<LdbFamily>(m, "LdbFamily")
        .def(py::init<const Scenario &>(), py::arg("scenario"))
        .def("size", &LdbFamily::size)
        .def("assignment", &LdbFamily::assignment, py::arg("index"))
        .def("behaviour", &LdbFamily::behaviour, py::arg("index"));
    m.def("pr_box_2d", py::overload_cast<int>(&pr_box_2d), py::arg("d"));
    m.def("pr_box_2d", py::overload_cast<int, const Scenario &>(&pr_box_2d), py::arg("d"),
          py::arg("scenario"));
    m.def("pr_box_mm22_lift", &pr_box_mm22_lift, py::arg("m"));
    m.def("max_ent_behaviour", &max_ent_behaviour, py::arg("d"));
    m.def("fully_mixed", &fully_mixed, py::arg("scenario"));
    m.def(
        "mix",
        [](const std::vector<double> &weights, const std::vector<Behaviour> &components,
           bool allow_signed) { return mix(weights, components, allow_signed); },
        py::arg("weights"), py::arg("components"), py::arg("allow_signed") = false);

    py::class_<BellExpression>(m, "BellExpression")
        .def_readonly("scenario", &BellExpression::scenario)
        .def_readonly("coeffs", &BellExpression::coeffs)
        .def_readonly("name", &BellExpression::name);
    m.def("make_expression", &make_expression, py::arg("scenario"), py::arg("coeffs"),
          py::arg("name") = "");
    m.def("evaluate", &evaluate, py::arg("expression"), py::arg("behaviour"));
    m.def("local_bound", &local_bound);
    m.def("extremal_bell_from", &extremal_bell_from, py::arg("matrix"));
    m.def("chsh_expression", &chsh_expression);
    m.def("chsh_shifted_expression", &chsh_shifted_expression);
    m.def("phi3_expression", &phi3_expression);
    m.def("expression_by_name", &expression_by_name, py::arg("name"));

    py::class_<AffineForm>(m, "AffineForm")
        .def(py::init([](Eigen::MatrixXd offsets, double scale) {
                 AffineForm f;
                 f.block_offsets = std::move(offsets);
                 f.scale = scale;
                 return f;
             }),
             py::arg("block_offsets"), py::arg("scale") = 1.0)
        .def_readonly("block_offsets", &AffineForm::block_offsets)
        .def_readonly("scale", &AffineForm::scale);
    m.def("affine_apply", &affine_apply, py::arg("expression"), py::arg("form"));
    m.def("tsirelson_bound_via", &tsirelson_bound_via, py::arg("form"), py::arg("expression"));
    m.def(
        "tsirelson_bound_search",
        [](const BellExpression &g, int random_offsets, std::uint64_t seed) {
            TsirelsonSearchSpec spec;
            spec.random_offsets = random_offsets;
            spec.seed = seed;
            TsirelsonSearchResult r = tsirelson_bound_search(g, spec);
            return py::make_tuple(r.bound, r.form);
        },
        py::arg("expression"), py::arg("random_offsets") = 0, py::arg("seed") = 0);

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_property_readonly(
            "condition", [](const ConditionReport &r) { return std::string(condition_token(r.id)); })
        .def_readonly("measured", &ConditionReport::measured)
        .def_readonly("bound", &ConditionReport::bound)
        .def_readonly("margin", &ConditionReport::margin)
        .def_readonly("tol", &ConditionReport::tol)
        .def_readonly("satisfied", &ConditionReport::satisfied)
        .def("__repr__", [](const ConditionReport &r) {
            return "ConditionReport(" + std::string(condition_token(r.id)) +
                   ", margin=" + format_float(r.margin) + ")";
        });

    m.def("check_trace_norm_bound", &check_trace_norm_bound, py::arg("behaviour"),
          py::arg("tol") = kDefaultConditionTol);
    m.def("check_centered_trace_norm_bound", &check_centered_trace_norm_bound,
          py::arg("behaviour"), py::arg("tol") = kDefaultConditionTol);
    m.def("check_correlator_norm_bound", &check_correlator_norm_bound, py::arg("behaviour"),
          py::arg("tol") = kDefaultConditionTol);
    m.def("check_centered_correlator_norm_bound", &check_centered_correlator_norm_bound,
          py::arg("behaviour"), py::arg("tol") = kDefaultConditionTol);
    m.def("bound_raw_functional", &bound_raw_functional);
    m.def("raw_functional_report", &raw_functional_report, py::arg("behaviour"),
          py::arg("expression"), py::arg("tol") = kDefaultConditionTol);
    m.def("centered_functional_report", &centered_functional_report, py::arg("behaviour"),
          py::arg("expression"), py::arg("tol") = kDefaultConditionTol);
    m.def("bound_correlator_functional", &bound_correlator_functional);
    m.def("correlator_functional_report", &correlator_functional_report, py::arg("behaviour"),
          py::arg("coeffs"), py::arg("tol") = kDefaultConditionTol);
    m.def("centered_correlator_functional_report", &centered_correlator_functional_report,
          py::arg("behaviour"), py::arg("coeffs"), py::arg("tol") = kDefaultConditionTol);
    m.def(
        "check_condition",
        [](const std::string &token, const Behaviour &b, double tol) {
            switch (condition_id_from_token(token)) {
                case ConditionId::trace_norm_p:
                    return check_trace_norm_bound(b, tol);
                case ConditionId::trace_norm_centered:
                    return check_centered_trace_norm_bound(b, tol);
                case ConditionId::corr_norm:
                    return check_correlator_norm_bound(b, tol);
                case ConditionId::corr_norm_centered:
                    return check_centered_correlator_norm_bound(b, tol);
                default:
                    throw std::invalid_argument("condition \"" + token +
                                                "\" needs an expression; call its report function");
            }
        },
        py::arg("condition"), py::arg("behaviour"), py::arg("tol") = kDefaultConditionTol);

    py::class_<TraceCorrelatorWitness>(m, "TraceCorrelatorWitness")
        .def_readonly("trace_norm_p", &TraceCorrelatorWitness::trace_norm_p)
        .def_readonly("correlator_rhs", &TraceCorrelatorWitness::correlator_rhs);
    m.def("trace_norm_correlator_witness", &trace_norm_correlator_witness);

    py::class_<DualCertificate>(m, "DualCertificate")
        .def_readonly("x", &DualCertificate::x)
        .def_readonly("min_eig", &DualCertificate::min_eig)
        .def_readonly("objective", &DualCertificate::objective)
        .def("feasible", &DualCertificate::feasible, py::arg("tol") = kDefaultConditionTol);
    m.def("dual_certificate", &dual_certificate, py::arg("expression"));
    m.def("dual_certificate_centered", &dual_certificate_centered, py::arg("behaviour"),
          py::arg("expression"));

    py::class_<MaxEntSpectrum>(m, "MaxEntSpectrum")
        .def_readonly("d", &MaxEntSpectrum::d)
        .def_readonly("lambda_a", &MaxEntSpectrum::lambda_a)
        .def_readonly("lambda_b", &MaxEntSpectrum::lambda_b)
        .def_readonly("lambda_c", &MaxEntSpectrum::lambda_c)
        .def_readonly("lambda_minus", &MaxEntSpectrum::lambda_minus)
        .def_readonly("lambda_plus", &MaxEntSpectrum::lambda_plus)
        .def_readonly("sigma_minus", &MaxEntSpectrum::sigma_minus)
        .def_readonly("sigma_plus", &MaxEntSpectrum::sigma_plus);
    m.def("inv_sin2_dft_direct", &inv_sin2_dft_direct, py::arg("theta"), py::arg("j"),
          py::arg("d"));
    m.def("inv_sin2_dft_closed", &inv_sin2_dft_closed, py::arg("theta"), py::arg("j"),
          py::arg("d"));
    m.def("max_ent_spectrum", &max_ent_spectrum, py::arg("d"));
    m.def("max_ent_trace_norm_closed", &max_ent_trace_norm_closed, py::arg("d"));

    m.def("behaviour_to_json", &behaviour_to_json);
    m.def("behaviour_from_json", &behaviour_from_json, py::arg("text"));
    m.def("read_behaviour_json", &read_behaviour_json, py::arg("path"));
    m.def("write_behaviour_json", &write_behaviour_json, py::arg("behaviour"), py::arg("path"));
    m.def("format_float", &format_float);

    m.def(
        "scan_slice_condition",
        [](const Behaviour &p1, const Behaviour &p2, const Behaviour &base,
           const std::string &condition, int resolution_q, int resolution_p, double q_min,
           double q_max, double p_min, double p_max, int threads, double tol,
           std::optional<BellExpression> expression,
           std::optional<Eigen::MatrixXd> correlator_coeffs) {
            SliceSpec spec{p1, p2, base};
            spec.resolution_q = resolution_q;
            spec.resolution_p = resolution_p;
            spec.q_min = q_min;
            spec.q_max = q_max;
            spec.p_min = p_min;
            spec.p_max = p_max;
            spec.threads = threads;
            spec.validation_tol = tol;
            SliceEvaluator eval = condition_evaluator(condition_id_from_token(condition),
                                                      std::move(expression),
                                                      std::move(correlator_coeffs), tol);
            SliceResult result = scan_slice(spec, eval, tol);

            const Eigen::Index n = static_cast<Eigen::Index>(result.grid.size());
            Eigen::MatrixXd grid(n, 6);
            for (Eigen::Index i = 0; i < n; ++i) {
                const SlicePoint &pt = result.grid[static_cast<size_t>(i)];
                grid(i, 0) = pt.q;
                grid(i, 1) = pt.p;
                grid(i, 2) = pt.measured;
                grid(i, 3) = pt.margin;
                grid(i, 4) = pt.satisfied ? 1.0 : 0.0;
                grid(i, 5) = pt.valid ? 1.0 : 0.0;
            }
            Eigen::MatrixXd boundary(static_cast<Eigen::Index>(result.boundary.size()), 4);
            for (Eigen::Index i = 0; i < boundary.rows(); ++i) {
                const SliceSegment &seg = result.boundary[static_cast<size_t>(i)];
                boundary(i, 0) = seg.q1;
                boundary(i, 1) = seg.p1;
                boundary(i, 2) = seg.q2;
                boundary(i, 3) = seg.p2;
            }
            return py::make_tuple(grid, boundary);
        },
        py::arg("p1"), py::arg("p2"), py::arg("base"), py::arg("condition"),
        py::arg("resolution_q") = 33, py::arg("resolution_p") = 33, py::arg("q_min") = 0.0,
        py::arg("q_max") = 1.0, py::arg("p_min") = 0.0, py::arg("p_max") = 1.0,
        py::arg("threads") = 0, py::arg("tol") = kDefaultConditionTol,
        py::arg("expression") = std::nullopt, py::arg("correlator_coeffs") = std::nullopt);
}
