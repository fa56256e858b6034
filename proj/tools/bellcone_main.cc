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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

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

namespace {

using namespace bellcone;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

double default_tolerance() {
    const char *env = std::getenv("BELLCONE_TOL");
    if (env == nullptr || *env == '\0') return kDefaultConditionTol;
    char *end = nullptr;
    double v = std::strtod(env, &end);
    if (end == nullptr || *end != '\0' || !(v > 0.0)) {
        throw std::runtime_error(std::string("BELLCONE_TOL is not a positive number: ") + env);
    }
    return v;
}

std::vector<double> split_numbers(const std::string &arg, const std::string &what) {
    std::vector<double> out;
    std::istringstream in(arg);
    std::string field;
    while (std::getline(in, field, ',')) {
        try {
            size_t consumed = 0;
            out.push_back(std::stod(field, &consumed));
            if (consumed != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception &) {
            throw std::runtime_error(what + ": cannot parse \"" + field + "\" in \"" + arg + "\"");
        }
    }
    return out;
}

Scenario parse_scenario(const std::string &arg) {
    std::vector<double> v = split_numbers(arg, "scenario");
    if (v.size() != 4) {
        throw std::runtime_error("scenario must be mA,mB,dA,dB, got \"" + arg + "\"");
    }
    return Scenario(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
                    static_cast<int>(v[3]));
}

std::pair<double, double> parse_range(const std::string &arg, const std::string &what) {
    std::vector<double> v = split_numbers(arg, what);
    if (v.size() != 2 || !(v[0] < v[1])) {
        throw std::runtime_error(what + " must be lo,hi with lo < hi, got \"" + arg + "\"");
    }
    return {v[0], v[1]};
}

std::pair<int, int> parse_resolution(const std::string &arg) {
    std::vector<double> v = split_numbers(arg, "resolution");
    if (v.size() == 1) v.push_back(v[0]);
    if (v.size() != 2 || v[0] < 2 || v[1] < 2) {
        throw std::runtime_error("resolution must be n or nq,np with entries >= 2, got \"" + arg +
                                 "\"");
    }
    return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

/// Catalog names win; anything else is read as a coefficient CSV with a
/// "<path>.json" scenario sidecar.
BellExpression resolve_expression(const std::string &arg) {
    if (std::optional<BellExpression> g = expression_by_name(arg)) return *g;
    return read_expression(arg, arg + ".json");
}

MatrixKind parse_matrix_kind(const std::string &arg) {
    if (arg == "input-major") return MatrixKind::input_major;
    if (arg == "output-major") return MatrixKind::output_major;
    if (arg == "centered") return MatrixKind::centered;
    throw std::runtime_error("unknown matrix kind \"" + arg +
                             "\" (expected input-major, output-major or centered)");
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

const char *json_bool(bool v) { return v ? "true" : "false"; }

std::string report_json_line(const ConditionReport &r) {
    std::ostringstream out;
    out << "{\"condition\":\"" << condition_token(r.id) << "\",\"measured\":"
        << format_float(r.measured) << ",\"bound\":" << format_float(r.bound)
        << ",\"margin\":" << format_float(r.margin) << ",\"satisfied\":" << json_bool(r.satisfied)
        << "}\n";
    return out.str();
}

std::string certificate_json_line(const std::string &kind, const std::string &name,
                                  const DualCertificate &cert, double tol) {
    std::ostringstream out;
    out << "{\"kind\":\"" << kind << "\",\"expression\":\"" << name
        << "\",\"min_eig\":" << format_float(cert.min_eig)
        << ",\"objective\":" << format_float(cert.objective)
        << ",\"feasible\":" << json_bool(cert.feasible(tol)) << "}\n";
    return out.str();
}

struct ValidateArgs {
    std::string in;
    bool quiet = false;
};

int run_validate(const ValidateArgs &args, double tol) {
    Behaviour b = read_behaviour_json(args.in);
    ValidationReport report = validate(b, tol);
    if (!args.quiet) {
        for (const Violation &v : report.violations) {
            std::cout << "violation: " << v.describe() << "\n";
        }
    }
    std::cout << "valid = " << json_bool(report.valid()) << "\n";
    return report.valid() ? kExitOk : kExitViolated;
}

struct GenerateArgs {
    std::string family;
    std::string scenario;
    int d = 2;
    int m = 3;
    std::uint64_t index = 0;
    double v = 1.0;
    std::string out;
};

int run_generate(const GenerateArgs &args) {
    std::optional<Behaviour> b;
    if (args.family == "ldb") {
        Scenario s = args.scenario.empty() ? Scenario(2, 2, 2, 2) : parse_scenario(args.scenario);
        LdbFamily family(s);
        if (args.index >= family.size()) {
            throw std::runtime_error("ldb index " + std::to_string(args.index) +
                                     " out of range, family has " +
                                     std::to_string(family.size()) + " members");
        }
        b = family.behaviour(args.index);
    } else if (args.family == "pr2d") {
        b = args.scenario.empty() ? pr_box_2d(args.d)
                                  : pr_box_2d(args.d, parse_scenario(args.scenario));
    } else if (args.family == "prlift") {
        b = pr_box_mm22_lift(args.m);
    } else if (args.family == "maxent") {
        b = max_ent_behaviour(args.d);
    } else if (args.family == "mixed") {
        Scenario s = args.scenario.empty() ? Scenario(2, 2, 2, 2) : parse_scenario(args.scenario);
        b = fully_mixed(s);
    } else if (args.family == "isotropic") {
        std::vector<Behaviour> parts{pr_box_2d(2), fully_mixed(Scenario(2, 2, 2, 2))};
        std::vector<double> weights{args.v, 1.0 - args.v};
        b = mix(weights, parts, /*allow_signed=*/true);
    } else {
        throw std::runtime_error("unknown family \"" + args.family +
                                 "\" (expected ldb, pr2d, prlift, maxent, mixed or isotropic)");
    }
    emit(behaviour_to_json(*b), args.out);
    return kExitOk;
}

struct MatrixArgs {
    std::string in;
    std::string kind = "input-major";
    std::string out;
};

int run_matrix(const MatrixArgs &args) {
    Behaviour b = read_behaviour_json(args.in);
    BehaviourMatrix m = behaviour_matrix(b, parse_matrix_kind(args.kind));
    emit(matrix_to_csv(m.data), args.out);
    return kExitOk;
}

int run_norms(const MatrixArgs &args) {
    Behaviour b = read_behaviour_json(args.in);
    BehaviourMatrix m = behaviour_matrix(b, parse_matrix_kind(args.kind));
    std::ostringstream out;
    out << "kind = " << args.kind << "\n";
    out << "rows = " << m.data.rows() << "\n";
    out << "cols = " << m.data.cols() << "\n";
    out << "trace_norm = " << format_float(trace_norm(m.data)) << "\n";
    out << "spectral_norm = " << format_float(spectral_norm(m.data)) << "\n";
    out << "frobenius_norm = " << format_float(frobenius_norm(m.data)) << "\n";
    if (b.scenario().two_outcome()) {
        TraceCorrelatorWitness w = trace_norm_correlator_witness(b);
        out << "correlator_trace_floor = " << format_float(w.correlator_rhs) << "\n";
    }
    emit(out.str(), args.out);
    return kExitOk;
}

struct CheckArgs {
    std::string in;
    std::string condition = "all";
    std::string expression;
    std::string coeffs;
};

int run_check(const CheckArgs &args, double tol) {
    Behaviour b = read_behaviour_json(args.in);
    std::optional<BellExpression> g;
    if (!args.expression.empty()) g = resolve_expression(args.expression);
    std::optional<Eigen::MatrixXd> coeffs;
    if (!args.coeffs.empty()) coeffs = read_matrix_csv(args.coeffs);

    std::vector<ConditionId> to_run;
    if (args.condition == "all") {
        to_run.push_back(ConditionId::trace_norm_p);
        to_run.push_back(ConditionId::trace_norm_centered);
        if (b.scenario().two_outcome()) {
            to_run.push_back(ConditionId::corr_norm);
            to_run.push_back(ConditionId::corr_norm_centered);
        }
        if (g) {
            to_run.push_back(ConditionId::functional_p);
            to_run.push_back(ConditionId::functional_centered);
        }
        if (coeffs) {
            to_run.push_back(ConditionId::corr_functional);
            to_run.push_back(ConditionId::corr_functional_centered);
        }
    } else {
        std::optional<ConditionId> id = condition_from_token(args.condition);
        if (!id) {
            throw std::runtime_error("unknown condition \"" + args.condition + "\"");
        }
        to_run.push_back(*id);
    }

    bool all_satisfied = true;
    for (ConditionId id : to_run) {
        ConditionReport report = [&]() {
            switch (id) {
                case ConditionId::trace_norm_p:
                    return check_trace_norm_bound(b, tol);
                case ConditionId::trace_norm_centered:
                    return check_centered_trace_norm_bound(b, tol);
                case ConditionId::corr_norm:
                    return check_correlator_norm_bound(b, tol);
                case ConditionId::corr_norm_centered:
                    return check_centered_correlator_norm_bound(b, tol);
                case ConditionId::functional_p:
                    if (!g) throw std::runtime_error("ineq2 requires --expression");
                    return raw_functional_report(b, *g, tol);
                case ConditionId::functional_centered:
                    if (!g) throw std::runtime_error("ineq4 requires --expression");
                    return centered_functional_report(b, *g, tol);
                case ConditionId::corr_functional:
                    if (!coeffs) throw std::runtime_error("corr-epping requires --coeffs");
                    return correlator_functional_report(b, *coeffs, tol);
                case ConditionId::corr_functional_centered:
                    if (!coeffs) throw std::runtime_error("ineq15 requires --coeffs");
                    return centered_correlator_functional_report(b, *coeffs, tol);
            }
            throw std::runtime_error("unknown condition");
        }();
        std::cout << report_json_line(report);
        all_satisfied = all_satisfied && report.satisfied;
    }
    return all_satisfied ? kExitOk : kExitViolated;
}

struct BellBoundArgs {
    std::string expression;
    bool search = false;
    int random_offsets = 0;
};

int run_bell_bound(const BellBoundArgs &args, double tol, std::uint64_t seed) {
    (void)tol;
    BellExpression g = resolve_expression(args.expression);
    std::ostringstream out;
    out << "expression = " << (g.name.empty() ? args.expression : g.name) << "\n";
    try {
        out << "local_bound = " << format_float(local_bound(g)) << "\n";
    } catch (const std::invalid_argument &e) {
        out << "local_bound_skipped = " << e.what() << "\n";
    }
    out << "trace_norm_bound = " << format_float(bound_raw_functional(g)) << "\n";
    if (args.search) {
        TsirelsonSearchSpec spec;
        spec.seed = seed;
        spec.random_offsets = args.random_offsets;
        TsirelsonSearchResult best = tsirelson_bound_search(g, spec);
        out << "searched_bound = " << format_float(best.bound) << "\n";
        out << "searched_scale = " << format_float(best.form.scale) << "\n";
        out << "searched_offsets = ";
        for (Eigen::Index r = 0; r < best.form.block_offsets.rows(); ++r) {
            if (r > 0) out << ";";
            for (Eigen::Index c = 0; c < best.form.block_offsets.cols(); ++c) {
                if (c > 0) out << ",";
                out << format_float(best.form.block_offsets(r, c));
            }
        }
        out << "\n";
    }
    std::cout << out.str();
    return kExitOk;
}

struct ExtremalBellArgs {
    std::string in;
    std::string kind = "input-major";
    std::string out;
};

int run_extremal_bell(const ExtremalBellArgs &args) {
    Behaviour b = read_behaviour_json(args.in);
    BehaviourMatrix m = behaviour_matrix(b, parse_matrix_kind(args.kind));
    BellExpression g = extremal_bell_from(m);
    std::ostringstream out;
    out << "inner_product = " << format_float(m.data.cwiseProduct(g.coeffs).sum()) << "\n";
    out << "trace_norm = " << format_float(trace_norm(m.data)) << "\n";
    out << "expression_spectral_norm = " << format_float(spectral_norm(g.coeffs)) << "\n";
    out << "trace_norm_bound = " << format_float(bound_raw_functional(g)) << "\n";
    std::cout << out.str();
    if (!args.out.empty()) {
        write_expression(g, args.out, args.out + ".json");
    }
    return kExitOk;
}

struct ClosedFormsArgs {
    int d = 2;
    std::string out;
};

int run_closed_forms(const ClosedFormsArgs &args) {
    MaxEntSpectrum spec = max_ent_spectrum(args.d);
    std::ostringstream out;
    out << "j,lambda_a_re,lambda_a_im,lambda_b_re,lambda_b_im,lambda_c_re,lambda_c_im,"
        << "lambda_minus_re,lambda_minus_im,lambda_plus_re,lambda_plus_im,"
        << "sigma_minus,sigma_plus\n";
    for (int j = 0; j < spec.d; ++j) {
        out << j << "," << format_float(spec.lambda_a[j].real()) << ","
            << format_float(spec.lambda_a[j].imag()) << "," << format_float(spec.lambda_b[j].real())
            << "," << format_float(spec.lambda_b[j].imag()) << ","
            << format_float(spec.lambda_c[j].real()) << "," << format_float(spec.lambda_c[j].imag())
            << "," << format_float(spec.lambda_minus[j].real()) << ","
            << format_float(spec.lambda_minus[j].imag()) << ","
            << format_float(spec.lambda_plus[j].real()) << ","
            << format_float(spec.lambda_plus[j].imag()) << ","
            << format_float(spec.sigma_minus[j]) << "," << format_float(spec.sigma_plus[j])
            << "\n";
    }
    emit(out.str(), args.out);
    return kExitOk;
}

struct SliceArgs {
    std::string p1, p2, base;
    std::string condition = "thm1";
    std::string bell;
    double threshold = 0.0;
    std::string expression;
    std::string coeffs;
    std::string resolution = "33";
    std::string qrange = "0,1";
    std::string prange = "0,1";
    int threads = 0;
    std::string out;
    std::string boundary;
    bool bell_mode = false;
};

int run_slice(const SliceArgs &args, double tol) {
    SliceSpec spec{read_behaviour_json(args.p1), read_behaviour_json(args.p2),
                   read_behaviour_json(args.base)};
    std::tie(spec.resolution_q, spec.resolution_p) = parse_resolution(args.resolution);
    std::tie(spec.q_min, spec.q_max) = parse_range(args.qrange, "qrange");
    std::tie(spec.p_min, spec.p_max) = parse_range(args.prange, "prange");
    spec.threads = args.threads;
    spec.validation_tol = tol;

    SliceEvaluator eval;
    if (args.bell_mode) {
        eval = bell_threshold_evaluator(resolve_expression(args.bell), args.threshold);
    } else {
        std::optional<ConditionId> id = condition_from_token(args.condition);
        if (!id) {
            throw std::runtime_error("unknown condition \"" + args.condition + "\"");
        }
        std::optional<BellExpression> g;
        if (!args.expression.empty()) g = resolve_expression(args.expression);
        std::optional<Eigen::MatrixXd> coeffs;
        if (!args.coeffs.empty()) coeffs = read_matrix_csv(args.coeffs);
        eval = condition_evaluator(*id, std::move(g), std::move(coeffs), tol);
    }

    SliceResult result = scan_slice(spec, eval, tol);

    std::ostringstream grid;
    grid << "q,p,measured,margin,satisfied,valid\n";
    for (const SlicePoint &pt : result.grid) {
        grid << format_float(pt.q) << "," << format_float(pt.p) << ","
             << format_float(pt.measured) << "," << format_float(pt.margin) << ","
             << (pt.satisfied ? 1 : 0) << "," << (pt.valid ? 1 : 0) << "\n";
    }
    emit(grid.str(), args.out);

    if (!args.boundary.empty()) {
        std::ostringstream boundary;
        boundary << "q1,p1,q2,p2\n";
        for (const SliceSegment &seg : result.boundary) {
            boundary << format_float(seg.q1) << "," << format_float(seg.p1) << ","
                     << format_float(seg.q2) << "," << format_float(seg.p2) << "\n";
        }
        write_text_file(args.boundary, boundary.str());
    }
    return kExitOk;
}

struct CertifyArgs {
    std::string expression;
    std::string in;
};

int run_certify(const CertifyArgs &args, double tol) {
    BellExpression g = resolve_expression(args.expression);
    std::string name = g.name.empty() ? args.expression : g.name;
    DualCertificate raw = dual_certificate(g);
    std::cout << certificate_json_line("raw", name, raw, tol);
    bool ok = raw.feasible(tol);
    if (!args.in.empty()) {
        Behaviour b = read_behaviour_json(args.in);
        DualCertificate centered = dual_certificate_centered(b, g);
        std::cout << certificate_json_line("centered", name, centered, tol);
        ok = ok && centered.feasible(tol);
    }
    return ok ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Block-matrix analysis of bipartite Bell-scenario behaviours"};
    app.require_subcommand(1);

    double tol = kDefaultConditionTol;
    bool tol_given = false;
    app.add_option("--tol", tol, "validation and margin tolerance (default: BELLCONE_TOL or 1e-9)")
        ->check(CLI::PositiveNumber)
        ->each([&tol_given](const std::string &) { tol_given = true; });
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized searches");

    ValidateArgs validate_args;
    CLI::App *cmd_validate = app.add_subcommand("validate", "check a behaviour file");
    cmd_validate->add_option("--in", validate_args.in, "behaviour JSON file")->required();
    cmd_validate->add_flag("--quiet", validate_args.quiet, "suppress the violation list");

    GenerateArgs generate_args;
    CLI::App *cmd_generate = app.add_subcommand("generate", "emit a behaviour from a family");
    cmd_generate
        ->add_option("--family", generate_args.family,
                     "ldb, pr2d, prlift, maxent, mixed or isotropic")
        ->required();
    cmd_generate->add_option("--scenario", generate_args.scenario, "scenario as mA,mB,dA,dB");
    cmd_generate->add_option("--d", generate_args.d, "outcome count for pr2d/maxent");
    cmd_generate->add_option("--m", generate_args.m, "input count for prlift");
    cmd_generate->add_option("--index", generate_args.index, "index into the ldb family");
    cmd_generate->add_option("--v", generate_args.v, "isotropic visibility");
    cmd_generate->add_option("--out", generate_args.out, "output path (default: stdout)");

    MatrixArgs matrix_args;
    CLI::App *cmd_matrix = app.add_subcommand("matrix", "write a behaviour matrix as CSV");
    cmd_matrix->add_option("--in", matrix_args.in, "behaviour JSON file")->required();
    cmd_matrix->add_option("--kind", matrix_args.kind, "input-major, output-major or centered");
    cmd_matrix->add_option("--out", matrix_args.out, "output path (default: stdout)");

    MatrixArgs norms_args;
    CLI::App *cmd_norms = app.add_subcommand("norms", "print matrix norms of a behaviour");
    cmd_norms->add_option("--in", norms_args.in, "behaviour JSON file")->required();
    cmd_norms->add_option("--kind", norms_args.kind, "input-major, output-major or centered");
    cmd_norms->add_option("--out", norms_args.out, "output path (default: stdout)");

    CheckArgs check_args;
    CLI::App *cmd_check = app.add_subcommand("check", "evaluate membership conditions");
    cmd_check->add_option("--in", check_args.in, "behaviour JSON file")->required();
    cmd_check->add_option("--condition", check_args.condition,
                          "thm1, thm2, ineq2, ineq4, corr-norm, corr-epping, thm8, ineq15 or all");
    cmd_check->add_option("--expression", check_args.expression,
                          "catalog name or CSV path (for ineq2/ineq4)");
    cmd_check->add_option("--coeffs", check_args.coeffs,
                          "per-input-pair coefficient CSV (for corr-epping/ineq15)");

    BellBoundArgs bell_bound_args;
    CLI::App *cmd_bell_bound = app.add_subcommand("bell-bound", "bounds for a Bell expression");
    cmd_bell_bound->add_option("--expression", bell_bound_args.expression,
                               "catalog name or CSV path")
        ->required();
    cmd_bell_bound->add_flag("--search", bell_bound_args.search,
                             "minimize the bound over affine rewrites");
    cmd_bell_bound->add_option("--random-offsets", bell_bound_args.random_offsets,
                               "extra random offset draws for the search");

    ExtremalBellArgs extremal_args;
    CLI::App *cmd_extremal = app.add_subcommand(
        "extremal-bell", "expression maximized by a behaviour, via its singular vectors");
    cmd_extremal->add_option("--in", extremal_args.in, "behaviour JSON file")->required();
    cmd_extremal->add_option("--kind", extremal_args.kind,
                             "input-major, output-major or centered");
    cmd_extremal->add_option("--out", extremal_args.out,
                             "expression CSV path (sidecar: <out>.json)");

    ClosedFormsArgs closed_forms_args;
    CLI::App *cmd_closed_forms =
        app.add_subcommand("closed-forms", "exact spectra of the maximally entangled behaviour");
    cmd_closed_forms->add_option("--d", closed_forms_args.d, "outcome count (>= 2)")->required();
    cmd_closed_forms->add_option("--out", closed_forms_args.out, "output path (default: stdout)");

    SliceArgs slice_args;
    CLI::App *cmd_slice = app.add_subcommand("slice", "scan a planar slice of behaviour space");
    cmd_slice->add_option("--p1", slice_args.p1, "behaviour JSON spanning the q axis")->required();
    cmd_slice->add_option("--p2", slice_args.p2, "behaviour JSON spanning the p axis")->required();
    cmd_slice->add_option("--base", slice_args.base, "behaviour JSON at the origin")->required();
    CLI::Option *slice_condition =
        cmd_slice->add_option("--condition", slice_args.condition, "condition token (default thm1)");
    CLI::Option *slice_bell = cmd_slice
                                  ->add_option("--bell", slice_args.bell,
                                               "Bell expression (catalog name or CSV path)")
                                  ->excludes(slice_condition);
    cmd_slice->add_option("--threshold", slice_args.threshold, "threshold for --bell")
        ->needs(slice_bell);
    cmd_slice->add_option("--expression", slice_args.expression,
                          "expression for functional conditions");
    cmd_slice->add_option("--coeffs", slice_args.coeffs,
                          "correlator coefficients for corr-epping/ineq15");
    cmd_slice->add_option("--res", slice_args.resolution, "grid points per axis: n or nq,np");
    cmd_slice->add_option("--qrange", slice_args.qrange, "q range as lo,hi");
    cmd_slice->add_option("--prange", slice_args.prange, "p range as lo,hi");
    cmd_slice->add_option("--threads", slice_args.threads, "worker count (0 = hardware)");
    cmd_slice->add_option("--out", slice_args.out, "grid CSV path (default: stdout)");
    cmd_slice->add_option("--boundary", slice_args.boundary, "boundary segment CSV path");

    CertifyArgs certify_args;
    CLI::App *cmd_certify =
        app.add_subcommand("certify", "dual certificate for a Bell expression bound");
    cmd_certify->add_option("--expression", certify_args.expression, "catalog name or CSV path")
        ->required();
    cmd_certify->add_option("--in", certify_args.in,
                            "behaviour JSON for the marginal-corrected objective");

    // Let --tol and --seed appear after the subcommand as well.
    for (CLI::App *sub : {cmd_validate, cmd_generate, cmd_matrix, cmd_norms, cmd_check,
                          cmd_bell_bound, cmd_extremal, cmd_closed_forms, cmd_slice,
                          cmd_certify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!tol_given) tol = default_tolerance();
        slice_args.bell_mode = cmd_slice->count("--bell") > 0;
        if (app.got_subcommand(cmd_validate)) return run_validate(validate_args, tol);
        if (app.got_subcommand(cmd_generate)) return run_generate(generate_args);
        if (app.got_subcommand(cmd_matrix)) return run_matrix(matrix_args);
        if (app.got_subcommand(cmd_norms)) return run_norms(norms_args);
        if (app.got_subcommand(cmd_check)) return run_check(check_args, tol);
        if (app.got_subcommand(cmd_bell_bound)) return run_bell_bound(bell_bound_args, tol, seed);
        if (app.got_subcommand(cmd_extremal)) return run_extremal_bell(extremal_args);
        if (app.got_subcommand(cmd_closed_forms)) return run_closed_forms(closed_forms_args);
        if (app.got_subcommand(cmd_slice)) return run_slice(slice_args, tol);
        if (app.got_subcommand(cmd_certify)) return run_certify(certify_args, tol);
        throw std::runtime_error("no subcommand selected");
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
