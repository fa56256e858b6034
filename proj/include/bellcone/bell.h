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

#ifndef BELLCONE_BELL_H
#define BELLCONE_BELL_H

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellcone/behaviour.h"
#include "bellcone/matrices.h"
#include "bellcone/scenario.h"

namespace bellcone {

/// A Bell expression: coefficients arranged like the input-major behaviour
/// matrix, so the value on a behaviour is the entrywise inner product
/// <P, G> = sum_abxy p(ab|xy) g(ab|xy) = tr(P G^T).
struct BellExpression {
    Scenario scenario;
    Eigen::MatrixXd coeffs;
    std::string name;
};

/// Validates that coeffs has shape n_a x n_b for the scenario.
BellExpression make_expression(const Scenario &s, Eigen::MatrixXd coeffs, std::string name = "");

double evaluate(const BellExpression &g, const Behaviour &b);

/// Maximum of the expression over all local deterministic behaviours.
/// Guarded: throws if d_a^m_a * d_b^m_b exceeds 1e7.
double local_bound(const BellExpression &g);

/// An expression rewrite that leaves the ordering of behaviours intact:
/// G' = offset + scale * G where the offset is block-constant,
/// offset(ab|xy) = block_offsets(x, y), and scale > 0. By normalization,
/// <P, G'> = sum_xy block_offsets(x, y) + scale * <P, G> for every behaviour.
struct AffineForm {
    Eigen::MatrixXd block_offsets;
    double scale = 1.0;
};

BellExpression affine_apply(const BellExpression &g, const AffineForm &form);

/// The quantum upper bound obtained by applying the trace-norm inequality to
/// the rewritten expression:
///   (||G'||_inf sqrt(m_a m_b) - sum_xy c_xy) / scale.
double tsirelson_bound_via(const AffineForm &form, const BellExpression &g);

/// Grid-plus-refinement minimization of tsirelson_bound_via over rewrites.
/// Offsets range over offset_values^(m_a m_b) plus optional seeded random
/// draws; for each offset the scale is scanned log-uniformly and refined by
/// golden-section. The identity rewrite is always included, so the result
/// never exceeds the plain trace-norm bound, and every probed rewrite yields
/// a valid bound, so the minimum is one too.
struct TsirelsonSearchSpec {
    std::vector<double> offset_values = {0.0, -0.5, 0.5, -1.0, 1.0};
    double scale_min = 1e-3;
    double scale_max = 1e3;
    int scale_samples = 48;
    int refine_iterations = 80;
    int random_offsets = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_combinations = 200000;
};

struct TsirelsonSearchResult {
    double bound = 0.0;
    AffineForm form;
};

TsirelsonSearchResult tsirelson_bound_search(const BellExpression &g,
                                             const TsirelsonSearchSpec &spec = {});

/// The expression a behaviour matrix saturates: G = U V^T from a reduced
/// singular value decomposition P = U S V^T (singular values below
/// sigma_max * 1e-12 are dropped). Satisfies <P, G> = ||P||_1 and
/// ||G||_inf <= 1. Throws on an all-zero matrix.
BellExpression extremal_bell_from(const BehaviourMatrix &p);

/// Catalog: the two-input two-outcome correlator expression with coefficient
/// blocks G_11 = G_12 = G_21 = -G_22 = [[1,-1],[-1,1]].
BellExpression chsh_expression();

/// Catalog: the rewrite (1/2) blockdiag(J, J) + G_chsh / (2 sqrt 2), an
/// orthogonal matrix whose trace-norm bound yields the quantum CHSH value.
BellExpression chsh_shifted_expression();

/// Catalog: the extremal expression of the d = 3 maximally entangled
/// behaviour, with entries from {(2 + sqrt 3)/6, (2 - sqrt 3)/6, -1/6}.
BellExpression phi3_expression();

std::vector<BellExpression> expression_catalog();
std::optional<BellExpression> expression_by_name(const std::string &name);

}  // namespace bellcone

#endif
