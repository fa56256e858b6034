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

#ifndef BELLCONE_SLICE_H
#define BELLCONE_SLICE_H

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bellcone/behaviour.h"
#include "bellcone/bell.h"
#include "bellcone/conditions.h"

namespace bellcone {

/// A planar slice through behaviour space, spanned as
///   P(q, p) = q*p1 + p*p2 + (1 - p - q)*base.
/// Coefficients may leave [0, 1]; points outside the no-signaling polytope
/// are evaluated anyway and flagged via SlicePoint::valid.
struct SliceSpec {
    Behaviour p1;
    Behaviour p2;
    Behaviour base;
    int resolution_q = 2;  // grid points along q, >= 2
    int resolution_p = 2;  // grid points along p, >= 2
    double q_min = 0.0;
    double q_max = 1.0;
    double p_min = 0.0;
    double p_max = 1.0;
    int threads = 0;  // 0 picks the hardware concurrency
    double validation_tol = kDefaultValidationTol;
};

/// Evaluates one grid behaviour and returns (measured, margin); the scanned
/// verdict is margin >= -tol.
using SliceEvaluator = std::function<std::pair<double, double>(const Behaviour &)>;

struct SlicePoint {
    double q = 0.0;
    double p = 0.0;
    double measured = 0.0;
    double margin = 0.0;
    bool satisfied = true;
    bool valid = true;
};

/// One straight boundary piece in (q, p) coordinates.
struct SliceSegment {
    double q1 = 0.0, p1 = 0.0;
    double q2 = 0.0, p2 = 0.0;
};

struct SliceResult {
    int nq = 0;
    int np = 0;
    /// Row-major over q rows: grid[iq * np + ip].
    std::vector<SlicePoint> grid;
    /// Verdict boundary extracted by marching squares over the grid cells,
    /// with crossing locations linearly interpolated from the margins.
    std::vector<SliceSegment> boundary;
};

/// Scans the slice on an evenly spaced grid. Rows are distributed across a
/// worker pool; output order is independent of scheduling. Exceptions thrown
/// by the evaluator propagate to the caller.
SliceResult scan_slice(const SliceSpec &spec, const SliceEvaluator &eval,
                       double tol = kDefaultConditionTol);

/// Wraps one of the membership conditions as a slice evaluator. Functional
/// conditions require `expression`; correlator-functional conditions require
/// the per-input-pair `correlator_coeffs` instead.
SliceEvaluator condition_evaluator(ConditionId id, std::optional<BellExpression> expression,
                                   std::optional<Eigen::MatrixXd> correlator_coeffs, double tol);

/// Evaluator for a raw Bell functional against a fixed threshold:
/// measured = <P, G>, margin = threshold - measured.
SliceEvaluator bell_threshold_evaluator(BellExpression g, double threshold);

}  // namespace bellcone

#endif  // BELLCONE_SLICE_H
