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

#ifndef BELLCONE_MATRICES_H
#define BELLCONE_MATRICES_H

#include <Eigen/Dense>

#include "bellcone/behaviour.h"
#include "bellcone/scenario.h"

namespace bellcone {

enum class MatrixKind {
    input_major,   // rows (x,a), columns (y,b); d_a x d_b blocks indexed by inputs
    output_major,  // rows (a,x), columns (b,y); m_a x m_b blocks indexed by outputs
    centered,      // input-major arrangement of p(ab|xy) - p(a|x) p(b|y)
};

/// A behaviour arranged as a dense block matrix, together with the layout it
/// was arranged in and the scenario it came from.
struct BehaviourMatrix {
    MatrixKind kind = MatrixKind::input_major;
    Scenario scenario;
    Eigen::MatrixXd data;
};

/// Input-major arrangement: entry ((x-1) d_a + a, (y-1) d_b + b) = p(ab|xy).
BehaviourMatrix input_major_matrix(const Behaviour &b);

/// Output-major arrangement: entry ((a-1) m_a + x, (b-1) m_b + y) = p(ab|xy).
/// A row/column permutation of the input-major arrangement, so all singular
/// values coincide.
BehaviourMatrix output_major_matrix(const Behaviour &b);

/// Input-major arrangement of the centered table
/// m(ab|xy) = p(ab|xy) - p(a|x) p(b|y).
BehaviourMatrix centered_matrix(const Behaviour &b);

BehaviourMatrix behaviour_matrix(const Behaviour &b, MatrixKind kind);

/// Single-party marginals, ordered like the input-major rows/columns:
/// alice((x-1) d_a + a) = p(a|x), bob((y-1) d_b + b) = p(b|y).
/// Marginals are averaged over the other party's inputs, which makes them
/// exact whenever the behaviour satisfies no-signaling.
struct MarginalVectors {
    Eigen::VectorXd alice;
    Eigen::VectorXd bob;
};

MarginalVectors marginal_vectors(const Behaviour &b);

/// Two-outcome summary in the +-1 picture (outcome 1 -> +1, outcome 2 -> -1):
/// joint(x,y) = <A_x B_y>, alice_mean(x) = <A_x>, bob_mean(y) = <B_y>, and
/// centered(x,y) = <A_x B_y> - <A_x><B_y>.
struct CorrelatorSummary {
    Eigen::MatrixXd joint;
    Eigen::VectorXd alice_mean;
    Eigen::VectorXd bob_mean;
    Eigen::MatrixXd centered;
};

/// Requires d_a == d_b == 2.
CorrelatorSummary correlators(const Behaviour &b);

/// Rebuilds the probability table from a two-outcome correlator summary via
/// p(ab|xy) = (1 + a <A_x> + b <B_y> + ab <A_x B_y>) / 4 with a, b = +-1.
Behaviour behaviour_from_correlators(const Scenario &s, const CorrelatorSummary &c);

}  // namespace bellcone

#endif
