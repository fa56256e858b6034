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

#ifndef BELLCONE_GENERATORS_H
#define BELLCONE_GENERATORS_H

#include <cstdint>
#include <span>
#include <vector>

#include "bellcone/behaviour.h"
#include "bellcone/scenario.h"

namespace bellcone {

/// One deterministic strategy per party: alice[x] is the 0-based outcome
/// produced for input x, likewise bob[y].
struct LdbAssignment {
    std::vector<int> alice;
    std::vector<int> bob;
};

/// The local deterministic behaviour d(ab|xy) = [a == alice[x]] [b == bob[y]].
Behaviour ldb(const Scenario &s, const LdbAssignment &assignment);

/// Index-addressable enumeration of all d_a^m_a * d_b^m_b local deterministic
/// behaviours, in lexicographic order (Alice's assignment is the low digits).
/// Being index-based it can be restarted anywhere and partitioned across
/// workers.
class LdbFamily {
  public:
    explicit LdbFamily(const Scenario &s);

    std::uint64_t size() const { return size_; }
    LdbAssignment assignment(std::uint64_t index) const;
    Behaviour behaviour(std::uint64_t index) const;

  private:
    Scenario scenario_;
    std::uint64_t size_;
};

/// The d-outcome generalization of the PR box in a two-input scenario:
/// p(ab|xy) = [a == b]/d except for the last input pair, where
/// p(ab|22) = [a == (b mod d) + 1]/d (a cyclic shift of the diagonal).
/// The scenario must have m_a == m_b == 2 and d <= min(d_a, d_b); outcomes
/// beyond d have probability zero.
Behaviour pr_box_2d(int d, const Scenario &s);

/// Same, in the minimal scenario (2, 2, d, d).
Behaviour pr_box_2d(int d);

/// The PR box lifted to m inputs per party in the (m, m, 2, 2) scenario:
/// inputs 1 and 2 behave like the PR box; every further input deterministically
/// produces outcome 1.
Behaviour pr_box_mm22_lift(int m);

/// The two-input d-outcome behaviour
///   p(ab|xy) = 1 / (2 d^3 sin^2(pi (a - b + alpha_x + beta_y) / d))
/// with alpha = (0, 1/2) and beta = (1/4, -1/4). All marginals are 1/d and
/// the input-major matrix is normal with circulant blocks.
Behaviour max_ent_behaviour(int d);

/// The uniform behaviour p(ab|xy) = 1 / (d_a d_b).
Behaviour fully_mixed(const Scenario &s);

/// Affine combination sum_i weights[i] * components[i]. Weights must sum to 1
/// within 1e-12; negative weights are rejected unless allow_signed is set.
Behaviour mix(std::span<const double> weights, std::span<const Behaviour> components,
              bool allow_signed = false);

/// A relabeling of the scenario: permutations of each party's inputs, one
/// output permutation per input (indexed by the original input), and an
/// optional party swap (valid only when the scenario is symmetric).
/// Outputs are relabeled first, then inputs, then parties are swapped.
struct Relabeling {
    std::vector<int> inputs_a;
    std::vector<int> inputs_b;
    std::vector<std::vector<int>> outputs_a;
    std::vector<std::vector<int>> outputs_b;
    bool swap_parties = false;

    static Relabeling identity(const Scenario &s);
};

Behaviour relabel(const Behaviour &b, const Relabeling &r);

/// Extends the outcome sets to new_d_a >= d_a, new_d_b >= d_b by giving the
/// new highest-index outcomes probability zero.
Behaviour pad_outputs(const Behaviour &b, int new_d_a, int new_d_b);

}  // namespace bellcone

#endif
