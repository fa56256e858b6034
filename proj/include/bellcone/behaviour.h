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

#ifndef BELLCONE_BEHAVIOUR_H
#define BELLCONE_BEHAVIOUR_H

#include <span>
#include <string>
#include <vector>

#include "bellcone/scenario.h"

namespace bellcone {

/// Default tolerance for the behaviour validity checks. Overridable per call
/// and, on the CLI, through --tol / the BELLCONE_TOL environment variable.
inline constexpr double kDefaultValidationTol = 1e-9;

/// A conditional probability table p(a,b|x,y) over a fixed scenario.
///
/// Entries are stored flat in (x, y, a, b) order, x slowest. Construction
/// checks shape only; probabilistic constraints (positivity, normalization,
/// no-signaling) are checked separately by validate() so that points outside
/// the no-signaling polytope can still be represented and arranged into
/// matrices.
class Behaviour {
  public:
    explicit Behaviour(const Scenario &scenario);
    static Behaviour from_flat(const Scenario &scenario, std::vector<double> values);

    const Scenario &scenario() const { return scenario_; }

    double operator()(int x, int y, int a, int b) const { return p_[index(x, y, a, b)]; }
    double &at(int x, int y, int a, int b) { return p_[index(x, y, a, b)]; }

    std::span<const double> flat() const { return p_; }

    bool operator==(const Behaviour &) const = default;

  private:
    std::size_t index(int x, int y, int a, int b) const;

    Scenario scenario_;
    std::vector<double> p_;
};

enum class ViolationKind {
    negative_entry,
    normalization,
    alice_marginal_signaling,
    bob_marginal_signaling,
};

/// One violated constraint: which family, at which (1-based in describe())
/// indices, and by how much.
struct Violation {
    ViolationKind kind;
    int x = -1;
    int y = -1;
    int a = -1;
    int b = -1;
    double magnitude = 0.0;

    std::string describe() const;
};

struct ValidationReport {
    double tol = kDefaultValidationTol;
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

/// Checks positivity (p >= -tol), normalization (each sum_ab p = 1 within
/// tol) and no-signaling (each party's marginal independent of the other
/// party's input within tol). Every violated constraint is reported.
ValidationReport validate(const Behaviour &b, double tol = kDefaultValidationTol);

}  // namespace bellcone

#endif
