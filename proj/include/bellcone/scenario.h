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

#ifndef BELLCONE_SCENARIO_H
#define BELLCONE_SCENARIO_H

#include <string>

namespace bellcone {

/// A bipartite measurement scenario: two parties with `m_a` (resp. `m_b`)
/// input choices and `d_a` (resp. `d_b`) outcomes per input.
///
/// Inputs and outcomes are 1-based in documentation and file formats and
/// 0-based in all in-memory indices.
struct Scenario {
    int m_a = 1;
    int m_b = 1;
    int d_a = 1;
    int d_b = 1;

    Scenario() = default;
    Scenario(int m_a, int m_b, int d_a, int d_b);

    /// Row count of the input-major behaviour matrix (m_a * d_a).
    int n_a() const { return m_a * d_a; }
    /// Column count of the input-major behaviour matrix (m_b * d_b).
    int n_b() const { return m_b * d_b; }

    bool two_outcome() const { return d_a == 2 && d_b == 2; }
    bool symmetric() const { return m_a == m_b && d_a == d_b; }

    bool operator==(const Scenario &) const = default;

    std::string str() const;
};

}  // namespace bellcone

#endif
