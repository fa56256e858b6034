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

#include "bellcone/behaviour.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bellcone {

Behaviour::Behaviour(const Scenario &scenario)
    : scenario_(scenario),
      p_(static_cast<std::size_t>(scenario.m_a) * scenario.m_b * scenario.d_a * scenario.d_b,
         0.0) {}

Behaviour Behaviour::from_flat(const Scenario &scenario, std::vector<double> values) {
    Behaviour b(scenario);
    if (values.size() != b.p_.size()) {
        throw std::invalid_argument(
            "behaviour table for scenario " + scenario.str() + " needs " +
            std::to_string(b.p_.size()) + " entries, got " + std::to_string(values.size()));
    }
    b.p_ = std::move(values);
    return b;
}

std::size_t Behaviour::index(int x, int y, int a, int b) const {
    return ((static_cast<std::size_t>(x) * scenario_.m_b + y) * scenario_.d_a + a) *
               scenario_.d_b +
           b;
}

std::string Violation::describe() const {
    switch (kind) {
        case ViolationKind::negative_entry:
            return "negative entry p(a=" + std::to_string(a + 1) + ",b=" + std::to_string(b + 1) +
                   "|x=" + std::to_string(x + 1) + ",y=" + std::to_string(y + 1) + ") below 0 by " +
                   std::to_string(magnitude);
        case ViolationKind::normalization:
            return "normalization off by " + std::to_string(magnitude) + " at (x=" +
                   std::to_string(x + 1) + ",y=" + std::to_string(y + 1) + ")";
        case ViolationKind::alice_marginal_signaling:
            return "first party marginal p(a=" + std::to_string(a + 1) + "|x=" +
                   std::to_string(x + 1) + ") varies with y by " + std::to_string(magnitude);
        case ViolationKind::bob_marginal_signaling:
            return "second party marginal p(b=" + std::to_string(b + 1) + "|y=" +
                   std::to_string(y + 1) + ") varies with x by " + std::to_string(magnitude);
    }
    return "unknown violation";
}

ValidationReport validate(const Behaviour &b, double tol) {
    const Scenario &s = b.scenario();
    ValidationReport report;
    report.tol = tol;

    for (int x = 0; x < s.m_a; ++x) {
        for (int y = 0; y < s.m_b; ++y) {
            double sum = 0.0;
            for (int a = 0; a < s.d_a; ++a) {
                for (int bb = 0; bb < s.d_b; ++bb) {
                    double v = b(x, y, a, bb);
                    sum += v;
                    if (v < -tol) {
                        report.violations.push_back(
                            {ViolationKind::negative_entry, x, y, a, bb, -v});
                    }
                }
            }
            if (std::abs(sum - 1.0) > tol) {
                report.violations.push_back(
                    {ViolationKind::normalization, x, y, -1, -1, std::abs(sum - 1.0)});
            }
        }
    }

    // No-signaling: for each (x, a) the marginal sum_b p(a,b|x,y) must not
    // depend on y. The reported magnitude is the spread max_y - min_y.
    for (int x = 0; x < s.m_a; ++x) {
        for (int a = 0; a < s.d_a; ++a) {
            double lo = 0.0, hi = 0.0;
            for (int y = 0; y < s.m_b; ++y) {
                double m = 0.0;
                for (int bb = 0; bb < s.d_b; ++bb) m += b(x, y, a, bb);
                if (y == 0) {
                    lo = hi = m;
                } else {
                    lo = std::min(lo, m);
                    hi = std::max(hi, m);
                }
            }
            if (hi - lo > tol) {
                report.violations.push_back(
                    {ViolationKind::alice_marginal_signaling, x, -1, a, -1, hi - lo});
            }
        }
    }
    for (int y = 0; y < s.m_b; ++y) {
        for (int bb = 0; bb < s.d_b; ++bb) {
            double lo = 0.0, hi = 0.0;
            for (int x = 0; x < s.m_a; ++x) {
                double m = 0.0;
                for (int a = 0; a < s.d_a; ++a) m += b(x, y, a, bb);
                if (x == 0) {
                    lo = hi = m;
                } else {
                    lo = std::min(lo, m);
                    hi = std::max(hi, m);
                }
            }
            if (hi - lo > tol) {
                report.violations.push_back(
                    {ViolationKind::bob_marginal_signaling, -1, y, -1, bb, hi - lo});
            }
        }
    }

    return report;
}

}  // namespace bellcone
