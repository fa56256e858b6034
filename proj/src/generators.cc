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

#include "bellcone/generators.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellcone {

namespace {

void require_assignment(const std::vector<int> &choice, int inputs, int outcomes,
                        const char *party) {
    if (static_cast<int>(choice.size()) != inputs) {
        throw std::invalid_argument(std::string(party) + " assignment has " +
                                    std::to_string(choice.size()) + " entries, expected " +
                                    std::to_string(inputs));
    }
    for (int v : choice) {
        if (v < 0 || v >= outcomes) {
            throw std::invalid_argument(std::string(party) + " assignment outcome " +
                                        std::to_string(v) + " out of range [0, " +
                                        std::to_string(outcomes) + ")");
        }
    }
}

void require_permutation(const std::vector<int> &perm, int n, const char *what) {
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(perm.size()) +
                                    " entries, expected " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument(std::string(what) + " is not a permutation of 0.." +
                                        std::to_string(n - 1));
        }
        seen[v] = true;
    }
}

std::uint64_t checked_pow(int base, int exp) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > UINT64_MAX / static_cast<std::uint64_t>(base)) {
            throw std::overflow_error("deterministic family size overflows");
        }
        result *= static_cast<std::uint64_t>(base);
    }
    return result;
}

}  // namespace

Behaviour ldb(const Scenario &s, const LdbAssignment &assignment) {
    require_assignment(assignment.alice, s.m_a, s.d_a, "alice");
    require_assignment(assignment.bob, s.m_b, s.d_b, "bob");
    Behaviour b(s);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y) b.at(x, y, assignment.alice[x], assignment.bob[y]) = 1.0;
    return b;
}

LdbFamily::LdbFamily(const Scenario &s) : scenario_(s) {
    size_ = checked_pow(s.d_a, s.m_a) * checked_pow(s.d_b, s.m_b);
}

LdbAssignment LdbFamily::assignment(std::uint64_t index) const {
    if (index >= size_) {
        throw std::out_of_range("deterministic behaviour index " + std::to_string(index) +
                                " out of range, family has " + std::to_string(size_));
    }
    LdbAssignment a;
    a.alice.resize(scenario_.m_a);
    a.bob.resize(scenario_.m_b);
    for (int x = 0; x < scenario_.m_a; ++x) {
        a.alice[x] = static_cast<int>(index % scenario_.d_a);
        index /= scenario_.d_a;
    }
    for (int y = 0; y < scenario_.m_b; ++y) {
        a.bob[y] = static_cast<int>(index % scenario_.d_b);
        index /= scenario_.d_b;
    }
    return a;
}

Behaviour LdbFamily::behaviour(std::uint64_t index) const {
    return ldb(scenario_, assignment(index));
}

Behaviour pr_box_2d(int d, const Scenario &s) {
    if (d < 2) {
        throw std::invalid_argument("cyclic box needs d >= 2, got " + std::to_string(d));
    }
    if (s.m_a != 2 || s.m_b != 2) {
        throw std::invalid_argument("cyclic box needs a two-input scenario, got " + s.str());
    }
    if (d > s.d_a || d > s.d_b) {
        throw std::invalid_argument("cyclic box with d = " + std::to_string(d) +
                                    " does not fit in scenario " + s.str());
    }
    Behaviour b(s);
    double w = 1.0 / d;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int bb = 0; bb < d; ++bb) {
                // Last input pair: a = (b mod d) + 1 in 1-based labels, i.e.
                // the diagonal shifted down one row with wrap-around.
                int a = (x == 1 && y == 1) ? (bb + 1) % d : bb;
                b.at(x, y, a, bb) = w;
            }
    return b;
}

Behaviour pr_box_2d(int d) {
    return pr_box_2d(d, Scenario(2, 2, d, d));
}

Behaviour pr_box_mm22_lift(int m) {
    if (m < 2) {
        throw std::invalid_argument("lift needs m >= 2, got " + std::to_string(m));
    }
    Scenario s(m, m, 2, 2);
    Behaviour b(s);
    Behaviour pr = pr_box_2d(2);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int a = 0; a < 2; ++a)
                for (int bb = 0; bb < 2; ++bb) {
                    if (x < 2 && y < 2) {
                        b.at(x, y, a, bb) = pr(x, y, a, bb);
                    } else {
                        // Outside the PR part at least one side answers
                        // deterministically, so the joint factorizes.
                        double pa = x < 2 ? 0.5 : (a == 0 ? 1.0 : 0.0);
                        double pb = y < 2 ? 0.5 : (bb == 0 ? 1.0 : 0.0);
                        b.at(x, y, a, bb) = pa * pb;
                    }
                }
    return b;
}

Behaviour max_ent_behaviour(int d) {
    if (d < 2) {
        throw std::invalid_argument("need d >= 2 outcomes, got " + std::to_string(d));
    }
    const double alpha[2] = {0.0, 0.5};
    const double beta[2] = {0.25, -0.25};
    Scenario s(2, 2, d, d);
    Behaviour b(s);
    double scale = 2.0 * d * d * static_cast<double>(d);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < d; ++a)
                for (int bb = 0; bb < d; ++bb) {
                    double arg =
                        std::numbers::pi * ((a - bb) + alpha[x] + beta[y]) / d;
                    double sn = std::sin(arg);
                    b.at(x, y, a, bb) = 1.0 / (scale * sn * sn);
                }
    return b;
}

Behaviour fully_mixed(const Scenario &s) {
    Behaviour b(s);
    double v = 1.0 / (static_cast<double>(s.d_a) * s.d_b);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            for (int a = 0; a < s.d_a; ++a)
                for (int bb = 0; bb < s.d_b; ++bb) b.at(x, y, a, bb) = v;
    return b;
}

Behaviour mix(std::span<const double> weights, std::span<const Behaviour> components,
              bool allow_signed) {
    if (weights.size() != components.size() || components.empty()) {
        throw std::invalid_argument("need one weight per component and at least one component");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0 && !allow_signed) {
            throw std::invalid_argument("negative mixing weight " + std::to_string(w) +
                                        " without signed combinations enabled");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("mixing weights sum to " + std::to_string(sum) +
                                    ", expected 1 within 1e-12");
    }
    const Scenario &s = components[0].scenario();
    for (const Behaviour &c : components) {
        if (!(c.scenario() == s)) {
            throw std::invalid_argument("mixed components live in different scenarios");
        }
    }
    Behaviour out(s);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            for (int a = 0; a < s.d_a; ++a)
                for (int bb = 0; bb < s.d_b; ++bb) {
                    double v = 0.0;
                    for (std::size_t i = 0; i < components.size(); ++i)
                        v += weights[i] * components[i](x, y, a, bb);
                    out.at(x, y, a, bb) = v;
                }
    return out;
}

Relabeling Relabeling::identity(const Scenario &s) {
    Relabeling r;
    r.inputs_a.resize(s.m_a);
    r.inputs_b.resize(s.m_b);
    for (int x = 0; x < s.m_a; ++x) r.inputs_a[x] = x;
    for (int y = 0; y < s.m_b; ++y) r.inputs_b[y] = y;
    std::vector<int> ida(s.d_a), idb(s.d_b);
    for (int a = 0; a < s.d_a; ++a) ida[a] = a;
    for (int b = 0; b < s.d_b; ++b) idb[b] = b;
    r.outputs_a.assign(s.m_a, ida);
    r.outputs_b.assign(s.m_b, idb);
    return r;
}

Behaviour relabel(const Behaviour &b, const Relabeling &r) {
    const Scenario &s = b.scenario();
    require_permutation(r.inputs_a, s.m_a, "first party input permutation");
    require_permutation(r.inputs_b, s.m_b, "second party input permutation");
    if (static_cast<int>(r.outputs_a.size()) != s.m_a ||
        static_cast<int>(r.outputs_b.size()) != s.m_b) {
        throw std::invalid_argument("need one output permutation per input");
    }
    for (const auto &perm : r.outputs_a) require_permutation(perm, s.d_a, "output permutation");
    for (const auto &perm : r.outputs_b) require_permutation(perm, s.d_b, "output permutation");
    if (r.swap_parties && !s.symmetric()) {
        throw std::invalid_argument("party swap needs a symmetric scenario, got " + s.str());
    }

    Behaviour out(s);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            for (int a = 0; a < s.d_a; ++a)
                for (int bb = 0; bb < s.d_b; ++bb)
                    out.at(r.inputs_a[x], r.inputs_b[y], r.outputs_a[x][a], r.outputs_b[y][bb]) =
                        b(x, y, a, bb);
    if (!r.swap_parties) return out;

    Behaviour swapped(s);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            for (int a = 0; a < s.d_a; ++a)
                for (int bb = 0; bb < s.d_b; ++bb) swapped.at(x, y, a, bb) = out(y, x, bb, a);
    return swapped;
}

Behaviour pad_outputs(const Behaviour &b, int new_d_a, int new_d_b) {
    const Scenario &s = b.scenario();
    if (new_d_a < s.d_a || new_d_b < s.d_b) {
        throw std::invalid_argument("padding cannot shrink the outcome sets");
    }
    Scenario padded(s.m_a, s.m_b, new_d_a, new_d_b);
    Behaviour out(padded);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            for (int a = 0; a < s.d_a; ++a)
                for (int bb = 0; bb < s.d_b; ++bb) out.at(x, y, a, bb) = b(x, y, a, bb);
    return out;
}

}  // namespace bellcone
