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

#include "bellcone/matrices.h"

#include <stdexcept>

namespace bellcone {

BehaviourMatrix input_major_matrix(const Behaviour &b) {
    const Scenario &s = b.scenario();
    Eigen::MatrixXd m(s.n_a(), s.n_b());
    for (int x = 0; x < s.m_a; ++x)
        for (int a = 0; a < s.d_a; ++a)
            for (int y = 0; y < s.m_b; ++y)
                for (int bb = 0; bb < s.d_b; ++bb)
                    m(x * s.d_a + a, y * s.d_b + bb) = b(x, y, a, bb);
    return {MatrixKind::input_major, s, std::move(m)};
}

BehaviourMatrix output_major_matrix(const Behaviour &b) {
    const Scenario &s = b.scenario();
    Eigen::MatrixXd m(s.n_a(), s.n_b());
    for (int x = 0; x < s.m_a; ++x)
        for (int a = 0; a < s.d_a; ++a)
            for (int y = 0; y < s.m_b; ++y)
                for (int bb = 0; bb < s.d_b; ++bb)
                    m(a * s.m_a + x, bb * s.m_b + y) = b(x, y, a, bb);
    return {MatrixKind::output_major, s, std::move(m)};
}

BehaviourMatrix centered_matrix(const Behaviour &b) {
    const Scenario &s = b.scenario();
    MarginalVectors marg = marginal_vectors(b);
    Eigen::MatrixXd m(s.n_a(), s.n_b());
    for (int x = 0; x < s.m_a; ++x)
        for (int a = 0; a < s.d_a; ++a)
            for (int y = 0; y < s.m_b; ++y)
                for (int bb = 0; bb < s.d_b; ++bb)
                    m(x * s.d_a + a, y * s.d_b + bb) =
                        b(x, y, a, bb) - marg.alice(x * s.d_a + a) * marg.bob(y * s.d_b + bb);
    return {MatrixKind::centered, s, std::move(m)};
}

BehaviourMatrix behaviour_matrix(const Behaviour &b, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::input_major:
            return input_major_matrix(b);
        case MatrixKind::output_major:
            return output_major_matrix(b);
        case MatrixKind::centered:
            return centered_matrix(b);
    }
    throw std::invalid_argument("unknown matrix kind");
}

MarginalVectors marginal_vectors(const Behaviour &b) {
    const Scenario &s = b.scenario();
    MarginalVectors marg{Eigen::VectorXd::Zero(s.n_a()), Eigen::VectorXd::Zero(s.n_b())};
    for (int x = 0; x < s.m_a; ++x)
        for (int a = 0; a < s.d_a; ++a) {
            double sum = 0.0;
            for (int y = 0; y < s.m_b; ++y)
                for (int bb = 0; bb < s.d_b; ++bb) sum += b(x, y, a, bb);
            marg.alice(x * s.d_a + a) = sum / s.m_b;
        }
    for (int y = 0; y < s.m_b; ++y)
        for (int bb = 0; bb < s.d_b; ++bb) {
            double sum = 0.0;
            for (int x = 0; x < s.m_a; ++x)
                for (int a = 0; a < s.d_a; ++a) sum += b(x, y, a, bb);
            marg.bob(y * s.d_b + bb) = sum / s.m_a;
        }
    return marg;
}

CorrelatorSummary correlators(const Behaviour &b) {
    const Scenario &s = b.scenario();
    if (!s.two_outcome()) {
        throw std::invalid_argument(
            "correlators need a two-outcome scenario, got " + s.str());
    }
    CorrelatorSummary c;
    c.joint.resize(s.m_a, s.m_b);
    c.alice_mean.resize(s.m_a);
    c.bob_mean.resize(s.m_b);
    MarginalVectors marg = marginal_vectors(b);
    for (int x = 0; x < s.m_a; ++x) c.alice_mean(x) = marg.alice(2 * x) - marg.alice(2 * x + 1);
    for (int y = 0; y < s.m_b; ++y) c.bob_mean(y) = marg.bob(2 * y) - marg.bob(2 * y + 1);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            c.joint(x, y) = b(x, y, 0, 0) - b(x, y, 0, 1) - b(x, y, 1, 0) + b(x, y, 1, 1);
    c.centered = c.joint - c.alice_mean * c.bob_mean.transpose();
    return c;
}

Behaviour behaviour_from_correlators(const Scenario &s, const CorrelatorSummary &c) {
    if (!s.two_outcome()) {
        throw std::invalid_argument(
            "correlator reconstruction needs a two-outcome scenario, got " + s.str());
    }
    if (c.joint.rows() != s.m_a || c.joint.cols() != s.m_b || c.alice_mean.size() != s.m_a ||
        c.bob_mean.size() != s.m_b) {
        throw std::invalid_argument("correlator summary does not match scenario " + s.str());
    }
    Behaviour b(s);
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            for (int a = 0; a < 2; ++a)
                for (int bb = 0; bb < 2; ++bb) {
                    double sa = a == 0 ? 1.0 : -1.0;
                    double sb = bb == 0 ? 1.0 : -1.0;
                    b.at(x, y, a, bb) =
                        (1.0 + sa * c.alice_mean(x) + sb * c.bob_mean(y) + sa * sb * c.joint(x, y)) /
                        4.0;
                }
    return b;
}

}  // namespace bellcone
