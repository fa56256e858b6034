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

#include "bellcone/bell.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include "bellcone/numlin.h"

namespace bellcone {

namespace {

constexpr double kLocalBoundGuard = 1e7;

double offset_total(const AffineForm &form) {
    return form.block_offsets.sum();
}

void require_form(const AffineForm &form, const Scenario &s) {
    if (form.block_offsets.rows() != s.m_a || form.block_offsets.cols() != s.m_b) {
        throw std::invalid_argument("affine offsets must be one value per input pair");
    }
    if (!(form.scale > 0.0)) {
        throw std::invalid_argument("affine scale must be positive");
    }
}

}  // namespace

BellExpression make_expression(const Scenario &s, Eigen::MatrixXd coeffs, std::string name) {
    if (coeffs.rows() != s.n_a() || coeffs.cols() != s.n_b()) {
        throw std::invalid_argument(
            "expression matrix is " + std::to_string(coeffs.rows()) + "x" +
            std::to_string(coeffs.cols()) + ", scenario " + s.str() + " needs " +
            std::to_string(s.n_a()) + "x" + std::to_string(s.n_b()));
    }
    return {s, std::move(coeffs), std::move(name)};
}

double evaluate(const BellExpression &g, const Behaviour &b) {
    if (!(g.scenario == b.scenario())) {
        throw std::invalid_argument("expression scenario " + g.scenario.str() +
                                    " does not match behaviour scenario " + b.scenario().str());
    }
    const Scenario &s = g.scenario;
    double total = 0.0;
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            for (int a = 0; a < s.d_a; ++a)
                for (int bb = 0; bb < s.d_b; ++bb)
                    total += b(x, y, a, bb) * g.coeffs(x * s.d_a + a, y * s.d_b + bb);
    return total;
}

double local_bound(const BellExpression &g) {
    const Scenario &s = g.scenario;
    double combos = std::pow(static_cast<double>(s.d_a), s.m_a) *
                    std::pow(static_cast<double>(s.d_b), s.m_b);
    if (combos > kLocalBoundGuard) {
        throw std::invalid_argument("deterministic enumeration of " + std::to_string(combos) +
                                    " strategies exceeds the 1e7 guard");
    }

    // For a fixed strategy of one party the other party optimizes each input
    // independently, so only the smaller deterministic family is enumerated.
    bool enumerate_bob =
        std::pow(static_cast<double>(s.d_b), s.m_b) <= std::pow(static_cast<double>(s.d_a), s.m_a);
    const Eigen::MatrixXd &c = g.coeffs;

    std::uint64_t outer_count = 1;
    int outer_inputs = enumerate_bob ? s.m_b : s.m_a;
    int outer_outcomes = enumerate_bob ? s.d_b : s.d_a;
    for (int i = 0; i < outer_inputs; ++i) outer_count *= static_cast<std::uint64_t>(outer_outcomes);

    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> choice(outer_inputs);
    for (std::uint64_t index = 0; index < outer_count; ++index) {
        std::uint64_t rest = index;
        for (int i = 0; i < outer_inputs; ++i) {
            choice[i] = static_cast<int>(rest % outer_outcomes);
            rest /= outer_outcomes;
        }
        double value = 0.0;
        if (enumerate_bob) {
            for (int x = 0; x < s.m_a; ++x) {
                double row_best = -std::numeric_limits<double>::infinity();
                for (int a = 0; a < s.d_a; ++a) {
                    double v = 0.0;
                    for (int y = 0; y < s.m_b; ++y)
                        v += c(x * s.d_a + a, y * s.d_b + choice[y]);
                    row_best = std::max(row_best, v);
                }
                value += row_best;
            }
        } else {
            for (int y = 0; y < s.m_b; ++y) {
                double col_best = -std::numeric_limits<double>::infinity();
                for (int bb = 0; bb < s.d_b; ++bb) {
                    double v = 0.0;
                    for (int x = 0; x < s.m_a; ++x)
                        v += c(x * s.d_a + choice[x], y * s.d_b + bb);
                    col_best = std::max(col_best, v);
                }
                value += col_best;
            }
        }
        best = std::max(best, value);
    }
    return best;
}

BellExpression affine_apply(const BellExpression &g, const AffineForm &form) {
    require_form(form, g.scenario);
    const Scenario &s = g.scenario;
    Eigen::MatrixXd out = form.scale * g.coeffs;
    for (int x = 0; x < s.m_a; ++x)
        for (int y = 0; y < s.m_b; ++y)
            out.block(x * s.d_a, y * s.d_b, s.d_a, s.d_b).array() += form.block_offsets(x, y);
    std::string name = g.name.empty() ? "" : g.name + "-rewritten";
    return {s, std::move(out), std::move(name)};
}

double tsirelson_bound_via(const AffineForm &form, const BellExpression &g) {
    BellExpression shifted = affine_apply(g, form);
    const Scenario &s = g.scenario;
    double root = std::sqrt(static_cast<double>(s.m_a) * s.m_b);
    return (spectral_norm(shifted.coeffs) * root - offset_total(form)) / form.scale;
}

TsirelsonSearchResult tsirelson_bound_search(const BellExpression &g,
                                             const TsirelsonSearchSpec &spec) {
    const Scenario &s = g.scenario;
    if (spec.offset_values.empty() && spec.random_offsets <= 0) {
        throw std::invalid_argument("rewrite search grid is empty");
    }
    if (!(spec.scale_min > 0.0) || spec.scale_max < spec.scale_min) {
        throw std::invalid_argument("rewrite search needs 0 < scale_min <= scale_max");
    }

    const int cells = s.m_a * s.m_b;
    const double root = std::sqrt(static_cast<double>(s.m_a) * s.m_b);
    const double norm_g = spectral_norm(g.coeffs);

    // Bound as a function of scale for fixed offsets; minimized on a log grid
    // and then by golden-section around the best sample.
    auto bound_at = [&](const Eigen::MatrixXd &offsets, double scale) {
        AffineForm form{offsets, scale};
        BellExpression shifted = affine_apply(g, form);
        return (spectral_norm(shifted.coeffs) * root - offsets.sum()) / scale;
    };

    auto minimize_scale = [&](const Eigen::MatrixXd &offsets) {
        double log_lo = std::log(spec.scale_min);
        double log_hi = std::log(spec.scale_max);
        int samples = std::max(spec.scale_samples, 2);
        double best_scale = spec.scale_min;
        double best_value = std::numeric_limits<double>::infinity();
        for (int i = 0; i < samples; ++i) {
            double scale = std::exp(log_lo + (log_hi - log_lo) * i / (samples - 1));
            double v = bound_at(offsets, scale);
            if (v < best_value) {
                best_value = v;
                best_scale = scale;
            }
        }
        double step = (log_hi - log_lo) / (samples - 1);
        double lo = std::exp(std::log(best_scale) - step);
        double hi = std::exp(std::log(best_scale) + step);
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c1 = hi - phi * (hi - lo);
        double c2 = lo + phi * (hi - lo);
        double f1 = bound_at(offsets, c1);
        double f2 = bound_at(offsets, c2);
        for (int it = 0; it < spec.refine_iterations; ++it) {
            if (f1 <= f2) {
                hi = c2;
                c2 = c1;
                f2 = f1;
                c1 = hi - phi * (hi - lo);
                f1 = bound_at(offsets, c1);
            } else {
                lo = c1;
                c1 = c2;
                f1 = f2;
                c2 = lo + phi * (hi - lo);
                f2 = bound_at(offsets, c2);
            }
        }
        double mid = 0.5 * (lo + hi);
        double v = bound_at(offsets, mid);
        if (v < best_value) {
            best_value = v;
            best_scale = mid;
        }
        return std::pair<double, double>(best_value, best_scale);
    };

    TsirelsonSearchResult best;
    best.form.block_offsets = Eigen::MatrixXd::Zero(s.m_a, s.m_b);
    best.form.scale = 1.0;
    best.bound = norm_g * root;  // identity rewrite

    auto consider = [&](const Eigen::MatrixXd &offsets) {
        auto [value, scale] = minimize_scale(offsets);
        if (value < best.bound) {
            best.bound = value;
            best.form = AffineForm{offsets, scale};
        }
    };

    if (!spec.offset_values.empty()) {
        std::uint64_t combos = 1;
        bool overflow = false;
        for (int i = 0; i < cells; ++i) {
            combos *= spec.offset_values.size();
            if (combos > spec.max_combinations) {
                overflow = true;
                break;
            }
        }
        if (overflow) {
            throw std::invalid_argument("offset grid exceeds the search budget of " +
                                        std::to_string(spec.max_combinations) + " combinations");
        }
        Eigen::MatrixXd offsets(s.m_a, s.m_b);
        for (std::uint64_t index = 0; index < combos; ++index) {
            std::uint64_t rest = index;
            for (int i = 0; i < cells; ++i) {
                offsets(i / s.m_b, i % s.m_b) = spec.offset_values[rest % spec.offset_values.size()];
                rest /= spec.offset_values.size();
            }
            consider(offsets);
        }
    }

    if (spec.random_offsets > 0) {
        std::mt19937_64 rng(spec.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Eigen::MatrixXd offsets(s.m_a, s.m_b);
        for (int draw = 0; draw < spec.random_offsets; ++draw) {
            for (int i = 0; i < cells; ++i) offsets(i / s.m_b, i % s.m_b) = dist(rng);
            consider(offsets);
        }
    }

    return best;
}

BellExpression extremal_bell_from(const BehaviourMatrix &p) {
    const Eigen::MatrixXd &m = p.data;
    if (m.size() == 0 || !m.allFinite()) {
        throw std::invalid_argument("behaviour matrix is empty or non-finite");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &sigma = svd.singularValues();
    double cutoff = sigma.size() > 0 ? sigma(0) * 1e-12 : 0.0;
    if (sigma.size() == 0 || sigma(0) <= 0.0) {
        throw std::invalid_argument("cannot build an extremal expression from the zero matrix");
    }
    int rank = 0;
    while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
    Eigen::MatrixXd g =
        svd.matrixU().leftCols(rank) * svd.matrixV().leftCols(rank).transpose();
    return {p.scenario, std::move(g), "extremal"};
}

namespace {

Eigen::MatrixXd chsh_coeffs() {
    Eigen::MatrixXd h(2, 2);
    h << 1, -1, -1, 1;
    Eigen::MatrixXd g(4, 4);
    g.block(0, 0, 2, 2) = h;
    g.block(0, 2, 2, 2) = h;
    g.block(2, 0, 2, 2) = h;
    g.block(2, 2, 2, 2) = -h;
    return g;
}

}  // namespace

BellExpression chsh_expression() {
    return {Scenario(2, 2, 2, 2), chsh_coeffs(), "g_chsh"};
}

BellExpression chsh_shifted_expression() {
    Eigen::MatrixXd g = chsh_coeffs() / (2.0 * std::numbers::sqrt2);
    g.block(0, 0, 2, 2).array() += 0.5;
    g.block(2, 2, 2, 2).array() += 0.5;
    return {Scenario(2, 2, 2, 2), std::move(g), "g_chsh_shifted"};
}

BellExpression phi3_expression() {
    // Circulant blocks [[Ga, Gb], [Gc, Ga]] mirroring the block structure of
    // the d = 3 maximally entangled behaviour it is extremal for.
    const double p = (2.0 + std::numbers::sqrt3) / 6.0;
    const double m = (2.0 - std::numbers::sqrt3) / 6.0;
    const double z = -1.0 / 6.0;
    auto circ = [](double c0, double c1, double c2) {
        Eigen::MatrixXd blk(3, 3);
        blk << c0, c1, c2, c2, c0, c1, c1, c2, c0;
        return blk;
    };
    Eigen::MatrixXd g(6, 6);
    g.block(0, 0, 3, 3) = circ(p, z, m);
    g.block(0, 3, 3, 3) = circ(p, m, z);
    g.block(3, 0, 3, 3) = circ(z, p, m);
    g.block(3, 3, 3, 3) = circ(p, z, m);
    return {Scenario(2, 2, 3, 3), std::move(g), "g_phi3"};
}

std::vector<BellExpression> expression_catalog() {
    return {chsh_expression(), chsh_shifted_expression(), phi3_expression()};
}

std::optional<BellExpression> expression_by_name(const std::string &name) {
    for (BellExpression &g : expression_catalog()) {
        if (g.name == name) return std::move(g);
    }
    return std::nullopt;
}

}  // namespace bellcone
