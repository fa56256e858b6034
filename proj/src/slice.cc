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

#include "bellcone/slice.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bellcone/generators.h"

namespace bellcone {

namespace {

struct GridAxis {
    double lo = 0.0, hi = 1.0;
    int n = 2;

    double at(int i) const { return lo + (hi - lo) * i / (n - 1); }
};

struct Crossing {
    double q = 0.0, p = 0.0;
};

/// Location on the edge between two corners where the margin interpolates to
/// zero; falls back to the midpoint when the margins give no direction.
Crossing edge_crossing(const SlicePoint &a, const SlicePoint &b) {
    double t = 0.5;
    double delta = a.margin - b.margin;
    if (std::isfinite(delta) && delta != 0.0) {
        t = std::clamp(a.margin / delta, 0.0, 1.0);
    }
    return {a.q + (b.q - a.q) * t, a.p + (b.p - a.p) * t};
}

void add_segment(std::vector<SliceSegment> &out, const Crossing &a, const Crossing &b) {
    out.push_back({a.q, a.p, b.q, b.p});
}

void march_cell(const SlicePoint &c00, const SlicePoint &c10, const SlicePoint &c11,
                const SlicePoint &c01, double tol, std::vector<SliceSegment> &out) {
    int pattern = (c00.satisfied ? 1 : 0) | (c10.satisfied ? 2 : 0) | (c11.satisfied ? 4 : 0) |
                  (c01.satisfied ? 8 : 0);
    if (pattern == 0 || pattern == 15) return;

    Crossing bottom = edge_crossing(c00, c10);
    Crossing right = edge_crossing(c10, c11);
    Crossing top = edge_crossing(c01, c11);
    Crossing left = edge_crossing(c00, c01);

    switch (pattern) {
        case 1:
        case 14:
            add_segment(out, left, bottom);
            break;
        case 2:
        case 13:
            add_segment(out, bottom, right);
            break;
        case 3:
        case 12:
            add_segment(out, left, right);
            break;
        case 4:
        case 11:
            add_segment(out, right, top);
            break;
        case 6:
        case 9:
            add_segment(out, bottom, top);
            break;
        case 7:
        case 8:
            add_segment(out, left, top);
            break;
        case 5: {
            // Saddle: c00 and c11 satisfied. The cell-center verdict decides
            // which pair of corners stays connected.
            double center = (c00.margin + c10.margin + c11.margin + c01.margin) / 4.0;
            if (center >= -tol) {
                add_segment(out, left, top);
                add_segment(out, bottom, right);
            } else {
                add_segment(out, left, bottom);
                add_segment(out, right, top);
            }
            break;
        }
        case 10: {
            // Saddle: c10 and c01 satisfied.
            double center = (c00.margin + c10.margin + c11.margin + c01.margin) / 4.0;
            if (center >= -tol) {
                add_segment(out, left, bottom);
                add_segment(out, right, top);
            } else {
                add_segment(out, bottom, right);
                add_segment(out, left, top);
            }
            break;
        }
        default:
            break;
    }
}

}  // namespace

SliceResult scan_slice(const SliceSpec &spec, const SliceEvaluator &eval, double tol) {
    if (!eval) {
        throw std::invalid_argument("slice evaluator must be callable");
    }
    if (spec.resolution_q < 2 || spec.resolution_p < 2) {
        throw std::invalid_argument("slice resolution must be at least 2 per axis");
    }
    const Scenario &s = spec.p1.scenario();
    if (!(spec.p2.scenario() == s) || !(spec.base.scenario() == s)) {
        throw std::invalid_argument("slice behaviours must share one scenario");
    }

    const GridAxis q_axis{spec.q_min, spec.q_max, spec.resolution_q};
    const GridAxis p_axis{spec.p_min, spec.p_max, spec.resolution_p};

    SliceResult result;
    result.nq = spec.resolution_q;
    result.np = spec.resolution_p;
    result.grid.resize(static_cast<size_t>(result.nq) * result.np);

    const std::array<Behaviour, 3> components{spec.p1, spec.p2, spec.base};

    std::atomic<int> next_row{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto scan_rows = [&]() {
        try {
            for (int iq = next_row.fetch_add(1); iq < result.nq && !failed.load();
                 iq = next_row.fetch_add(1)) {
                double q = q_axis.at(iq);
                for (int ip = 0; ip < result.np; ++ip) {
                    double p = p_axis.at(ip);
                    std::array<double, 3> weights{q, p, 1.0 - p - q};
                    Behaviour mixed = mix(weights, components, /*allow_signed=*/true);
                    SlicePoint &pt = result.grid[static_cast<size_t>(iq) * result.np + ip];
                    pt.q = q;
                    pt.p = p;
                    pt.valid = validate(mixed, spec.validation_tol).valid();
                    auto [measured, margin] = eval(mixed);
                    pt.measured = measured;
                    pt.margin = margin;
                    pt.satisfied = margin >= -tol;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            failed.store(true);
        }
    };

    int requested = spec.threads > 0 ? spec.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    int n_threads = std::clamp(requested, 1, result.nq);
    if (n_threads <= 1) {
        scan_rows();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(scan_rows);
        for (std::thread &t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    auto at = [&](int iq, int ip) -> const SlicePoint & {
        return result.grid[static_cast<size_t>(iq) * result.np + ip];
    };
    for (int iq = 0; iq + 1 < result.nq; ++iq) {
        for (int ip = 0; ip + 1 < result.np; ++ip) {
            march_cell(at(iq, ip), at(iq + 1, ip), at(iq + 1, ip + 1), at(iq, ip + 1), tol,
                       result.boundary);
        }
    }
    return result;
}

SliceEvaluator condition_evaluator(ConditionId id, std::optional<BellExpression> expression,
                                   std::optional<Eigen::MatrixXd> correlator_coeffs, double tol) {
    const bool wants_correlator_coeffs = condition_uses_correlators(id);
    if (condition_needs_expression(id)) {
        if (wants_correlator_coeffs && !correlator_coeffs) {
            throw std::invalid_argument(std::string(condition_token(id)) +
                                        " requires per-input-pair correlator coefficients");
        }
        if (!wants_correlator_coeffs && !expression) {
            throw std::invalid_argument(std::string(condition_token(id)) +
                                        " requires a Bell expression");
        }
    }

    auto from_report = [](const ConditionReport &r) { return std::pair(r.measured, r.margin); };
    switch (id) {
        case ConditionId::trace_norm_p:
            return [tol, from_report](const Behaviour &b) {
                return from_report(check_trace_norm_bound(b, tol));
            };
        case ConditionId::trace_norm_centered:
            return [tol, from_report](const Behaviour &b) {
                return from_report(check_centered_trace_norm_bound(b, tol));
            };
        case ConditionId::corr_norm:
            return [tol, from_report](const Behaviour &b) {
                return from_report(check_correlator_norm_bound(b, tol));
            };
        case ConditionId::corr_norm_centered:
            return [tol, from_report](const Behaviour &b) {
                return from_report(check_centered_correlator_norm_bound(b, tol));
            };
        case ConditionId::functional_p:
            return [tol, from_report, g = std::move(*expression)](const Behaviour &b) {
                return from_report(raw_functional_report(b, g, tol));
            };
        case ConditionId::functional_centered:
            return [tol, from_report, g = std::move(*expression)](const Behaviour &b) {
                return from_report(centered_functional_report(b, g, tol));
            };
        case ConditionId::corr_functional:
            return [tol, from_report, c = std::move(*correlator_coeffs)](const Behaviour &b) {
                return from_report(correlator_functional_report(b, c, tol));
            };
        case ConditionId::corr_functional_centered:
            return [tol, from_report, c = std::move(*correlator_coeffs)](const Behaviour &b) {
                return from_report(centered_correlator_functional_report(b, c, tol));
            };
    }
    throw std::invalid_argument("unknown condition");
}

SliceEvaluator bell_threshold_evaluator(BellExpression g, double threshold) {
    return [g = std::move(g), threshold](const Behaviour &b) {
        double value = evaluate(g, b);
        return std::pair(value, threshold - value);
    };
}

}  // namespace bellcone
