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

#include "bellcone/closed_forms.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bellcone {

namespace {

constexpr double kPoleGuard = 1e-6;

void require_dft_args(double theta, int j, int d) {
    if (d < 1) {
        throw std::invalid_argument("dimension must be positive, got " + std::to_string(d));
    }
    if (j < 0 || j >= d) {
        throw std::invalid_argument("frequency index " + std::to_string(j) +
                                    " outside [0, " + std::to_string(d) + ")");
    }
    if (std::abs(theta - std::round(theta)) <= kPoleGuard) {
        throw std::invalid_argument("theta = " + std::to_string(theta) +
                                    " is too close to an integer pole");
    }
}

}  // namespace

std::complex<double> inv_sin2_dft_direct(double theta, int j, int d) {
    require_dft_args(theta, j, d);
    const double pi = std::numbers::pi;
    std::complex<double> sum = 0.0;
    for (int k = 0; k < d; ++k) {
        double s = std::sin(pi * (k + theta) / d);
        double angle = 2.0 * pi * static_cast<double>(j) * k / d;
        sum += std::polar(1.0, angle) / (s * s);
    }
    return sum;
}

std::complex<double> inv_sin2_dft_closed(double theta, int j, int d) {
    require_dft_args(theta, j, d);
    const double pi = std::numbers::pi;
    std::complex<double> w = std::polar(1.0, -2.0 * pi * theta);
    std::complex<double> phase = std::polar(1.0, -2.0 * pi * j * theta / d);
    std::complex<double> denom = (1.0 - w) * (1.0 - w);
    return -4.0 * static_cast<double>(d) * phase *
           (static_cast<double>(j) + w * static_cast<double>(d - j)) / denom;
}

MaxEntSpectrum max_ent_spectrum(int d) {
    if (d < 2) {
        throw std::invalid_argument("maximally entangled spectrum requires d >= 2, got " +
                                    std::to_string(d));
    }
    const double pi = std::numbers::pi;
    const double dd = static_cast<double>(d) * d;
    const std::complex<double> i(0.0, 1.0);

    MaxEntSpectrum spec;
    spec.d = d;
    spec.lambda_a.resize(d);
    spec.lambda_b.resize(d);
    spec.lambda_c.resize(d);
    spec.lambda_minus.resize(d);
    spec.lambda_plus.resize(d);
    spec.sigma_minus.resize(d);
    spec.sigma_plus.resize(d);

    for (int j = 0; j < d; ++j) {
        std::complex<double> lead(static_cast<double>(j), static_cast<double>(d - j));
        std::complex<double> lead_conj(static_cast<double>(j), -static_cast<double>(d - j));
        spec.lambda_a[j] = -i * std::polar(1.0, pi * j / (2.0 * d)) * lead / dd;
        spec.lambda_b[j] = i * std::polar(1.0, -pi * j / (2.0 * d)) * lead_conj / dd;
        spec.lambda_c[j] = i * std::polar(1.0, 3.0 * pi * j / (2.0 * d)) * lead_conj / dd;
        std::complex<double> root = std::sqrt(spec.lambda_b[j] * spec.lambda_c[j]);
        spec.lambda_minus[j] = spec.lambda_a[j] - root;
        spec.lambda_plus[j] = spec.lambda_a[j] + root;
        spec.sigma_minus[j] = 2.0 * j / dd;
        spec.sigma_plus[j] = 2.0 * (d - j) / dd;
    }
    return spec;
}

double max_ent_trace_norm_closed(int d) {
    if (d < 2) {
        throw std::invalid_argument("maximally entangled spectrum requires d >= 2, got " +
                                    std::to_string(d));
    }
    // sum_j (2j + 2(d-j))/d^2 simplifies to 2 independently of d.
    return 2.0;
}

}  // namespace bellcone
