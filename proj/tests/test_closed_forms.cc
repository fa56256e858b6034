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

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "bellcone/closed_forms.h"
#include "bellcone/generators.h"
#include "bellcone/matrices.h"
#include "bellcone/numlin.h"

using namespace bellcone;

namespace {

double pair_mismatch(double a1, double a2, double b1, double b2) {
    double direct = std::max(std::abs(a1 - b1), std::abs(a2 - b2));
    double swapped = std::max(std::abs(a1 - b2), std::abs(a2 - b1));
    return std::min(direct, swapped);
}

}  // namespace

TEST_CASE("the quarter-shift sums are twice d squared at zero frequency") {
    for (int d : {1, 2, 3, 5, 9, 16, 40}) {
        for (double theta : {0.25, -0.25, 0.75, -0.75}) {
            std::complex<double> direct = inv_sin2_dft_direct(theta, 0, d);
            std::complex<double> closed = inv_sin2_dft_closed(theta, 0, d);
            CHECK(std::abs(direct - 2.0 * d * d) < 1e-8 * d * d);
            CHECK(std::abs(closed - 2.0 * d * d) < 1e-10 * d * d);
        }
    }
}

TEST_CASE("closed and direct sums agree away from the poles") {
    for (int d : {1, 2, 3, 4, 7, 13, 32, 64}) {
        for (double theta : {0.25, -0.25, 0.75, 0.37, -0.61, 0.501}) {
            for (int j = 0; j < d; ++j) {
                std::complex<double> direct = inv_sin2_dft_direct(theta, j, d);
                std::complex<double> closed = inv_sin2_dft_closed(theta, j, d);
                CHECK(std::abs(direct - closed) <= 1e-8 * d * d);
            }
        }
    }
}

TEST_CASE("near-integer shifts hit the pole guard") {
    CHECK_THROWS_AS(inv_sin2_dft_direct(0.0, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(inv_sin2_dft_direct(1.0, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(inv_sin2_dft_closed(-2.0, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(inv_sin2_dft_closed(1e-7, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(inv_sin2_dft_direct(0.25, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(inv_sin2_dft_direct(0.25, -1, 4), std::invalid_argument);
    CHECK_THROWS_AS(inv_sin2_dft_direct(0.25, 0, 0), std::invalid_argument);
    CHECK_NOTHROW(inv_sin2_dft_closed(0.001, 0, 4));
}

TEST_CASE("spectrum entries reduce to the shifted sums") {
    for (int d : {2, 3, 5, 10}) {
        MaxEntSpectrum spectrum = max_ent_spectrum(d);
        REQUIRE(spectrum.d == d);
        double denom = 2.0 * d * d * d;
        for (int j = 0; j < d; ++j) {
            CHECK(std::abs(spectrum.lambda_a[j] - inv_sin2_dft_closed(-0.25, j, d) / denom) <
                  1e-12);
            CHECK(std::abs(spectrum.lambda_b[j] - inv_sin2_dft_closed(0.25, j, d) / denom) <
                  1e-12);
            CHECK(std::abs(spectrum.lambda_c[j] - inv_sin2_dft_closed(-0.75, j, d) / denom) <
                  1e-12);
            CHECK(std::abs(std::abs(spectrum.lambda_b[j]) - std::abs(spectrum.lambda_c[j])) <
                  1e-12);
        }
    }
    CHECK_THROWS_AS(max_ent_spectrum(1), std::invalid_argument);
}

TEST_CASE("block eigenvalues at small dimension take their exact values") {
    MaxEntSpectrum s2 = max_ent_spectrum(2);
    CHECK(std::abs(s2.lambda_a[0] - 0.5) < 1e-14);
    REQUIRE(s2.sigma_minus.size() == 2);
    REQUIRE(s2.sigma_plus.size() == 2);
    CHECK(s2.sigma_minus[0] == 0.0);
    CHECK(s2.sigma_plus[0] == 1.0);
    CHECK(s2.sigma_minus[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s2.sigma_plus[1] == doctest::Approx(0.5).epsilon(1e-15));

    MaxEntSpectrum s3 = max_ent_spectrum(3);
    std::vector<double> sigma;
    for (int j = 0; j < 3; ++j) {
        sigma.push_back(s3.sigma_minus[j]);
        sigma.push_back(s3.sigma_plus[j]);
    }
    std::sort(sigma.begin(), sigma.end());
    std::vector<double> expected = {0.0, 2.0 / 9.0, 2.0 / 9.0, 4.0 / 9.0, 4.0 / 9.0, 2.0 / 3.0};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(sigma[i] == doctest::Approx(expected[i]).epsilon(1e-14));
    }
}

TEST_CASE("combined eigenvalue magnitudes pair with the singular values") {
    for (int d : {2, 3, 4, 7, 12, 25, 50}) {
        MaxEntSpectrum spectrum = max_ent_spectrum(d);
        for (int j = 0; j < d; ++j) {
            double lm = std::abs(spectrum.lambda_minus[j]);
            double lp = std::abs(spectrum.lambda_plus[j]);
            CHECK(pair_mismatch(lm, lp, spectrum.sigma_minus[j], spectrum.sigma_plus[j]) < 1e-10);
            CHECK(spectrum.sigma_minus[j] == doctest::Approx(2.0 * j / (d * d)).epsilon(1e-15));
            CHECK(spectrum.sigma_plus[j] ==
                  doctest::Approx(2.0 * (d - j) / (d * d)).epsilon(1e-15));
        }
    }
}

TEST_CASE("closed-form eigenvalues match the assembled circulant blocks") {
    for (int d : {2, 3, 7}) {
        MaxEntSpectrum spectrum = max_ent_spectrum(d);
        Eigen::MatrixXd m = input_major_matrix(max_ent_behaviour(d)).data;
        struct Case {
            int bx, by;
            const std::vector<std::complex<double>> *eigs;
        };
        for (const Case &cs : {Case{0, 0, &spectrum.lambda_a}, Case{0, 1, &spectrum.lambda_b},
                               Case{1, 0, &spectrum.lambda_c}, Case{1, 1, &spectrum.lambda_a}}) {
            Eigen::VectorXd first_row = m.block(cs.bx * d, cs.by * d, d, d).row(0).transpose();
            Eigen::VectorXcd eigs = circulant_eigenvalues(first_row);
            for (int j = 0; j < d; ++j) CHECK(std::abs(eigs(j) - (*cs.eigs)[j]) < 1e-9);
        }
    }
}

TEST_CASE("closed-form singular values match a numeric decomposition") {
    for (int d : {2, 3, 5, 9, 17}) {
        MaxEntSpectrum spectrum = max_ent_spectrum(d);
        std::vector<double> closed;
        for (int j = 0; j < d; ++j) {
            closed.push_back(spectrum.sigma_minus[j]);
            closed.push_back(spectrum.sigma_plus[j]);
        }
        std::sort(closed.begin(), closed.end(), std::greater<double>());

        Eigen::VectorXd numeric =
            singular_values(input_major_matrix(max_ent_behaviour(d)).data).values;
        REQUIRE(numeric.size() == 2 * d);
        for (int i = 0; i < numeric.size(); ++i) CHECK(std::abs(numeric(i) - closed[i]) < 1e-8);

        double frob2 = 0.0;
        for (int j = 0; j < d; ++j) {
            frob2 += std::norm(spectrum.lambda_minus[j]) + std::norm(spectrum.lambda_plus[j]);
        }
        double direct = frobenius_norm(input_major_matrix(max_ent_behaviour(d)).data);
        CHECK(frob2 == doctest::Approx(direct * direct).epsilon(1e-9));
    }
}

TEST_CASE("the closed-form trace norm is two for every dimension") {
    for (int d = 2; d <= 60; ++d) {
        CHECK(max_ent_trace_norm_closed(d) == 2.0);
        MaxEntSpectrum spectrum = max_ent_spectrum(d);
        double sum = 0.0;
        for (int j = 0; j < d; ++j) sum += spectrum.sigma_minus[j] + spectrum.sigma_plus[j];
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-12));
    }
}
