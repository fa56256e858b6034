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
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "bellcone/bell.h"
#include "bellcone/closed_forms.h"
#include "bellcone/generators.h"
#include "bellcone/matrices.h"
#include "bellcone/numlin.h"
#include "test_helpers.h"

using namespace bellcone;
using bellcone::testing::random_matrix;

namespace {

std::vector<std::complex<double>> sorted_complex(Eigen::VectorXcd v) {
    std::vector<std::complex<double>> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end(), [](const auto &l, const auto &r) {
        if (std::abs(l.real() - r.real()) > 1e-12) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    return out;
}

}  // namespace

TEST_CASE("singular values of simple matrices") {
    SpectrumResult id = singular_values(Eigen::MatrixXd::Identity(4, 4));
    REQUIRE(id.values.size() == 4);
    CHECK((id.values.array() - 1.0).abs().maxCoeff() < 1e-12);
    CHECK(id.residual < 1e-12);

    SpectrumResult zero = singular_values(Eigen::MatrixXd::Zero(3, 5));
    CHECK(zero.values.cwiseAbs().maxCoeff() == 0.0);

    Eigen::MatrixXd rect(2, 3);
    rect << 1.0, 0.0, 0.0,
            0.0, 2.0, 0.0;
    SpectrumResult r = singular_values(rect);
    REQUIRE(r.values.size() == 2);
    CHECK(r.values(0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.values(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("singular values are sorted and match large-dimension identities") {
    std::mt19937_64 rng(5);
    Eigen::MatrixXd m = random_matrix(rng, 40, 25);  // exercises the large-dim branch
    SpectrumResult r = singular_values(m);
    REQUIRE(r.values.size() == 25);
    for (int i = 1; i < r.values.size(); ++i) CHECK(r.values(i - 1) >= r.values(i) - 1e-14);
    CHECK(r.values.cwiseAbs2().sum() == doctest::Approx(m.squaredNorm()).epsilon(1e-10));
}

TEST_CASE("singular values reject non-finite input") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(singular_values(m), std::invalid_argument);
    m(0, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(trace_norm(m), std::invalid_argument);
}

TEST_CASE("trace norm of named behaviour matrices") {
    CHECK(trace_norm(input_major_matrix(pr_box_2d(2)).data) ==
          doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));

    // d = 3 maximally entangled singular values: 2j/9 and 2(3-j)/9.
    SpectrumResult r = singular_values(input_major_matrix(max_ent_behaviour(3)).data);
    std::vector<double> expected = {2.0 / 3.0, 4.0 / 9.0, 4.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 0.0};
    REQUIRE(r.values.size() == static_cast<int>(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(r.values(static_cast<int>(i)) - expected[i]) < 1e-10);
    }
}

TEST_CASE("frobenius norm of the d-outcome box is 2 over root d") {
    for (int d = 2; d <= 8; ++d) {
        double got = frobenius_norm(input_major_matrix(pr_box_2d(d)).data);
        CHECK(got == doctest::Approx(2.0 / std::sqrt(static_cast<double>(d))).epsilon(1e-12));
    }
}

TEST_CASE("spectral norm of the two-input correlator expression") {
    // The coefficient matrix splits into rank-two pieces of norm 2 sqrt 2.
    CHECK(spectral_norm(chsh_expression().coeffs) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(spectral_norm(chsh_shifted_expression().coeffs) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("minimum eigenvalue of symmetric matrices") {
    CHECK(min_eigenvalue_symmetric(Eigen::MatrixXd::Identity(3, 3)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
    diag(0, 0) = -2.0;
    diag(1, 1) = 3.0;
    CHECK(min_eigenvalue_symmetric(diag) == doctest::Approx(-2.0).epsilon(1e-12));

    Eigen::MatrixXd rank_one(2, 2);
    rank_one << 1.0, 1.0, 1.0, 1.0;
    CHECK(std::abs(min_eigenvalue_symmetric(rank_one)) < 1e-12);

    Eigen::MatrixXd skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(min_eigenvalue_symmetric(skew), std::invalid_argument);
}

TEST_CASE("circulant eigenvalues follow the per-index convention") {
    // First row (0,0,0,1): lambda_j = w_j^3 with w_j = i^j.
    Eigen::VectorXd shift(4);
    shift << 0.0, 0.0, 0.0, 1.0;
    Eigen::VectorXcd eigs = circulant_eigenvalues(shift);
    REQUIRE(eigs.size() == 4);
    const std::complex<double> i(0.0, 1.0);
    CHECK(std::abs(eigs(0) - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(eigs(1) - (-i)) < 1e-12);
    CHECK(std::abs(eigs(2) - std::complex<double>(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(eigs(3) - i) < 1e-12);

    // As a multiset these are the fourth roots of unity.
    auto sorted = sorted_complex(eigs);
    auto expected = sorted_complex((Eigen::VectorXcd(4) << std::complex<double>(1, 0), i,
                                    std::complex<double>(-1, 0), -i)
                                       .finished());
    for (std::size_t k = 0; k < sorted.size(); ++k) CHECK(std::abs(sorted[k] - expected[k]) < 1e-12);
}

TEST_CASE("circulant eigenvectors are the fourier basis") {
    std::mt19937_64 rng(17);
    for (int d : {2, 3, 5, 8}) {
        Eigen::VectorXd first_row = random_matrix(rng, d, 1).col(0);
        Eigen::MatrixXd c = circulant_from_first_row(first_row);
        // Assembled matrix matches the stated convention C(r,s) = c[(s-r) mod d].
        for (int r = 0; r < d; ++r) {
            for (int s = 0; s < d; ++s) CHECK(c(r, s) == first_row(((s - r) % d + d) % d));
        }
        Eigen::VectorXcd eigs = circulant_eigenvalues(first_row);
        for (int j = 0; j < d; ++j) {
            Eigen::VectorXcd v(d);
            for (int k = 0; k < d; ++k) {
                v(k) = std::polar(1.0, 2.0 * M_PI * j * k / d) / std::sqrt(static_cast<double>(d));
            }
            CHECK((c.cast<std::complex<double>>() * v - eigs(j) * v).norm() < 1e-10);
        }
    }
}

TEST_CASE("constant circulant rows concentrate on the zero frequency") {
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(6);
    Eigen::VectorXcd eigs = circulant_eigenvalues(ones);
    CHECK(std::abs(eigs(0) - std::complex<double>(6.0, 0.0)) < 1e-12);
    for (int j = 1; j < 6; ++j) CHECK(std::abs(eigs(j)) < 1e-10);
}

TEST_CASE("circulant eigenvalues agree with a dense eigensolver") {
    std::mt19937_64 rng(29);
    for (int d : {2, 3, 7, 16, 33, 64}) {
        Eigen::VectorXd first_row = random_matrix(rng, d, 1).col(0);
        Eigen::MatrixXd c = circulant_from_first_row(first_row);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c.cast<std::complex<double>>());
        REQUIRE(solver.info() == Eigen::Success);
        auto fast = sorted_complex(circulant_eigenvalues(first_row));
        auto dense = sorted_complex(solver.eigenvalues());
        REQUIRE(fast.size() == dense.size());
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(std::abs(fast[k] - dense[k]) < 1e-8);
    }
}

TEST_CASE("maximally entangled blocks are circulant with the documented spectra") {
    int d = 3;
    Eigen::MatrixXd m = input_major_matrix(max_ent_behaviour(d)).data;
    MaxEntSpectrum spectrum = max_ent_spectrum(d);
    // Input block (1,1) carries lambda_a, (1,2) lambda_b, (2,1) lambda_c.
    struct Case {
        int bx, by;
        const std::vector<std::complex<double>> *eigs;
    };
    std::vector<Case> cases = {{0, 0, &spectrum.lambda_a},
                               {0, 1, &spectrum.lambda_b},
                               {1, 0, &spectrum.lambda_c}};
    for (const Case &cs : cases) {
        Eigen::MatrixXd block = m.block(cs.bx * d, cs.by * d, d, d);
        Eigen::VectorXd first_row = block.row(0).transpose();
        CHECK((block - circulant_from_first_row(first_row)).cwiseAbs().maxCoeff() < 1e-12);
        Eigen::VectorXcd eigs = circulant_eigenvalues(first_row);
        for (int j = 0; j < d; ++j) CHECK(std::abs(eigs(j) - (*cs.eigs)[j]) < 1e-10);
    }
}

TEST_CASE("pinching bounds for the two-outcome box") {
    Eigen::MatrixXd input = input_major_matrix(pr_box_2d(2)).data;
    CHECK(pinching_lower_bound(input, {2, 2}, {2, 2}) == doctest::Approx(2.0).epsilon(1e-12));

    Eigen::MatrixXd output = output_major_matrix(pr_box_2d(2)).data;
    CHECK(pinching_lower_bound(output, {2, 2}, {2, 2}) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("pinching is tight on block-diagonal matrices") {
    std::mt19937_64 rng(41);
    Eigen::MatrixXd a = random_matrix(rng, 3, 3);
    Eigen::MatrixXd b = random_matrix(rng, 2, 2);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
    m.topLeftCorner(3, 3) = a;
    m.bottomRightCorner(2, 2) = b;
    CHECK(pinching_lower_bound(m, {3, 2}, {3, 2}) ==
          doctest::Approx(trace_norm(m)).epsilon(1e-10));
}

TEST_CASE("pinching never exceeds the trace norm") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> dim(2, 9);
    for (int trial = 0; trial < 500; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        Eigen::MatrixXd m = random_matrix(rng, rows, cols);
        auto partition = [&rng](int total) {
            std::vector<int> sizes;
            std::uniform_int_distribution<int> cut(1, 2);
            int used = 0;
            while (used < total) {
                int s = std::min(cut(rng), total - used);
                sizes.push_back(s);
                used += s;
            }
            return sizes;
        };
        std::vector<int> row_sizes = partition(rows);
        std::vector<int> col_sizes = partition(cols);
        while (row_sizes.size() > col_sizes.size()) {
            row_sizes[row_sizes.size() - 2] += row_sizes.back();
            row_sizes.pop_back();
        }
        while (col_sizes.size() > row_sizes.size()) {
            col_sizes[col_sizes.size() - 2] += col_sizes.back();
            col_sizes.pop_back();
        }
        CHECK(pinching_lower_bound(m, row_sizes, col_sizes) <= trace_norm(m) + 1e-9);
    }
}

TEST_CASE("pinching validates its partitions") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
    CHECK_THROWS_AS(pinching_lower_bound(m, {2, 1}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(pinching_lower_bound(m, {2, 2}, {3, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(pinching_lower_bound(m, {4}, {2, 2}), std::invalid_argument);
}

TEST_CASE("schatten norms respect permutations and standard inequalities") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::MatrixXd m = random_matrix(rng, 6, 5);
        Eigen::PermutationMatrix<Eigen::Dynamic> rows(6), cols(5);
        rows.setIdentity();
        cols.setIdentity();
        std::shuffle(rows.indices().data(), rows.indices().data() + 6, rng);
        std::shuffle(cols.indices().data(), cols.indices().data() + 5, rng);
        Eigen::MatrixXd permuted = rows * m * cols;
        CHECK(trace_norm(permuted) == doctest::Approx(trace_norm(m)).epsilon(1e-10));
        CHECK(spectral_norm(permuted) == doctest::Approx(spectral_norm(m)).epsilon(1e-10));
        CHECK(frobenius_norm(permuted) == doctest::Approx(frobenius_norm(m)).epsilon(1e-12));

        Eigen::MatrixXd n = random_matrix(rng, 6, 5);
        CHECK(trace_norm(m + n) <= trace_norm(m) + trace_norm(n) + 1e-10);
        CHECK(spectral_norm(m) <= frobenius_norm(m) + 1e-12);
        CHECK(frobenius_norm(m) <= trace_norm(m) + 1e-12);
        CHECK(trace_norm(m) <= std::sqrt(5.0) * frobenius_norm(m) + 1e-10);
    }
}
