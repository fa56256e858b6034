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

#include "bellcone/numlin.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace bellcone {

namespace {

void require_finite(const Eigen::MatrixXd &m) {
    if (!m.allFinite()) {
        throw std::invalid_argument("matrix has non-finite entries");
    }
}

}  // namespace

SpectrumResult singular_values(const Eigen::MatrixXd &m, double tol) {
    require_finite(m);
    if (m.size() == 0) {
        throw std::invalid_argument("matrix is empty");
    }

    Eigen::MatrixXd u, v;
    Eigen::VectorXd sigma;
    if (m.rows() < 16 && m.cols() < 16) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        sigma = svd.singularValues();
        u = svd.matrixU();
        v = svd.matrixV();
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        sigma = svd.singularValues();
        u = svd.matrixU();
        v = svd.matrixV();
    }

    double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    double residual =
        (m - u * sigma.asDiagonal() * v.transpose()).norm() / std::max(1.0, sigma_max);
    if (residual > tol) {
        throw std::runtime_error("singular value factorization residual " +
                                 std::to_string(residual) + " exceeds tolerance " +
                                 std::to_string(tol));
    }
    return {std::move(sigma), residual};
}

double trace_norm(const Eigen::MatrixXd &m) {
    return singular_values(m).values.sum();
}

double spectral_norm(const Eigen::MatrixXd &m) {
    return singular_values(m).values(0);
}

double frobenius_norm(const Eigen::MatrixXd &m) {
    require_finite(m);
    return m.norm();
}

double min_eigenvalue_symmetric(const Eigen::MatrixXd &m) {
    require_finite(m);
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matrix is not square");
    }
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw std::invalid_argument("matrix is asymmetric by " + std::to_string(asym) +
                                    ", beyond the 1e-10 tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigenvalue solve failed");
    }
    return solver.eigenvalues()(0);
}

Eigen::VectorXcd circulant_eigenvalues(const Eigen::VectorXd &first_row) {
    if (first_row.size() == 0) {
        throw std::invalid_argument("circulant symbol is empty");
    }
    const int d = static_cast<int>(first_row.size());
    Eigen::VectorXcd lambda(d);
    for (int j = 0; j < d; ++j) {
        std::complex<double> sum = 0.0;
        for (int k = 0; k < d; ++k) {
            // Reduce j*k mod d before taking the phase so large products do
            // not lose precision.
            double angle = 2.0 * std::numbers::pi * ((j * k) % d) / d;
            sum += first_row(k) * std::polar(1.0, angle);
        }
        lambda(j) = sum;
    }
    return lambda;
}

Eigen::MatrixXd circulant_from_first_row(const Eigen::VectorXd &first_row) {
    const int d = static_cast<int>(first_row.size());
    Eigen::MatrixXd c(d, d);
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) c(r, s) = first_row(((s - r) % d + d) % d);
    return c;
}

double pinching_lower_bound(const Eigen::MatrixXd &m, const std::vector<int> &row_block_sizes,
                            const std::vector<int> &col_block_sizes) {
    if (row_block_sizes.size() != col_block_sizes.size() || row_block_sizes.empty()) {
        throw std::invalid_argument("row and column partitions need the same nonzero block count");
    }
    auto check = [](const std::vector<int> &sizes, Eigen::Index total, const char *which) {
        long long sum = 0;
        for (int s : sizes) {
            if (s <= 0) throw std::invalid_argument(std::string(which) + " block size not positive");
            sum += s;
        }
        if (sum != total) {
            throw std::invalid_argument(std::string(which) + " blocks sum to " +
                                        std::to_string(sum) + ", expected " +
                                        std::to_string(total));
        }
    };
    check(row_block_sizes, m.rows(), "row");
    check(col_block_sizes, m.cols(), "column");

    double total = 0.0;
    int r0 = 0, c0 = 0;
    for (std::size_t k = 0; k < row_block_sizes.size(); ++k) {
        total += trace_norm(m.block(r0, c0, row_block_sizes[k], col_block_sizes[k]));
        r0 += row_block_sizes[k];
        c0 += col_block_sizes[k];
    }
    return total;
}

}  // namespace bellcone
