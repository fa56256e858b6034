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

#ifndef BELLCONE_NUMLIN_H
#define BELLCONE_NUMLIN_H

#include <Eigen/Dense>
#include <vector>

namespace bellcone {

/// Singular values sorted descending, plus a backward-error estimate
/// ||A - U S V^T||_F / max(1, sigma_max) for the factorization that produced
/// them.
struct SpectrumResult {
    Eigen::VectorXd values;
    double residual = 0.0;
};

/// Computes all singular values to absolute accuracy tol * max(1, sigma_max).
/// Throws std::invalid_argument on non-finite input and std::runtime_error if
/// the backward-error estimate exceeds tol.
SpectrumResult singular_values(const Eigen::MatrixXd &m, double tol = 1e-10);

/// Sum of singular values (Schatten-1 norm).
double trace_norm(const Eigen::MatrixXd &m);

/// Largest singular value (Schatten-infinity / operator norm).
double spectral_norm(const Eigen::MatrixXd &m);

/// Root of the sum of squared entries (Schatten-2 norm).
double frobenius_norm(const Eigen::MatrixXd &m);

/// Smallest eigenvalue of a symmetric matrix. The input must be symmetric to
/// within 1e-10 entrywise; it is symmetrized as (A + A^T)/2 before solving.
double min_eigenvalue_symmetric(const Eigen::MatrixXd &m);

/// Eigenvalues lambda_j = sum_k c_k w_j^k, w_j = exp(2 pi i j / d), of the
/// circulant matrix C(r, s) = c[(s - r) mod d] whose first row is c. On the
/// eigenvector basis v_j = (1, w_j, ..., w_j^{d-1}) / sqrt(d) this is the
/// eigenvalue sequence index by index, so closed-form spectra of circulant
/// blocks can be compared per index, not only as multisets.
Eigen::VectorXcd circulant_eigenvalues(const Eigen::VectorXd &first_row);

/// Assembles the circulant matrix matching the circulant_eigenvalues
/// convention: C(r, s) = c[(s - r) mod d].
Eigen::MatrixXd circulant_from_first_row(const Eigen::VectorXd &first_row);

/// Sum of trace norms of the diagonal blocks cut out by the given partitions
/// (block sizes must be positive and sum to the matrix dimensions, with the
/// same number of row and column blocks). Never exceeds trace_norm(m).
double pinching_lower_bound(const Eigen::MatrixXd &m, const std::vector<int> &row_block_sizes,
                            const std::vector<int> &col_block_sizes);

}  // namespace bellcone

#endif
