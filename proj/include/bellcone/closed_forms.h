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

#ifndef BELLCONE_CLOSED_FORMS_H
#define BELLCONE_CLOSED_FORMS_H

#include <complex>
#include <vector>

namespace bellcone {

/// Exact spectral data for the maximally entangled behaviour on dimension d.
///
/// The output-major arrangement of that behaviour is built from three d x d
/// circulant blocks. Their per-index eigenvalues (on the eigenvector
/// convention v_j = (1, w_j, ..., w_j^{d-1})/sqrt(d), w_j = exp(2*pi*i*j/d))
/// admit closed forms, and so do the 2d singular values of the full matrix.
struct MaxEntSpectrum {
    int d = 0;
    /// Eigenvalues of the three distinct circulant blocks, indexed by j.
    std::vector<std::complex<double>> lambda_a;
    std::vector<std::complex<double>> lambda_b;
    std::vector<std::complex<double>> lambda_c;
    /// Combined block eigenvalues lambda_a[j] +/- sqrt(lambda_b[j]*lambda_c[j])
    /// (principal square root).
    std::vector<std::complex<double>> lambda_minus;
    std::vector<std::complex<double>> lambda_plus;
    /// Singular values in closed form: sigma_minus[j] = 2j/d^2,
    /// sigma_plus[j] = 2(d-j)/d^2. As a multiset, {|lambda_minus[j]|,
    /// |lambda_plus[j]|} equals {sigma_minus[j], sigma_plus[j]} for each j.
    std::vector<double> sigma_minus;
    std::vector<double> sigma_plus;
};

/// DFT of the sequence k -> 1/sin^2(pi*(k+theta)/d) at frequency j, summed
/// directly: sum_k exp(2*pi*i*j*k/d) / sin^2(pi*(k+theta)/d).
///
/// theta must stay away from integers (pole guard |theta - round(theta)| >
/// 1e-6), otherwise std::invalid_argument is thrown. Requires d >= 1 and
/// 0 <= j < d.
std::complex<double> inv_sin2_dft_direct(double theta, int j, int d);

/// Same sum evaluated via its closed form
/// -4*d*exp(-2*pi*i*j*theta/d) * (j + exp(-2*pi*i*theta)*(d-j))
///   / (1 - exp(-2*pi*i*theta))^2.
std::complex<double> inv_sin2_dft_closed(double theta, int j, int d);

/// Closed-form eigenvalues of the maximally entangled behaviour's circulant
/// blocks and the resulting singular values. The blocks correspond to the
/// inverse-sine-squared sums at theta = -1/4, +1/4 and -3/4 with prefactor
/// 1/(2*d^3). Requires d >= 2.
MaxEntSpectrum max_ent_spectrum(int d);

/// Trace norm of the maximally entangled behaviour's matrix arrangement in
/// closed form: sum_j (sigma_minus[j] + sigma_plus[j]) = 2 for every d >= 2.
double max_ent_trace_norm_closed(int d);

}  // namespace bellcone

#endif  // BELLCONE_CLOSED_FORMS_H
