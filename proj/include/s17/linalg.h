// Copyright 2026 The s17bench Authors
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

#ifndef S17_LINALG_H
#define S17_LINALG_H

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace s17 {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

namespace gates {
ComplexMatrix identity(size_t dim = 2);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// Two-qubit gates use the first factor of a Kronecker product as qubit 1 (control).
ComplexMatrix cnot();
ComplexMatrix cz();
ComplexMatrix swap();
/// exp(-i theta P) for a Pauli (or Pauli product) P with P^2 = I.
ComplexMatrix pauli_rotation(const ComplexMatrix &pauli, double theta);
}  // namespace gates

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix &m);
/// max |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix &m);
/// max |u^dagger u - I|.
double unitarity_defect(const ComplexMatrix &u);

/// Applies f to the spectrum of a Hermitian matrix. Throws std::invalid_argument when the input
/// deviates from Hermitian by more than `tolerance` (max-abs entry norm).
ComplexMatrix hermitian_function(
    const ComplexMatrix &h, const std::function<Complex(double)> &f, double tolerance = 1e-10);

/// exp(-i H t) through the eigendecomposition of the Hermitian generator H.
ComplexMatrix hermitian_exponential(const ComplexMatrix &h, double t);

/// Principal square root of a positive semidefinite matrix; small negative eigenvalues clamp to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

/// Multiplies m by the phase that makes its first entry with |m_ij| > tol (row-major scan) real
/// and positive.
ComplexMatrix strip_global_phase(const ComplexMatrix &m, double tol = 1e-9);

/// max |a - e^{i phi} b| after stripping the global phase of both.
double distance_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace s17

#endif
