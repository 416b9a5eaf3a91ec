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

#include "s17/linalg.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s17 {

namespace gates {

ComplexMatrix identity(size_t dim) {
    return ComplexMatrix::Identity((Eigen::Index)dim, (Eigen::Index)dim);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix hadamard() {
    ComplexMatrix m(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

ComplexMatrix cnot() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
}

ComplexMatrix cz() {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4);
    m(3, 3) = -1;
    return m;
}

ComplexMatrix swap() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    return m;
}

ComplexMatrix pauli_rotation(const ComplexMatrix &pauli, double theta) {
    return std::cos(theta) * ComplexMatrix::Identity(pauli.rows(), pauli.cols()) - kI * std::sin(theta) * pauli;
}

}  // namespace gates

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (const auto &f : factors) {
        out = kron(out, f);
    }
    return out;
}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermiticity_defect: matrix is not square");
    }
    return max_abs(m - m.adjoint());
}

double unitarity_defect(const ComplexMatrix &u) {
    return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols()));
}

ComplexMatrix hermitian_function(const ComplexMatrix &h, const std::function<Complex(double)> &f, double tolerance) {
    double defect = hermiticity_defect(h);
    if (defect > tolerance) {
        std::stringstream ss;
        ss << "expected a Hermitian matrix but max |H - H^dagger| = " << defect;
        throw std::invalid_argument(ss.str());
    }
    ComplexMatrix sym = (h + h.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
    const auto &values = eig.eigenvalues();
    const auto &vectors = eig.eigenvectors();
    ComplexVector mapped(values.size());
    for (Eigen::Index k = 0; k < values.size(); k++) {
        mapped(k) = f(values(k));
    }
    return vectors * mapped.asDiagonal() * vectors.adjoint();
}

ComplexMatrix hermitian_exponential(const ComplexMatrix &h, double t) {
    return hermitian_function(h, [t](double lambda) { return std::exp(-kI * lambda * t); });
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    return hermitian_function(m, [](double lambda) { return Complex{std::sqrt(std::max(lambda, 0.0)), 0.0}; }, 1e-8);
}

ComplexMatrix strip_global_phase(const ComplexMatrix &m, double tol) {
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            double a = std::abs(m(i, j));
            if (a > tol) {
                return m * (std::conj(m(i, j)) / a);
            }
        }
    }
    return m;
}

double distance_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("distance_up_to_phase: shape mismatch");
    }
    // Align on the largest entry of b to avoid choosing a tiny reference element.
    Eigen::Index bi = 0, bj = 0;
    b.cwiseAbs().maxCoeff(&bi, &bj);
    if (std::abs(a(bi, bj)) < 1e-300) {
        return max_abs(a - b);
    }
    Complex phase = b(bi, bj) / a(bi, bj);
    phase /= std::abs(phase);
    return max_abs(a * phase - b);
}

}  // namespace s17
