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

#include "s17/fidelity.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace s17 {

namespace {

bool is_pure(const ComplexMatrix &rho, ComplexVector *psi) {
    Complex tr = rho.trace();
    double purity = (rho * rho).trace().real();
    if (std::abs(purity - std::norm(tr)) > 1e-12 || std::abs(tr - Complex{1.0}) > 1e-9) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig((rho + rho.adjoint()) * 0.5);
    *psi = eig.eigenvectors().col(rho.rows() - 1);
    return true;
}

double fidelity_with_pure(const ComplexVector &psi, const ComplexMatrix &sigma) {
    double overlap = psi.dot(sigma * psi).real();
    return std::sqrt(std::clamp(overlap, 0.0, 1.0));
}

}  // namespace

double state_fidelity(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || rho.rows() != rho.cols()) {
        throw std::invalid_argument("state_fidelity: dimension mismatch");
    }
    ComplexVector psi;
    if (is_pure(rho, &psi)) {
        return fidelity_with_pure(psi, sigma);
    }
    if (is_pure(sigma, &psi)) {
        return fidelity_with_pure(psi, rho);
    }
    ComplexMatrix root = psd_sqrt(rho);
    ComplexMatrix inner = root * sigma * root;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig((inner + inner.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
    double f = 0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); i++) {
        f += std::sqrt(std::max(0.0, eig.eigenvalues()(i)));
    }
    return std::clamp(f, 0.0, 1.0);
}

double state_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.qubit_labels() != sigma.qubit_labels()) {
        throw std::invalid_argument("state_fidelity: registers hold different qubits");
    }
    return state_fidelity(rho.to_matrix(), sigma.to_matrix());
}

const std::vector<ComplexVector> &pauli_product_states() {
    static const std::vector<ComplexVector> states = [] {
        double s = 1.0 / std::sqrt(2.0);
        std::vector<ComplexVector> singles;
        for (auto [a, b] : std::vector<std::pair<Complex, Complex>>{
                 {s, s}, {s, -s}, {s, kI * s}, {s, -kI * s}, {1.0, 0.0}, {0.0, 1.0}}) {
            ComplexVector v(2);
            v << a, b;
            singles.push_back(v);
        }
        std::vector<ComplexVector> out;
        for (const auto &a : singles) {
            for (const auto &b : singles) {
                out.push_back(kron(a, b));
            }
        }
        return out;
    }();
    return states;
}

namespace {

double fidelity_on_input(const KrausChannel &approx, const ComplexMatrix &exact, const ComplexVector &psi) {
    ComplexMatrix rho = psi * psi.adjoint();
    ComplexMatrix out = approx.apply(rho);
    ComplexVector ideal = exact * psi;
    return fidelity_with_pure(ideal, out);
}

void check_gate_shapes(const KrausChannel &approx, const ComplexMatrix &exact) {
    if ((size_t)exact.rows() != approx.dim() || exact.cols() != exact.rows()) {
        throw std::invalid_argument("gate_infidelity: channel and target dimensions differ");
    }
}

}  // namespace

double gate_infidelity(const KrausChannel &approx, const ComplexMatrix &exact) {
    check_gate_shapes(approx, exact);
    if (approx.dim() != 4) {
        throw std::invalid_argument("gate_infidelity: expects a two-qubit channel");
    }
    double best = 1.0;
    for (const auto &psi : pauli_product_states()) {
        best = std::min(best, fidelity_on_input(approx, exact, psi));
    }
    return std::max(0.0, 1.0 - best);
}

ComplexVector haar_random_state(size_t dim, PhiloxStream &rng) {
    std::normal_distribution<double> normal;
    ComplexVector v((Eigen::Index)dim);
    for (size_t i = 0; i < dim; i++) {
        double re = normal(rng);
        double im = normal(rng);
        v((Eigen::Index)i) = Complex{re, im};
    }
    return v / v.norm();
}

double gate_infidelity_with_random_search(
    const KrausChannel &approx, const ComplexMatrix &exact, size_t n_samples, uint64_t seed) {
    double worst = gate_infidelity(approx, exact);
    PhiloxStream rng(seed, 0);
    for (size_t i = 0; i < n_samples; i++) {
        ComplexVector psi = haar_random_state(approx.dim(), rng);
        worst = std::max(worst, 1.0 - fidelity_on_input(approx, exact, psi));
    }
    return worst;
}

}  // namespace s17
