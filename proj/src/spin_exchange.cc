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

#include "s17/spin_exchange.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "s17/noise.h"

namespace s17 {

namespace {

ComplexMatrix sigma_dot_sigma() {
    return kron(gates::pauli_x(), gates::pauli_x()) + kron(gates::pauli_y(), gates::pauli_y()) +
           kron(gates::pauli_z(), gates::pauli_z());
}

ComplexMatrix on_first(const ComplexMatrix &m) {
    return kron(m, gates::identity(2));
}

ComplexMatrix on_second(const ComplexMatrix &m) {
    return kron(gates::identity(2), m);
}

void check_params(const LdivParams &p) {
    std::stringstream ss;
    if (!(p.t >= 1.0)) {
        ss << "exchange time t must be >= 1 (units of the pulse length), got " << p.t;
    } else if (!(p.gamma >= 0.0)) {
        ss << "relaxation rate must be non-negative, got " << p.gamma;
    } else if (!(p.slip_time >= 0.0)) {
        ss << "slip time must be non-negative, got " << p.slip_time;
    } else if (!std::isfinite(p.delta)) {
        ss << "phase shift must be finite";
    } else {
        return;
    }
    throw std::invalid_argument(ss.str());
}

}  // namespace

ComplexMatrix sqrt_swap() {
    ComplexMatrix id = gates::identity(4);
    ComplexMatrix sw = gates::swap();
    return (id + sw) * 0.5 + kI * (id - sw) * 0.5;
}

ComplexMatrix ldiv_core_unitary() {
    double q = std::numbers::pi / 4;
    ComplexMatrix pre = kron(gates::pauli_rotation(gates::pauli_z(), q), gates::pauli_rotation(gates::pauli_z(), -q));
    ComplexMatrix s = sqrt_swap();
    return pre * s * on_first(gates::pauli_z()) * s;
}

ComplexMatrix ldiv_ideal_cnot() {
    ComplexMatrix h2 = on_second(gates::hadamard());
    return h2 * ldiv_core_unitary() * h2;
}

ComplexMatrix exchange_generator() {
    return (std::numbers::pi / 8) * sigma_dot_sigma();
}

namespace {

ComplexMatrix dissipator(double gamma) {
    ComplexMatrix d = ComplexMatrix::Zero(16, 16);
    ComplexMatrix id16 = gates::identity(16);
    for (const auto &p : {gates::pauli_x(), gates::pauli_y(), gates::pauli_z()}) {
        d += (gamma / 2) * (id16 - superoperator_of(on_first(p)));
        d += (gamma / 2) * (id16 - superoperator_of(on_second(p)));
    }
    return d;
}

}  // namespace

ComplexMatrix environment_generator(double gamma, double delta) {
    ComplexMatrix hz = (on_first(gates::pauli_z()) + on_second(gates::pauli_z())) * 0.5;
    ComplexMatrix id4 = gates::identity(4);
    ComplexMatrix commutator = superoperator_of(hz, id4) - superoperator_of(id4, hz);
    return dissipator(gamma) + kI * delta * commutator;
}

ComplexMatrix environment_propagator(double gamma, double delta, double duration) {
    double p = -std::expm1(-2 * gamma * duration);
    KrausChannel depol = noise_channel({NoiseKind::depolarizing, p});
    ComplexMatrix rz = gates::pauli_rotation(gates::pauli_z(), delta * duration / 2);
    std::vector<ComplexMatrix> single;
    for (const auto &k : depol.kraus_ops()) {
        single.push_back(k * rz);
    }
    ComplexMatrix s = ComplexMatrix::Zero(16, 16);
    for (const auto &a : single) {
        for (const auto &b : single) {
            s += superoperator_of(kron(a, b));
        }
    }
    return s;
}

ComplexMatrix slip_superoperator(double gamma, double slip_time) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(exchange_generator());
    const ComplexMatrix &v = eig.eigenvectors();
    const Eigen::VectorXd &e = eig.eigenvalues();
    // vec(V X V^dagger) = (conj(V) kron V) vec(X); in that basis U(s) is diagonal with
    // phases exp(-i s (e_a - e_b)) at column-stacked index a + 4 b.
    ComplexMatrix basis = superoperator_of(v);
    ComplexMatrix d = basis.adjoint() * dissipator(gamma) * basis;
    Eigen::VectorXd omega(16);
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            omega(a + 4 * b) = e(a) - e(b);
        }
    }
    for (int m = 0; m < 16; m++) {
        for (int n = 0; n < 16; n++) {
            double x = omega(m) - omega(n);
            Complex avg = std::abs(x) < 1e-12 ? Complex{1.0} : (std::exp(kI * x) - 1.0) / (kI * x);
            d(m, n) *= avg;
        }
    }
    return slip_time * basis * d * basis.adjoint();
}

ComplexMatrix exchange_superoperator(const LdivParams &params) {
    check_params(params);
    ComplexMatrix v = environment_propagator(params.gamma, params.delta, params.t - 1) * superoperator_of(sqrt_swap());
    if (params.include_k2) {
        v = v * (gates::identity(16) - slip_superoperator(params.gamma, params.slip_time));
    }
    return v;
}

ComplexMatrix ldiv_noisy_superoperator(const LdivParams &params) {
    ComplexMatrix v = exchange_superoperator(params);
    double q = std::numbers::pi / 4;
    ComplexMatrix pre = kron(gates::pauli_rotation(gates::pauli_z(), q), gates::pauli_rotation(gates::pauli_z(), -q));
    ComplexMatrix h2 = superoperator_of(on_second(gates::hadamard()));
    return h2 * superoperator_of(pre) * v * superoperator_of(on_first(gates::pauli_z())) * v * h2;
}

KrausChannel ldiv_noisy_cnot(const LdivParams &params) {
    return kraus_from_superoperator(ldiv_noisy_superoperator(params));
}

}  // namespace s17
