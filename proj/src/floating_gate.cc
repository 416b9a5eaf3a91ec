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

#include "s17/floating_gate.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace s17 {

std::array<double, 3> soi_vector(const SoiInput &s) {
    return {s.alpha_d * std::cos(2 * s.angle), -s.alpha_r - s.alpha_d * std::sin(2 * s.angle), 0.0};
}

std::string variant_name(FloatingVariant v) {
    return v == FloatingVariant::v1 ? "v1" : "v2";
}

namespace {

void check_params(const FloatingGateParams &p) {
    if (!(p.r > 0) || !std::isfinite(p.r)) {
        std::stringstream ss;
        ss << "Zeeman ratio R must be positive, got " << p.r;
        throw std::invalid_argument(ss.str());
    }
    if (!(p.gamma_ratio >= 0) || !std::isfinite(p.gamma_ratio)) {
        std::stringstream ss;
        ss << "gamma ratio must be non-negative, got " << p.gamma_ratio;
        throw std::invalid_argument(ss.str());
    }
}

ComplexMatrix zz_sum() {
    return kron(gates::pauli_z(), gates::identity(2)) + kron(gates::identity(2), gates::pauli_z());
}

}  // namespace

FloatingHamiltonians floating_hamiltonians(const FloatingGateParams &params) {
    check_params(params);
    double gx = 1.0;
    double gy = params.gamma_ratio;
    ComplexMatrix s = gx * gates::pauli_x() + gy * gates::pauli_y();
    ComplexMatrix zeeman = params.r * zz_sum();
    FloatingHamiltonians out;
    out.full = zeeman + kron(s, s);
    out.flip_flop = zeeman + (gx * gx + gy * gy) / 2 *
                                 (kron(gates::pauli_x(), gates::pauli_x()) + kron(gates::pauli_y(), gates::pauli_y()));
    return out;
}

double application_time(const FloatingGateParams &params) {
    check_params(params);
    return std::numbers::pi / (4 * (1.0 + params.gamma_ratio * params.gamma_ratio));
}

std::vector<PulseStep> pulse_sequence(const FloatingGateParams &params) {
    double t = application_time(params);
    if (params.variant == FloatingVariant::v1) {
        return {
            {PulseStep::flip_first, 0},
            {PulseStep::evolve, t},
            {PulseStep::zeeman_echo, t},
            {PulseStep::flip_first, 0},
            {PulseStep::evolve, t},
            {PulseStep::zeeman_echo, t},
        };
    }
    return {
        {PulseStep::evolve, t / 2},
        {PulseStep::flip_both, 0},
        {PulseStep::evolve, t / 2},
        {PulseStep::flip_second, 0},
        {PulseStep::evolve, t / 2},
        {PulseStep::flip_both, 0},
        {PulseStep::evolve, t / 2},
        {PulseStep::flip_second, 0},
    };
}

ComplexMatrix floating_sqrt_xx(const FloatingGateParams &params, HamiltonianChoice choice) {
    FloatingHamiltonians hs = floating_hamiltonians(params);
    const ComplexMatrix &h = choice == HamiltonianChoice::full ? hs.full : hs.flip_flop;
    ComplexMatrix x1 = kron(gates::pauli_x(), gates::identity(2));
    ComplexMatrix x2 = kron(gates::identity(2), gates::pauli_x());
    ComplexMatrix u = gates::identity(4);
    for (const auto &step : pulse_sequence(params)) {
        switch (step.kind) {
            case PulseStep::evolve:
                u = hermitian_exponential(h, step.duration) * u;
                break;
            case PulseStep::zeeman_echo:
                u = hermitian_exponential(params.r * zz_sum(), -step.duration) * u;
                break;
            case PulseStep::flip_first:
                u = x1 * u;
                break;
            case PulseStep::flip_second:
                u = x2 * u;
                break;
            case PulseStep::flip_both:
                u = x1 * x2 * u;
                break;
        }
    }
    return u;
}

ComplexMatrix floating_cnot_unitary(const FloatingGateParams &params, HamiltonianChoice choice) {
    double q = std::numbers::pi / 4;
    ComplexMatrix h1 = kron(gates::hadamard(), gates::identity(2));
    ComplexMatrix roots = kron(gates::pauli_rotation(gates::pauli_z(), -q), gates::pauli_rotation(gates::pauli_x(), -q));
    return roots * h1 * floating_sqrt_xx(params, choice) * h1;
}

KrausChannel floating_cnot(const FloatingGateParams &params, HamiltonianChoice choice) {
    return KrausChannel::unitary(floating_cnot_unitary(params, choice));
}

}  // namespace s17
