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

#ifndef S17_FLOATING_GATE_H
#define S17_FLOATING_GATE_H

#include <array>
#include <string>
#include <vector>

#include "s17/channel.h"

namespace s17 {

/// Spin-orbit input: Rashba and Dresselhaus strengths and the crystallographic angle (radians).
struct SoiInput {
    double alpha_r = 0;
    double alpha_d = 0;
    double angle = 0;
};

/// (alpha_D cos 2a, -alpha_R - alpha_D sin 2a, 0).
std::array<double, 3> soi_vector(const SoiInput &s);

enum class FloatingVariant { v1, v2 };

std::string variant_name(FloatingVariant v);

/// Energies are in units of J12 gamma_x^2, so gamma_x = 1, gamma_y = gamma_ratio and E_z = r.
struct FloatingGateParams {
    double r = 30;
    double gamma_ratio = 0;
    FloatingVariant variant = FloatingVariant::v1;
};

struct FloatingHamiltonians {
    /// E_z (Z1 + Z2) + (sigma1.g)(sigma2.g).
    ComplexMatrix full;
    /// (gx^2 + gy^2)/2 (X1X2 + Y1Y2) + E_z (Z1 + Z2).
    ComplexMatrix flip_flop;
};

FloatingHamiltonians floating_hamiltonians(const FloatingGateParams &params);

/// pi / (4 (gx^2 + gy^2)).
double application_time(const FloatingGateParams &params);

enum class HamiltonianChoice { full, flip_flop };

/// One factor of a pulse sequence. Factors are listed in the order they act.
struct PulseStep {
    enum Kind { evolve, flip_first, flip_second, flip_both, zeeman_echo };
    Kind kind;
    /// Evolution or echo duration; 0 for flips.
    double duration;
};

/// v1: X1, A(t), E(t), X1, A(t), E(t) with A(t) = exp(-i H t) and E(t) = exp(+i E_z (Z1 + Z2) t).
/// v2: A, X1X2, A, X2, A, X1X2, A, X2 with A = exp(-i H t/2).
std::vector<PulseStep> pulse_sequence(const FloatingGateParams &params);

/// Evaluates the pulse sequence with the chosen Hamiltonian. With the flip-flop form the result
/// is exp(-i pi/4 X1X2) up to global phase.
ComplexMatrix floating_sqrt_xx(const FloatingGateParams &params, HamiltonianChoice choice = HamiltonianChoice::full);

/// exp(+i pi/4 Z1) exp(+i pi/4 X2) H1 sqrtXX H1.
ComplexMatrix floating_cnot_unitary(const FloatingGateParams &params, HamiltonianChoice choice = HamiltonianChoice::full);

KrausChannel floating_cnot(const FloatingGateParams &params, HamiltonianChoice choice = HamiltonianChoice::full);

}  // namespace s17

#endif
