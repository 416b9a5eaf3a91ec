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

#ifndef S17_SPIN_EXCHANGE_H
#define S17_SPIN_EXCHANGE_H

#include "s17/channel.h"

namespace s17 {

/// exp(-i (pi/8) sigma1.sigma2), with the global phase chosen so that its square is exactly SWAP
/// (triplet eigenvalue 1, singlet eigenvalue i).
ComplexMatrix sqrt_swap();

/// sqrtZ(1) sqrt(-Z)(2) sqrtSWAP Z(1) sqrtSWAP with sqrtZ = exp(-i pi/4 Z), sqrt(-Z) = exp(+i pi/4 Z).
/// This product is a controlled-Z; ldiv_ideal_cnot conjugates it by Hadamards on the target.
ComplexMatrix ldiv_core_unitary();

/// H(2) ldiv_core_unitary() H(2), equal to CNOT (qubit 1 controls) up to global phase.
ComplexMatrix ldiv_ideal_cnot();

/// Exchange pulse with environment coupling, in units where the ideal pulse length tau_s is 1.
struct LdivParams {
    /// Total time of one exchange step, t >= 1.
    double t = 1.0;
    /// Spin-flip rate of each spin (Bloch vectors relax at 2 * gamma).
    double gamma = 0.0;
    /// Environment phase shift rate, a rotation exp(-i delta tau (Z1 + Z2) / 2).
    double delta = 0.0;
    bool include_k2 = true;
    /// Correlation time that scales the initial slip term.
    double slip_time = 0.2;
};

/// Generator of the exchange pulse: U_s(s) = exp(-i s H) for s in [0, 1], H = (pi/8) sigma1.sigma2.
ComplexMatrix exchange_generator();

/// Superoperator K3 with d rho/dt = -K3 rho:
/// K3 = sum_spins sum_a (gamma/2)(1 - S[sigma_a]) + i delta [(Z1 + Z2)/2, .].
ComplexMatrix environment_generator(double gamma, double delta);

/// exp(-duration K3), assembled in closed form per spin (depolarizing with
/// p = 1 - exp(-2 gamma duration), times the Z rotation).
ComplexMatrix environment_propagator(double gamma, double delta, double duration);

/// Initial slip K2 = slip_time * integral_0^1 U(s)^-1 D U(s) ds, where D is the dissipative part of
/// K3 and U(s) the superoperator of the partial exchange pulse. Evaluated in closed form in the
/// eigenbasis of the exchange generator.
ComplexMatrix slip_superoperator(double gamma, double slip_time);

/// V(t) = exp(-(t - 1) K3) U_s (1 - K2), with the (1 - K2) factor omitted when include_k2 is false.
ComplexMatrix exchange_superoperator(const LdivParams &params);

/// The CNOT sequence with V(t) substituted for both sqrtSWAP factors; single-qubit gates ideal.
ComplexMatrix ldiv_noisy_superoperator(const LdivParams &params);
KrausChannel ldiv_noisy_cnot(const LdivParams &params);

}  // namespace s17

#endif
