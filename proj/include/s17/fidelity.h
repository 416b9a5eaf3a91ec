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

#ifndef S17_FIDELITY_H
#define S17_FIDELITY_H

#include <cstdint>
#include <vector>

#include "s17/channel.h"
#include "s17/register_state.h"

namespace s17 {

/// Root fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)).
///
/// When either argument is pure (Tr rho^2 = 1 within 1e-12) the closed form sqrt(<psi|sigma|psi>)
/// is used instead of the matrix square roots.
double state_fidelity(const ComplexMatrix &rho, const ComplexMatrix &sigma);
double state_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// The 36 two-qubit products of single-qubit Pauli eigenvectors (+x, -x, +y, -y, +z, -z).
const std::vector<ComplexVector> &pauli_product_states();

/// One minus the minimum fidelity between approx(|psi><psi|) and exact|psi>, over the 36
/// Pauli-eigenvector products. Since the minimum is over a finite set this is a lower bound on the
/// true worst-case infidelity.
double gate_infidelity(const KrausChannel &approx, const ComplexMatrix &exact);

/// Same quantity with the minimum also taken over n_samples Haar-random pure inputs.
double gate_infidelity_with_random_search(
    const KrausChannel &approx, const ComplexMatrix &exact, size_t n_samples = 1000, uint64_t seed = 0);

/// Haar-random pure state of the given dimension.
ComplexVector haar_random_state(size_t dim, PhiloxStream &rng);

}  // namespace s17

#endif
