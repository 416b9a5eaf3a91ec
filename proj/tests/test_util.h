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

#ifndef S17_TESTS_TEST_UTIL_H
#define S17_TESTS_TEST_UTIL_H

#include "s17/fidelity.h"
#include "s17/linalg.h"
#include "s17/rng.h"

namespace s17::testing {

inline ComplexMatrix random_density_matrix(size_t dim, PhiloxStream &rng) {
    // Mixture of a few Haar states with random weights; full rank with probability 1 for rank >= dim.
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    double total = 0;
    for (size_t k = 0; k < dim; k++) {
        ComplexVector v = haar_random_state(dim, rng);
        double w = rng.uniform() + 0.01;
        rho += w * v * v.adjoint();
        total += w;
    }
    return rho / total;
}

inline ComplexMatrix random_unitary(size_t dim, PhiloxStream &rng) {
    ComplexMatrix a(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            a(r, c) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    return qr.householderQ();
}

}  // namespace s17::testing

#endif
