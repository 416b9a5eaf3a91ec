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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace s17;

namespace {

ComplexMatrix taylor_exp(const ComplexMatrix &h, double t, int terms) {
    ComplexMatrix out = ComplexMatrix::Identity(h.rows(), h.cols());
    ComplexMatrix term = out;
    for (int k = 1; k < terms; k++) {
        term = term * (-kI * t * h) / (double)k;
        out += term;
    }
    return out;
}

}  // namespace

TEST(hermitian_exponential, zero_generator_is_identity) {
    ComplexMatrix z = ComplexMatrix::Zero(4, 4);
    for (double t : {0.0, 1.3, -7.0}) {
        EXPECT_LT(max_abs(hermitian_exponential(z, t) - gates::identity(4)), 1e-15);
    }
}

TEST(hermitian_exponential, pauli_z_closed_form) {
    ComplexMatrix u = hermitian_exponential(gates::pauli_z(), std::numbers::pi / 2);
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = std::exp(-kI * (std::numbers::pi / 2));
    expected(1, 1) = std::exp(kI * (std::numbers::pi / 2));
    EXPECT_LT(max_abs(u - expected), 1e-14);
}

TEST(hermitian_exponential, pauli_x_matches_taylor_series) {
    ComplexMatrix u = hermitian_exponential(gates::pauli_x(), std::numbers::pi / 4);
    EXPECT_LT(max_abs(u - taylor_exp(gates::pauli_x(), std::numbers::pi / 4, 8)), 1e-5);
    EXPECT_LT(max_abs(u - taylor_exp(gates::pauli_x(), std::numbers::pi / 4, 30)), 1e-14);
}

TEST(hermitian_exponential, two_qubit_generator_matches_taylor_series) {
    ComplexMatrix h = 0.3 * kron(gates::pauli_x(), gates::pauli_y()) + 0.7 * kron(gates::pauli_z(), gates::identity()) +
                      0.2 * kron(gates::identity(), gates::pauli_x());
    ComplexMatrix u = hermitian_exponential(h, 0.9);
    EXPECT_LT(max_abs(u - taylor_exp(h, 0.9, 40)), 1e-13);
    EXPECT_LT(unitarity_defect(u), 1e-13);
}

TEST(hermitian_exponential, rejects_non_hermitian) {
    ComplexMatrix m = gates::pauli_x();
    m(0, 1) = 2.0;
    try {
        hermitian_exponential(m, 1.0);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
    }
}

TEST(gates, pauli_algebra) {
    ComplexMatrix x = gates::pauli_x(), y = gates::pauli_y(), z = gates::pauli_z();
    EXPECT_LT(max_abs(x * y - kI * z), 1e-15);
    EXPECT_LT(max_abs(gates::hadamard() * x * gates::hadamard() - z), 1e-15);
    EXPECT_LT(max_abs(gates::cnot() * gates::cnot() - gates::identity(4)), 1e-15);
}

TEST(gates, cnot_first_qubit_is_control) {
    // |10> (index 2) -> |11> (index 3).
    EXPECT_EQ(gates::cnot()(3, 2), Complex(1.0));
    EXPECT_EQ(gates::cnot()(0, 0), Complex(1.0));
}

TEST(gates, pauli_rotation) {
    ComplexMatrix r = gates::pauli_rotation(gates::pauli_z(), 0.4);
    EXPECT_LT(max_abs(r - hermitian_exponential(gates::pauli_z(), 0.4)), 1e-15);
}

TEST(kron, first_factor_is_most_significant) {
    ComplexMatrix k = kron(gates::pauli_x(), gates::identity());
    // X on the first factor flips index bit 1.
    EXPECT_EQ(k(2, 0), Complex(1.0));
    EXPECT_EQ(k(1, 0), Complex(0.0));
    EXPECT_LT(max_abs(kron({gates::pauli_x(), gates::pauli_y(), gates::pauli_z()}) -
                      kron(gates::pauli_x(), kron(gates::pauli_y(), gates::pauli_z()))),
              1e-15);
}

TEST(psd_sqrt, squares_back) {
    ComplexMatrix m(2, 2);
    m << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
    ComplexMatrix r = psd_sqrt(m);
    EXPECT_LT(max_abs(r * r - m), 1e-14);
}

TEST(global_phase, strip_and_distance) {
    ComplexMatrix u = std::exp(kI * 0.77) * gates::cnot();
    EXPECT_LT(max_abs(strip_global_phase(u) - gates::cnot()), 1e-15);
    EXPECT_LT(distance_up_to_phase(u, gates::cnot()), 1e-15);
    EXPECT_GT(distance_up_to_phase(gates::cz(), gates::cnot()), 0.5);
}
