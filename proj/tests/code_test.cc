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

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "s17/pauli_string.h"
#include "s17/surface17.h"

using namespace s17;

namespace {

PauliString P(std::vector<std::pair<int, char>> terms) {
    return PauliString::from_terms(kNumLabels, terms);
}

// Stabilizers transcribed by hand, in register order X2, X7, X4, X5, Z3, Z6, Z1, Z8.
std::vector<PauliString> hand_stabilizers() {
    return {
        P({{9, 'X'}, {10, 'Z'}, {12, 'Z'}, {13, 'X'}}),
        P({{13, 'X'}, {14, 'Z'}, {16, 'Z'}, {17, 'X'}}),
        P({{11, 'X'}, {14, 'Z'}}),
        P({{12, 'Z'}, {15, 'X'}}),
        P({{10, 'X'}, {11, 'Z'}, {13, 'Z'}, {14, 'X'}}),
        P({{12, 'X'}, {13, 'Z'}, {15, 'Z'}, {16, 'X'}}),
        P({{9, 'Z'}, {10, 'X'}}),
        P({{16, 'X'}, {17, 'Z'}}),
    };
}

// Symplectic product by explicit per-qubit comparison.
bool oracle_commutes(const PauliString &a, const PauliString &b) {
    int anti = 0;
    for (int q = 0; q < (int)a.n; q++) {
        char x = a.at(q), y = b.at(q);
        if (x != 'I' && y != 'I' && x != y) {
            anti++;
        }
    }
    return anti % 2 == 0;
}

}  // namespace

TEST(pauli_string, product_phases) {
    PauliString x = P({{0, 'X'}}), y = P({{0, 'Y'}}), z = P({{0, 'Z'}});
    PauliString xy = x * y;
    EXPECT_TRUE(xy.equal_up_to_phase(z));
    EXPECT_EQ(xy.phase, 1);  // XY = iZ
    PauliString yx = y * x;
    EXPECT_EQ(yx.phase, 3);  // YX = -iZ
    EXPECT_TRUE((x * x).is_identity_up_to_phase());
    EXPECT_EQ((x * x).phase, 0);
}

TEST(pauli_string, accessors) {
    PauliString p = P({{3, 'X'}, {5, 'Y'}, {7, 'Z'}});
    EXPECT_EQ(p.at(3), 'X');
    EXPECT_EQ(p.at(5), 'Y');
    EXPECT_EQ(p.at(7), 'Z');
    EXPECT_EQ(p.at(4), 'I');
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (1u << 3) | (1u << 5) | (1u << 7));
    p.set(5, 'I');
    EXPECT_EQ(p.weight(), 2u);
}

TEST(commutes, examples) {
    PauliString zl = CodeSpec().logical_z();
    EXPECT_TRUE(commutes(zl, zl));
    EXPECT_FALSE(commutes(P({{9, 'X'}}), P({{9, 'Z'}, {10, 'X'}})));
    EXPECT_FALSE(commutes(CodeSpec().logical_z(), CodeSpec().logical_x()));
    EXPECT_THROW(commutes(PauliString(3), PauliString(4)), std::invalid_argument);
}

TEST(code_spec, matches_hand_transcription) {
    CodeSpec code;
    auto hand = hand_stabilizers();
    ASSERT_EQ(code.stabilizers().size(), 8u);
    std::vector<std::string> names{"X2", "X7", "X4", "X5", "Z3", "Z6", "Z1", "Z8"};
    for (size_t i = 0; i < 8; i++) {
        EXPECT_EQ(code.stabilizers()[i].name, names[i]);
        EXPECT_TRUE(code.stabilizers()[i].op.equal_up_to_phase(hand[i])) << names[i];
    }
    EXPECT_TRUE(code.logical_z().equal_up_to_phase(P({{10, 'X'}, {13, 'Z'}, {16, 'X'}})));
    EXPECT_TRUE(code.logical_x().equal_up_to_phase(P({{12, 'Z'}, {13, 'X'}, {14, 'Z'}})));
    EXPECT_EQ(code.data_qubits(), (std::vector<int>{9, 10, 11, 12, 13, 14, 15, 16, 17}));
    for (int q : {10, 12, 14, 16}) {
        EXPECT_TRUE(code.is_rotated(q));
    }
    EXPECT_FALSE(code.is_rotated(13));
}

TEST(code_spec, exhaustive_algebra) {
    CodeSpec code;
    EXPECT_NO_THROW(code.validate());
    const auto &s = code.stabilizers();
    for (size_t i = 0; i < 8; i++) {
        for (size_t j = i + 1; j < 8; j++) {
            EXPECT_TRUE(oracle_commutes(s[i].op, s[j].op));
            EXPECT_TRUE(commutes(s[i].op, s[j].op));
        }
        EXPECT_TRUE(oracle_commutes(s[i].op, code.logical_z()));
        EXPECT_TRUE(oracle_commutes(s[i].op, code.logical_x()));
    }
    EXPECT_FALSE(oracle_commutes(code.logical_z(), code.logical_x()));
}

TEST(syndrome_of_error, examples) {
    CodeSpec code;
    EXPECT_EQ(code.syndrome_of_error(PauliString(kNumLabels)), 0u);
    // Z on 13 anticommutes with X2 and X7 (bits 0 and 1).
    EXPECT_EQ(code.syndrome_of_error(P({{13, 'Z'}})), 0b11u);
    EXPECT_THROW(code.syndrome_of_error(P({{3, 'X'}})), std::invalid_argument);
}

TEST(syndrome_of_error, every_single_qubit_error_is_detected) {
    CodeSpec code;
    auto hand = hand_stabilizers();
    auto errors = code.single_qubit_errors();
    ASSERT_EQ(errors.size(), 27u);
    for (const auto &e : errors) {
        uint32_t expected = 0;
        for (size_t i = 0; i < 8; i++) {
            if (!oracle_commutes(e, hand[i])) {
                expected |= 1u << i;
            }
        }
        EXPECT_EQ(code.syndrome_of_error(e), expected) << e.str();
        EXPECT_NE(expected, 0u) << e.str();
    }
}

TEST(degenerate_pairs, products_are_stabilizers) {
    CodeSpec code;
    auto pairs = degenerate_pairs(code);
    EXPECT_FALSE(pairs.empty());
    for (const auto &p : pairs) {
        EXPECT_EQ(code.syndrome_of_error(p.first), code.syndrome_of_error(p.second));
        EXPECT_TRUE(code.in_stabilizer_group(p.first * p.second));
    }
    std::set<uint32_t> syndromes;
    for (const auto &e : code.single_qubit_errors()) {
        syndromes.insert(code.syndrome_of_error(e));
    }
    EXPECT_LE(syndromes.size(), 256u);
}

TEST(degenerate_pairs, logical_is_invisible_but_not_a_stabilizer) {
    CodeSpec code;
    EXPECT_EQ(code.syndrome_of_error(code.logical_z()), 0u);
    EXPECT_EQ(code.syndrome_of_error(code.logical_x()), 0u);
    EXPECT_FALSE(code.in_stabilizer_group(code.logical_z()));
    EXPECT_FALSE(code.in_stabilizer_group(code.logical_x()));
    EXPECT_TRUE(code.in_stabilizer_group(code.stabilizers()[0].op * code.stabilizers()[5].op));
}
