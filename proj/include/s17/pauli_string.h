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

#ifndef S17_PAULI_STRING_H
#define S17_PAULI_STRING_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace s17 {

/// i^phase times a tensor product of single-qubit Paulis over n <= 64 qubits.
/// Qubit q carries X if only x bit q is set, Z if only z bit q is set, Y if both.
struct PauliString {
    size_t n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    /// Power of i: 0 -> +1, 1 -> +i, 2 -> -1, 3 -> -i.
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t n_qubits);

    /// Builds from (qubit, 'X'|'Y'|'Z'|'I') terms.
    static PauliString from_terms(size_t n_qubits, const std::vector<std::pair<int, char>> &terms);

    char at(int qubit) const;
    void set(int qubit, char pauli);
    size_t weight() const;
    bool is_identity_up_to_phase() const {
        return x == 0 && z == 0;
    }
    uint64_t support() const {
        return x | z;
    }

    /// Product *this * other, with the phase tracked exactly.
    PauliString operator*(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;
    bool equal_up_to_phase(const PauliString &other) const {
        return n == other.n && x == other.x && z == other.z;
    }

    /// e.g. "+X9*Z10" (identity prints as "+I").
    std::string str() const;
};

/// True iff the symplectic product (x.z' + z.x') is even. Throws on size mismatch.
bool commutes(const PauliString &p, const PauliString &q);

}  // namespace s17

#endif
