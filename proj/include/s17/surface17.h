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

#ifndef S17_SURFACE17_H
#define S17_SURFACE17_H

#include <string>
#include <vector>

#include "s17/pauli_string.h"

namespace s17 {

/// Pauli strings range over labels 0..17; label 0 is unused.
inline constexpr size_t kNumLabels = 18;

struct Stabilizer {
    /// "X2", "Z3", ...: the letter is the stabilizer family, the number its ancilla.
    std::string name;
    int ancilla;
    /// 'X' or 'Z' family.
    char family;
    PauliString op;
};

/// The 17-qubit code. Data qubits 9..17 sit on a 3x3 grid, row major:
///
///     9  10 11
///     12 13 14
///     15 16 17
///
/// Qubits 10, 12, 14 and 16 are Hadamard rotated, so every stabilizer mixes X and Z factors.
class CodeSpec {
   public:
    /// Builds the code and checks its algebra (throws std::logic_error on corruption).
    CodeSpec();

    const std::vector<int> &data_qubits() const {
        return data_;
    }
    const std::vector<int> &ancillas() const {
        return ancillas_;
    }
    /// Order X2, X7, X4, X5, Z3, Z6, Z1, Z8. Syndrome bit i refers to stabilizers()[i].
    const std::vector<Stabilizer> &stabilizers() const {
        return stabilizers_;
    }
    const Stabilizer &stabilizer_for_ancilla(int ancilla) const;
    const PauliString &logical_z() const {
        return logical_z_;
    }
    const PauliString &logical_x() const {
        return logical_x_;
    }
    /// Grid position (row, column) of a data qubit.
    static std::pair<int, int> grid_position(int data_qubit);
    bool is_rotated(int data_qubit) const;

    /// Bit i set iff e anticommutes with stabilizers()[i]. Throws if e touches an ancilla.
    uint32_t syndrome_of_error(const PauliString &e) const;

    /// True iff p equals a product of stabilizers up to phase.
    bool in_stabilizer_group(const PauliString &p) const;

    /// The 27 single-qubit Paulis on data qubits (X, Y, Z on 9, ..., 17).
    std::vector<PauliString> single_qubit_errors() const;

    /// Throws std::logic_error naming the first violated relation.
    void validate() const;

   private:
    std::vector<int> data_;
    std::vector<int> ancillas_;
    std::vector<Stabilizer> stabilizers_;
    PauliString logical_z_;
    PauliString logical_x_;
};

struct DegeneratePair {
    PauliString first;
    PauliString second;
    uint32_t syndrome;
};

/// All pairs of distinct single-qubit errors that share a syndrome. Each pair's product is checked
/// to lie in the stabilizer group; std::logic_error otherwise.
std::vector<DegeneratePair> degenerate_pairs(const CodeSpec &code);

}  // namespace s17

#endif
