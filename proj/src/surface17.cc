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

#include "s17/surface17.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace s17 {

namespace {

PauliString terms(std::vector<std::pair<int, char>> t) {
    return PauliString::from_terms(kNumLabels, t);
}

}  // namespace

CodeSpec::CodeSpec()
    : data_{9, 10, 11, 12, 13, 14, 15, 16, 17},
      ancillas_{1, 2, 3, 4, 5, 6, 7, 8},
      stabilizers_{
          {"X2", 2, 'X', terms({{9, 'X'}, {10, 'Z'}, {12, 'Z'}, {13, 'X'}})},
          {"X7", 7, 'X', terms({{13, 'X'}, {14, 'Z'}, {16, 'Z'}, {17, 'X'}})},
          {"X4", 4, 'X', terms({{11, 'X'}, {14, 'Z'}})},
          {"X5", 5, 'X', terms({{12, 'Z'}, {15, 'X'}})},
          {"Z3", 3, 'Z', terms({{10, 'X'}, {11, 'Z'}, {13, 'Z'}, {14, 'X'}})},
          {"Z6", 6, 'Z', terms({{12, 'X'}, {13, 'Z'}, {15, 'Z'}, {16, 'X'}})},
          {"Z1", 1, 'Z', terms({{9, 'Z'}, {10, 'X'}})},
          {"Z8", 8, 'Z', terms({{16, 'X'}, {17, 'Z'}})},
      },
      logical_z_(terms({{10, 'X'}, {13, 'Z'}, {16, 'X'}})),
      logical_x_(terms({{12, 'Z'}, {13, 'X'}, {14, 'Z'}})) {
    validate();
}

const Stabilizer &CodeSpec::stabilizer_for_ancilla(int ancilla) const {
    for (const auto &s : stabilizers_) {
        if (s.ancilla == ancilla) {
            return s;
        }
    }
    std::stringstream ss;
    ss << "qubit " << ancilla << " is not an ancilla";
    throw std::out_of_range(ss.str());
}

std::pair<int, int> CodeSpec::grid_position(int data_qubit) {
    if (data_qubit < 9 || data_qubit > 17) {
        throw std::out_of_range("not a data qubit");
    }
    return {(data_qubit - 9) / 3, (data_qubit - 9) % 3};
}

bool CodeSpec::is_rotated(int data_qubit) const {
    return data_qubit == 10 || data_qubit == 12 || data_qubit == 14 || data_qubit == 16;
}

uint32_t CodeSpec::syndrome_of_error(const PauliString &e) const {
    if (e.n != kNumLabels) {
        throw std::invalid_argument("syndrome_of_error: error must span qubit labels 0..17");
    }
    uint64_t data_mask = 0;
    for (int q : data_) {
        data_mask |= uint64_t{1} << q;
    }
    if (e.support() & ~data_mask) {
        throw std::invalid_argument("syndrome_of_error: error acts outside the data qubits: " + e.str());
    }
    uint32_t s = 0;
    for (size_t i = 0; i < stabilizers_.size(); i++) {
        if (!commutes(e, stabilizers_[i].op)) {
            s |= 1u << i;
        }
    }
    return s;
}

bool CodeSpec::in_stabilizer_group(const PauliString &p) const {
    for (uint32_t subset = 0; subset < (1u << stabilizers_.size()); subset++) {
        PauliString acc(kNumLabels);
        for (size_t i = 0; i < stabilizers_.size(); i++) {
            if (subset & (1u << i)) {
                acc = acc * stabilizers_[i].op;
            }
        }
        if (acc.equal_up_to_phase(p)) {
            return true;
        }
    }
    return false;
}

std::vector<PauliString> CodeSpec::single_qubit_errors() const {
    std::vector<PauliString> out;
    for (int q : data_) {
        for (char c : {'X', 'Y', 'Z'}) {
            out.push_back(terms({{q, c}}));
        }
    }
    return out;
}

void CodeSpec::validate() const {
    auto fail = [](const std::string &msg) { throw std::logic_error("code spec corrupted: " + msg); };
    for (size_t i = 0; i < stabilizers_.size(); i++) {
        for (size_t j = i + 1; j < stabilizers_.size(); j++) {
            if (!commutes(stabilizers_[i].op, stabilizers_[j].op)) {
                fail(stabilizers_[i].name + " anticommutes with " + stabilizers_[j].name);
            }
        }
        if (!commutes(stabilizers_[i].op, logical_z_)) {
            fail("Z_L anticommutes with " + stabilizers_[i].name);
        }
        if (!commutes(stabilizers_[i].op, logical_x_)) {
            fail("X_L anticommutes with " + stabilizers_[i].name);
        }
    }
    if (commutes(logical_z_, logical_x_)) {
        fail("Z_L commutes with X_L");
    }
}

std::vector<DegeneratePair> degenerate_pairs(const CodeSpec &code) {
    std::vector<PauliString> errors = code.single_qubit_errors();
    std::vector<DegeneratePair> out;
    for (size_t i = 0; i < errors.size(); i++) {
        uint32_t si = code.syndrome_of_error(errors[i]);
        for (size_t j = i + 1; j < errors.size(); j++) {
            if (code.syndrome_of_error(errors[j]) != si) {
                continue;
            }
            if (!code.in_stabilizer_group(errors[i] * errors[j])) {
                throw std::logic_error(
                    "errors " + errors[i].str() + " and " + errors[j].str() +
                    " share a syndrome but do not differ by a stabilizer");
            }
            out.push_back({errors[i], errors[j], si});
        }
    }
    return out;
}

}  // namespace s17
