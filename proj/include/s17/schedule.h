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

#ifndef S17_SCHEDULE_H
#define S17_SCHEDULE_H

#include <cstdint>
#include <string>
#include <vector>

#include "s17/surface17.h"

namespace s17 {

enum class Scenario { I, II };
enum class Serialization { concurrent, serialized };

std::string scenario_name(Scenario s);
std::string serialization_name(Serialization s);
/// Accepts "I"/"II" (also "1"/"2"); throws std::invalid_argument otherwise.
Scenario parse_scenario(const std::string &text);
Serialization parse_serialization(const std::string &text);

struct ScheduleOp {
    enum Kind {
        /// Reset to |0>.
        prepare,
        hadamard,
        /// Logical X (Z12 X13 Z14); only executed when the encoded state is |1>.
        encode_logical_x,
        /// Projection of the data register onto the X-family stabilizer eigenspaces, renormalized.
        project_x_stabilizers,
        /// Depolarizing preparation noise of strength p_init.
        prep_noise,
        /// qubits = {control, target}.
        cnot,
        /// Z-basis measurement; the outcome becomes raw record bit `qubits[0]`.
        measure,
        /// The qubit is dropped without being recorded.
        discard,
    };
    Kind kind;
    std::vector<int> qubits;
    /// Ancilla whose extraction circuit the op belongs to, or -1.
    int group = -1;
};

std::string op_name(ScheduleOp::Kind kind);

/// Maps raw measurement records (bit q = outcome of qubit q) to the 9 result bits.
/// Result bit i is the parity of the raw bits in masks[i]; bit 8 is the logical bit.
struct Readout {
    std::vector<std::string> names;
    std::vector<uint32_t> masks;

    uint32_t key_of(uint32_t raw_record) const;
};

struct ExtractionSchedule {
    Scenario scenario;
    Serialization serialization;
    std::vector<std::vector<ScheduleOp>> timesteps;
    Readout readout;
    /// Ancillas in the order their extraction blocks can run one at a time without changing the
    /// order of operations on any qubit.
    std::vector<int> ancilla_order;

    /// Throws std::logic_error if a qubit appears twice in a timestep or an ancilla is not measured
    /// exactly once.
    void validate() const;
    /// One timestep per line.
    std::string dump() const;
    size_t op_count() const;
};

/// Data qubits of a stabilizer in the order its ancilla couples to them, with the layer (0..3) of
/// each coupling in the concurrent schedule. Z family: NW, NE, SW, SE. X family: NW, SW, NE, SE.
std::vector<std::pair<int, int>> coupling_order(const CodeSpec &code, const Stabilizer &s);

/// Ancillas whose stabilizers are measured in a scenario: Z family only for I, all for II.
std::vector<int> measured_ancillas(const CodeSpec &code, Scenario scenario);

ExtractionSchedule build_schedule(Scenario scenario, Serialization serialization);

}  // namespace s17

#endif
