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


#ifndef S17_TESTS_PAULI_ORACLE_H
#define S17_TESTS_PAULI_ORACLE_H

#include <cstdint>
#include <utility>
#include <vector>

#include "s17/schedule.h"
#include "s17/surface17.h"

namespace s17::oracle {

// Pauli frame on up to 32 qubits.
struct Frame {
    uint32_t x = 0;
    uint32_t z = 0;
};

// Propagates a frame inserted at flattened op index `start` through the rest of the schedule
// and returns the flipped raw measurement bits.
inline uint32_t propagate(const std::vector<ScheduleOp> &ops, size_t start, Frame f) {
    uint32_t flips = 0;
    for (size_t i = start; i < ops.size(); i++) {
        const ScheduleOp &op = ops[i];
        switch (op.kind) {
            case ScheduleOp::hadamard: {
                uint32_t m = 1u << op.qubits[0];
                uint32_t xb = f.x & m, zb = f.z & m;
                f.x = (f.x & ~m) | zb;
                f.z = (f.z & ~m) | xb;
                break;
            }
            case ScheduleOp::cnot: {
                int c = op.qubits[0], t = op.qubits[1];
                if (f.x >> c & 1) f.x ^= 1u << t;
                if (f.z >> t & 1) f.z ^= 1u << c;
                break;
            }
            case ScheduleOp::prepare:
                f.x &= ~(1u << op.qubits[0]);
                f.z &= ~(1u << op.qubits[0]);
                break;
            case ScheduleOp::measure:
                if (f.x >> op.qubits[0] & 1) flips |= 1u << op.qubits[0];
                break;
            default:
                break;
        }
    }
    return flips;
}

// Scenario I outcome distribution for ideal CNOTs by enumerating Pauli branches per noise site.
inline std::vector<double> pauli_branch_oracle(Serialization ser, double p, int encoded) {
    ExtractionSchedule s = build_schedule(Scenario::I, ser);
    std::vector<ScheduleOp> ops;
    for (const auto &t : s.timesteps) ops.insert(ops.end(), t.begin(), t.end());
    CodeSpec code;
    uint32_t base = 0;
    std::vector<size_t> sites;
    for (size_t i = 0; i < ops.size(); i++) {
        if (ops[i].kind == ScheduleOp::encode_logical_x && encoded) {
            Frame f{(uint32_t)code.logical_x().x, (uint32_t)code.logical_x().z};
            base = s.readout.key_of(propagate(ops, i + 1, f));
        }
        if (ops[i].kind == ScheduleOp::prep_noise) sites.push_back(i);
    }
    std::vector<double> dist(512, 0.0);
    dist[base] = 1.0;
    for (size_t i : sites) {
        uint32_t m = 1u << ops[i].qubits[0];
        std::vector<std::pair<double, uint32_t>> branches{
            {1 - 0.75 * p, 0},
            {p / 4, s.readout.key_of(propagate(ops, i + 1, {m, 0}))},
            {p / 4, s.readout.key_of(propagate(ops, i + 1, {m, m}))},
            {p / 4, s.readout.key_of(propagate(ops, i + 1, {0, m}))},
        };
        std::vector<double> next(512, 0.0);
        for (int k = 0; k < 512; k++) {
            if (dist[k] == 0) continue;
            for (auto [w, flip] : branches) next[k ^ flip] += w * dist[k];
        }
        dist = next;
    }
    return dist;
}

}  // namespace s17::oracle

#endif
