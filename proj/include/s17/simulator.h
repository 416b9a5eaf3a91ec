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

#ifndef S17_SIMULATOR_H
#define S17_SIMULATOR_H

#include <cstdint>
#include <string>
#include <vector>

#include "s17/channel.h"
#include "s17/register_state.h"
#include "s17/schedule.h"

namespace s17 {

inline constexpr size_t kNumKeys = 512;

enum class Backend { exact, trajectory };

std::string backend_name(Backend b);
/// "exact" (or "exact_dm") / "trajectory".
Backend parse_backend(const std::string &text);

struct RunConfig {
    Scenario scenario = Scenario::I;
    /// Channel for every CNOT; qubit 1 of the channel is the control.
    KrausChannel cnot = KrausChannel::unitary(gates::cnot());
    double p_init = 0.0;
    Backend backend = Backend::exact;
    size_t n_samples = 0;
    uint64_t seed = 0;
    Serialization serialization = Serialization::concurrent;
    /// Encoded logical state, 0 or 1.
    int encoded = 0;
    /// Scenario II preparation: bit i set projects X-family stabilizer i (X2, X7, X4, X5) onto -1.
    uint32_t projection_signs = 0;
    /// Execute schedule ops in an equivalent order (per-qubit order kept) that runs one ancilla
    /// block at a time. With false, ops run in literal timestep order.
    bool reorder = true;
    /// Dense simulation limit for the exact backend.
    size_t max_width = 14;
    size_t threads = 1;
    /// Added to the chunk index (65536 shots per chunk) to form each chunk's random stream.
    uint64_t stream_offset = 0;
};

/// Distribution over 9-bit keys; see Readout for the bit layout. Bit 8 is the logical bit.
struct SyndromeDistribution {
    std::vector<double> probabilities = std::vector<double>(kNumKeys, 0.0);
    std::vector<double> std_errors = std::vector<double>(kNumKeys, 0.0);
    /// Raw outcome counts (trajectory backend only).
    std::vector<uint64_t> counts;
    size_t n_samples = 0;

    double total() const;
    /// Probability with the logical bit (bit 8) flipped in every key.
    SyndromeDistribution with_logical_flipped() const;
};

/// One executable step after lowering, merging and fusion.
struct PlanOp {
    enum Kind { prepare, gate1, noise1, gate2, project, measure, discard };
    Kind kind;
    int q0 = -1;
    int q1 = -1;
    /// Index into ExecutionPlan::gates1 / channels2.
    int index = -1;
};

struct ExecutionPlan {
    std::vector<PlanOp> ops;
    std::vector<ComplexMatrix> gates1;
    /// CNOT channels with neighbouring single-qubit gates folded in.
    std::vector<KrausChannel> channels2;
    KrausChannel noise = KrausChannel::identity(2);
    /// X-family stabilizers with the requested signs, for the projection step.
    std::vector<PauliString> projectors;
    Readout readout;
    /// Most qubits simultaneously held in a dense register.
    size_t peak_width = 0;
    /// Ops [0, prefix_end) are deterministic and pure.
    size_t prefix_end = 0;
    /// True when no op creates mixedness (p_init = 0 and every channel rank 1).
    bool pure = true;

    std::string describe() const;
};

ExecutionPlan compile_plan(const ExtractionSchedule &schedule, const RunConfig &cfg);

/// Exact outcome distribution by branching over every measurement. Throws std::runtime_error when
/// the plan needs more than cfg.max_width dense qubits.
SyndromeDistribution run_exact(const RunConfig &cfg);
/// Runs a caller-supplied schedule; cfg.scenario and cfg.serialization are ignored.
SyndromeDistribution run_exact(const ExtractionSchedule &schedule, const RunConfig &cfg);

/// Monte Carlo over cfg.n_samples pure-state trajectories, simulated with shot branching: shots with
/// a common history share one state and are split multinomially at each Kraus branch or
/// measurement. Results depend only on the seed and stream offset, not on the thread count.
SyndromeDistribution run_trajectories(const RunConfig &cfg);
SyndromeDistribution run_trajectories(const ExtractionSchedule &schedule, const RunConfig &cfg);

/// Dispatches on cfg.backend.
SyndromeDistribution run(const RunConfig &cfg);

/// Applies a Pauli string (labels as qubit indices) to the state.
void apply_pauli(StateVector &psi, const PauliString &p);

}  // namespace s17

#endif
