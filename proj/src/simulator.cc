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

#include "s17/simulator.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "s17/noise.h"

namespace s17 {

std::string backend_name(Backend b) {
    return b == Backend::exact ? "exact" : "trajectory";
}

Backend parse_backend(const std::string &text) {
    if (text == "exact" || text == "exact_dm") {
        return Backend::exact;
    }
    if (text == "trajectory" || text == "trajectories") {
        return Backend::trajectory;
    }
    throw std::invalid_argument("unknown backend '" + text + "' (expected exact or trajectory)");
}

double SyndromeDistribution::total() const {
    double t = 0;
    for (double p : probabilities) {
        t += p;
    }
    return t;
}

SyndromeDistribution SyndromeDistribution::with_logical_flipped() const {
    SyndromeDistribution out = *this;
    for (size_t k = 0; k < kNumKeys; k++) {
        out.probabilities[k ^ 256] = probabilities[k];
        out.std_errors[k ^ 256] = std_errors[k];
        if (!counts.empty()) {
            out.counts[k ^ 256] = counts[k];
        }
    }
    return out;
}

void apply_pauli(StateVector &psi, const PauliString &p) {
    uint64_t xmask = 0, zmask = 0;
    int n_y = 0;
    for (size_t q = 0; q < p.n; q++) {
        char c = p.at((int)q);
        if (c == 'I') {
            continue;
        }
        size_t bit = size_t{1} << psi.slot_of((int)q);
        if (c == 'X' || c == 'Y') {
            xmask |= bit;
        }
        if (c == 'Z' || c == 'Y') {
            zmask |= bit;
        }
        n_y += c == 'Y';
    }
    static const Complex powers[4] = {1.0, kI, -1.0, -kI};
    Complex global = powers[(p.phase + n_y) % 4];
    auto &amps = psi.mutable_amplitudes();
    std::vector<Complex> out(amps.size());
    for (size_t i = 0; i < amps.size(); i++) {
        double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
        out[i ^ xmask] = global * sign * amps[i];
    }
    amps.swap(out);
}

namespace {

struct RawOp {
    PlanOp::Kind kind;
    std::vector<int> qubits;
    ComplexMatrix m;
    int group = -1;
    bool alive = true;
    // Single-qubit gates folded into a gate2 op: applied before (pre) and after (post) the channel.
    ComplexMatrix pre[2];
    ComplexMatrix post[2];
};

ComplexMatrix pauli_matrix(char c) {
    switch (c) {
        case 'X':
            return gates::pauli_x();
        case 'Y':
            return gates::pauli_y();
        case 'Z':
            return gates::pauli_z();
    }
    return gates::identity(2);
}

std::vector<RawOp> lower(const ExtractionSchedule &schedule, const RunConfig &cfg) {
    CodeSpec code;
    std::vector<RawOp> ops;
    for (const auto &step : schedule.timesteps) {
        for (const auto &op : step) {
            RawOp r;
            r.qubits = op.qubits;
            r.group = op.group;
            switch (op.kind) {
                case ScheduleOp::prepare:
                    r.kind = PlanOp::prepare;
                    break;
                case ScheduleOp::hadamard:
                    r.kind = PlanOp::gate1;
                    r.m = gates::hadamard();
                    break;
                case ScheduleOp::encode_logical_x:
                    if (cfg.encoded) {
                        for (int q : op.qubits) {
                            RawOp g;
                            g.kind = PlanOp::gate1;
                            g.qubits = {q};
                            g.m = pauli_matrix(code.logical_x().at(q));
                            ops.push_back(g);
                        }
                    }
                    continue;
                case ScheduleOp::project_x_stabilizers:
                    r.kind = PlanOp::project;
                    break;
                case ScheduleOp::prep_noise:
                    if (cfg.p_init <= 0) {
                        continue;
                    }
                    r.kind = PlanOp::noise1;
                    break;
                case ScheduleOp::cnot:
                    r.kind = PlanOp::gate2;
                    for (int s = 0; s < 2; s++) {
                        r.pre[s] = gates::identity(2);
                        r.post[s] = gates::identity(2);
                    }
                    break;
                case ScheduleOp::measure:
                    r.kind = PlanOp::measure;
                    break;
                case ScheduleOp::discard:
                    r.kind = PlanOp::discard;
                    break;
            }
            ops.push_back(std::move(r));
        }
    }
    return ops;
}

// Alive op indices touching each qubit, in op order.
std::map<int, std::vector<size_t>> per_qubit_ops(const std::vector<RawOp> &ops) {
    std::map<int, std::vector<size_t>> out;
    for (size_t i = 0; i < ops.size(); i++) {
        if (!ops[i].alive) {
            continue;
        }
        for (int q : ops[i].qubits) {
            out[q].push_back(i);
        }
    }
    return out;
}

bool is_identity_up_to_phase(const ComplexMatrix &m) {
    return distance_up_to_phase(m, gates::identity(2)) < 1e-12;
}

void merge_single_qubit_gates(std::vector<RawOp> &ops) {
    for (auto &[q, list] : per_qubit_ops(ops)) {
        (void)q;
        for (size_t k = 1; k < list.size(); k++) {
            RawOp &prev = ops[list[k - 1]];
            RawOp &cur = ops[list[k]];
            if (prev.alive && prev.kind == PlanOp::gate1 && cur.kind == PlanOp::gate1) {
                cur.m = cur.m * prev.m;
                prev.alive = false;
            }
        }
    }
    for (auto &op : ops) {
        if (op.alive && op.kind == PlanOp::gate1 && is_identity_up_to_phase(op.m)) {
            op.alive = false;
        }
    }
}

void fold_into_two_qubit_channels(std::vector<RawOp> &ops) {
    auto lists = per_qubit_ops(ops);
    auto neighbour = [&](int q, size_t i, int dir) -> RawOp * {
        const auto &list = lists[q];
        auto pos = std::find(list.begin(), list.end(), i) - list.begin();
        for (long k = pos + dir; k >= 0 && k < (long)list.size(); k += dir) {
            if (ops[list[k]].alive) {
                return &ops[list[k]];
            }
        }
        return nullptr;
    };
    for (int dir : {-1, +1}) {
        for (size_t i = 0; i < ops.size(); i++) {
            if (!ops[i].alive || ops[i].kind != PlanOp::gate2) {
                continue;
            }
            for (int s = 0; s < 2; s++) {
                RawOp *g = neighbour(ops[i].qubits[s], i, dir);
                if (g && g->kind == PlanOp::gate1) {
                    if (dir < 0) {
                        ops[i].pre[s] = ops[i].pre[s] * g->m;
                    } else {
                        ops[i].post[s] = g->m * ops[i].post[s];
                    }
                    g->alive = false;
                }
            }
        }
    }
}

std::vector<size_t> linearize(const std::vector<RawOp> &ops, const ExtractionSchedule &schedule, bool reorder) {
    std::map<int, int> rank;
    for (size_t r = 0; r < schedule.ancilla_order.size(); r++) {
        rank[schedule.ancilla_order[r]] = (int)r;
    }
    auto priority = [&](size_t i) {
        if (!reorder) {
            return std::tuple<int, int, size_t>{0, 0, i};
        }
        const RawOp &op = ops[i];
        int cls = (op.kind == PlanOp::measure || op.kind == PlanOp::discard) ? 0 : 1;
        int g = op.group < 0 ? -1 : rank.at(op.group);
        return std::tuple<int, int, size_t>{cls, g, i};
    };
    std::vector<int> indegree(ops.size(), 0);
    std::vector<std::vector<size_t>> succ(ops.size());
    for (auto &[q, list] : per_qubit_ops(ops)) {
        (void)q;
        for (size_t k = 1; k < list.size(); k++) {
            succ[list[k - 1]].push_back(list[k]);
            indegree[list[k]]++;
        }
    }
    std::set<std::tuple<int, int, size_t>> ready;
    size_t n_alive = 0;
    for (size_t i = 0; i < ops.size(); i++) {
        if (ops[i].alive) {
            n_alive++;
            if (indegree[i] == 0) {
                ready.insert(priority(i));
            }
        }
    }
    std::vector<size_t> order;
    while (!ready.empty()) {
        size_t i = std::get<2>(*ready.begin());
        ready.erase(ready.begin());
        order.push_back(i);
        for (size_t j : succ[i]) {
            if (--indegree[j] == 0) {
                ready.insert(priority(j));
            }
        }
    }
    if (order.size() != n_alive) {
        throw std::logic_error("schedule dependency cycle");
    }
    return order;
}

}  // namespace

ExecutionPlan compile_plan(const ExtractionSchedule &schedule, const RunConfig &cfg) {
    if (cfg.cnot.dim() != 4) {
        throw std::invalid_argument("RunConfig.cnot must be a two-qubit channel");
    }
    if (!(cfg.p_init >= 0 && cfg.p_init <= 1)) {
        throw std::invalid_argument("p_init must lie in [0, 1]");
    }
    if (cfg.encoded != 0 && cfg.encoded != 1) {
        throw std::invalid_argument("encoded state must be 0 or 1");
    }
    std::vector<RawOp> ops = lower(schedule, cfg);
    merge_single_qubit_gates(ops);
    fold_into_two_qubit_channels(ops);
    std::vector<size_t> order = linearize(ops, schedule, cfg.reorder);

    ExecutionPlan plan;
    plan.readout = schedule.readout;
    plan.noise = noise_channel({NoiseKind::depolarizing, cfg.p_init});
    CodeSpec code;
    int x_index = 0;
    for (const auto &s : code.stabilizers()) {
        if (s.family != 'X') {
            continue;
        }
        PauliString p = s.op;
        if (cfg.projection_signs >> x_index & 1) {
            p.phase = (uint8_t)((p.phase + 2) % 4);
        }
        plan.projectors.push_back(p);
        x_index++;
    }

    std::set<int> live;
    bool prefix_open = true;
    for (size_t i : order) {
        const RawOp &r = ops[i];
        PlanOp op{r.kind};
        op.q0 = r.qubits.empty() ? -1 : r.qubits[0];
        switch (r.kind) {
            case PlanOp::gate1:
                op.index = (int)plan.gates1.size();
                plan.gates1.push_back(r.m);
                break;
            case PlanOp::gate2: {
                op.q1 = r.qubits[1];
                ComplexMatrix pre = kron(r.pre[0], r.pre[1]);
                ComplexMatrix post = kron(r.post[0], r.post[1]);
                std::vector<ComplexMatrix> ks;
                for (const auto &k : cfg.cnot.kraus_ops()) {
                    ks.push_back(post * k * pre);
                }
                op.index = (int)plan.channels2.size();
                plan.channels2.emplace_back(std::move(ks), cfg.cnot.cp_defect());
                live.insert(op.q0);
                live.insert(op.q1);
                break;
            }
            case PlanOp::project:
                for (int q : r.qubits) {
                    live.insert(q);
                }
                break;
            case PlanOp::measure:
            case PlanOp::discard:
                live.erase(op.q0);
                break;
            default:
                break;
        }
        bool stochastic = r.kind == PlanOp::noise1 || r.kind == PlanOp::measure || r.kind == PlanOp::discard ||
                          (r.kind == PlanOp::gate2 && !cfg.cnot.is_unitary());
        if (prefix_open && stochastic) {
            plan.prefix_end = plan.ops.size();
            prefix_open = false;
        }
        if (!prefix_open && r.kind == PlanOp::project) {
            throw std::logic_error("stabilizer projection must precede every noisy operation");
        }
        plan.ops.push_back(op);
        plan.peak_width = std::max(plan.peak_width, live.size());
    }
    if (prefix_open) {
        plan.prefix_end = plan.ops.size();
    }
    plan.pure = cfg.cnot.is_unitary() && cfg.p_init <= 0;
    return plan;
}

std::string ExecutionPlan::describe() const {
    static const char *names[] = {"R", "U1", "NOISE", "CH2", "PROJ", "M", "DROP"};
    std::stringstream ss;
    ss << "# peak width " << peak_width << ", deterministic prefix " << prefix_end << " of " << ops.size()
       << " ops" << (pure ? ", pure" : "") << "\n";
    for (const auto &op : ops) {
        ss << names[op.kind];
        if (op.q0 >= 0) {
            ss << " " << op.q0;
        }
        if (op.q1 >= 0) {
            ss << " " << op.q1;
        }
        ss << "\n";
    }
    return ss.str();
}

namespace {

using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

constexpr double kPruneWeight = 1e-14;

// Qubits still in a product state are held as single-qubit factors until their first entangling op.
struct PureRegister {
    StateVector psi;
    std::array<Vec2, 32> pending;
    uint32_t pending_mask = 0;
    uint32_t raw = 0;
    double scalar = 1.0;

    bool is_pending(int q) const {
        return pending_mask >> q & 1;
    }
    void make_live(int q) {
        if (is_pending(q)) {
            psi.append_qubit(q, pending[q](0), pending[q](1));
            pending_mask &= ~(1u << q);
        } else if (!psi.has_label(q)) {
            throw std::logic_error("operation on an unprepared qubit");
        }
    }
};

struct MixedRegister {
    DensityMatrix rho;
    std::array<Mat2, 32> pending;
    uint32_t pending_mask = 0;
    uint32_t raw = 0;
    double scalar = 1.0;

    bool is_pending(int q) const {
        return pending_mask >> q & 1;
    }
    void make_live(int q) {
        if (is_pending(q)) {
            rho.append_qubit(q, pending[q]);
            pending_mask &= ~(1u << q);
        } else if (!rho.has_label(q)) {
            throw std::logic_error("operation on an unprepared qubit");
        }
    }
};

void check_label(int q) {
    if (q < 0 || q >= 32) {
        throw std::out_of_range("qubit label out of range");
    }
}

/// Runs the deterministic prefix. Every op there is unitary or a projection.
PureRegister run_prefix(const ExecutionPlan &plan) {
    PureRegister reg;
    for (size_t i = 0; i < plan.prefix_end; i++) {
        const PlanOp &op = plan.ops[i];
        switch (op.kind) {
            case PlanOp::prepare:
                check_label(op.q0);
                reg.pending[op.q0] = Vec2(1, 0);
                reg.pending_mask |= 1u << op.q0;
                break;
            case PlanOp::gate1:
                if (reg.is_pending(op.q0)) {
                    reg.pending[op.q0] = plan.gates1[op.index] * reg.pending[op.q0];
                } else {
                    reg.psi.apply_operator(plan.gates1[op.index], {op.q0});
                }
                break;
            case PlanOp::gate2:
                reg.make_live(op.q0);
                reg.make_live(op.q1);
                reg.psi.apply_operator(plan.channels2[op.index].kraus_ops()[0], {op.q0, op.q1});
                break;
            case PlanOp::project: {
                for (int q = 0; q < 32; q++) {
                    if (reg.is_pending(q)) {
                        reg.make_live(q);
                    }
                }
                for (const auto &p : plan.projectors) {
                    StateVector flipped = reg.psi;
                    apply_pauli(flipped, p);
                    auto &a = reg.psi.mutable_amplitudes();
                    const auto &b = flipped.amplitudes();
                    for (size_t k = 0; k < a.size(); k++) {
                        a[k] = 0.5 * (a[k] + b[k]);
                    }
                }
                double w = reg.psi.norm2();
                if (w < 1e-12) {
                    throw std::runtime_error("stabilizer projection has zero weight for the requested signs");
                }
                reg.psi.normalize();
                break;
            }
            default:
                throw std::logic_error("stochastic op inside the deterministic prefix");
        }
    }
    return reg;
}

struct Accumulator {
    const Readout &readout;
    std::vector<double> &probabilities;
    void add(uint32_t raw, double w) {
        probabilities[readout.key_of(raw)] += w;
    }
};

void dfs_pure(const ExecutionPlan &plan, size_t i, PureRegister reg, Accumulator &acc) {
    for (; i < plan.ops.size(); i++) {
        const PlanOp &op = plan.ops[i];
        switch (op.kind) {
            case PlanOp::prepare:
                check_label(op.q0);
                reg.pending[op.q0] = Vec2(1, 0);
                reg.pending_mask |= 1u << op.q0;
                break;
            case PlanOp::gate1:
                if (reg.is_pending(op.q0)) {
                    reg.pending[op.q0] = plan.gates1[op.index] * reg.pending[op.q0];
                } else {
                    reg.psi.apply_operator(plan.gates1[op.index], {op.q0});
                }
                break;
            case PlanOp::gate2:
                reg.make_live(op.q0);
                reg.make_live(op.q1);
                reg.psi.apply_operator(plan.channels2[op.index].kraus_ops()[0], {op.q0, op.q1});
                break;
            case PlanOp::measure:
            case PlanOp::discard: {
                bool record = op.kind == PlanOp::measure;
                if (reg.is_pending(op.q0)) {
                    Vec2 v = reg.pending[op.q0];
                    reg.pending_mask &= ~(1u << op.q0);
                    for (int b = 0; b < 2; b++) {
                        double w = std::norm(v(b));
                        if (reg.scalar * w * reg.psi.norm2() < kPruneWeight) {
                            continue;
                        }
                        PureRegister next = reg;
                        next.scalar *= w;
                        if (record && b) {
                            next.raw |= 1u << op.q0;
                        }
                        dfs_pure(plan, i + 1, std::move(next), acc);
                    }
                    return;
                }
                for (int b = 0; b < 2; b++) {
                    PureRegister next = reg;
                    double w = next.psi.project_out(op.q0, b);
                    if (reg.scalar * w < kPruneWeight) {
                        continue;
                    }
                    if (record && b) {
                        next.raw |= 1u << op.q0;
                    }
                    dfs_pure(plan, i + 1, std::move(next), acc);
                }
                return;
            }
            default:
                throw std::logic_error("unexpected op in a pure plan");
        }
    }
    acc.add(reg.raw, reg.scalar * reg.psi.norm2());
}

struct MixedContext {
    const ExecutionPlan &plan;
    std::vector<ComplexMatrix> superops;
    ComplexMatrix noise_superop;
};

void dfs_mixed(const MixedContext &ctx, size_t i, MixedRegister reg, Accumulator &acc) {
    const ExecutionPlan &plan = ctx.plan;
    for (; i < plan.ops.size(); i++) {
        const PlanOp &op = plan.ops[i];
        switch (op.kind) {
            case PlanOp::prepare:
                check_label(op.q0);
                reg.pending[op.q0] = Mat2::Zero();
                reg.pending[op.q0](0, 0) = 1;
                reg.pending_mask |= 1u << op.q0;
                break;
            case PlanOp::gate1: {
                const ComplexMatrix &u = plan.gates1[op.index];
                if (reg.is_pending(op.q0)) {
                    reg.pending[op.q0] = u * reg.pending[op.q0] * u.adjoint();
                } else {
                    reg.rho.apply_unitary(u, {op.q0});
                }
                break;
            }
            case PlanOp::noise1:
                if (reg.is_pending(op.q0)) {
                    reg.pending[op.q0] = plan.noise.apply(reg.pending[op.q0]);
                } else {
                    reg.rho.apply_superoperator(ctx.noise_superop, {op.q0});
                }
                break;
            case PlanOp::gate2: {
                reg.make_live(op.q0);
                reg.make_live(op.q1);
                const KrausChannel &ch = plan.channels2[op.index];
                if (ch.is_unitary()) {
                    reg.rho.apply_unitary(ch.kraus_ops()[0], {op.q0, op.q1});
                } else {
                    reg.rho.apply_superoperator(ctx.superops[op.index], {op.q0, op.q1});
                }
                break;
            }
            case PlanOp::discard:
                if (reg.is_pending(op.q0)) {
                    reg.pending_mask &= ~(1u << op.q0);
                } else {
                    reg.rho.trace_out(op.q0);
                }
                break;
            case PlanOp::measure: {
                if (reg.is_pending(op.q0)) {
                    Mat2 m = reg.pending[op.q0];
                    reg.pending_mask &= ~(1u << op.q0);
                    double tr = reg.rho.trace().real();
                    for (int b = 0; b < 2; b++) {
                        double w = m(b, b).real();
                        if (reg.scalar * w * tr < kPruneWeight) {
                            continue;
                        }
                        MixedRegister next = reg;
                        next.scalar *= w;
                        if (b) {
                            next.raw |= 1u << op.q0;
                        }
                        dfs_mixed(ctx, i + 1, std::move(next), acc);
                    }
                    return;
                }
                for (int b = 0; b < 2; b++) {
                    MixedRegister next = b ? std::move(reg) : reg;
                    double w = next.rho.project_out(op.q0, b);
                    if (next.scalar * w < kPruneWeight) {
                        continue;
                    }
                    if (b) {
                        next.raw |= 1u << op.q0;
                    }
                    dfs_mixed(ctx, i + 1, std::move(next), acc);
                }
                return;
            }
            default:
                throw std::logic_error("unexpected op after the deterministic prefix");
        }
    }
    double tr = reg.rho.trace().real();
    for (int q = 0; q < 32; q++) {
        if (reg.is_pending(q)) {
            tr *= reg.pending[q].trace().real();
        }
    }
    acc.add(reg.raw, reg.scalar * tr);
}

}  // namespace

SyndromeDistribution run_exact(const RunConfig &cfg) {
    return run_exact(build_schedule(cfg.scenario, cfg.serialization), cfg);
}

SyndromeDistribution run_exact(const ExtractionSchedule &schedule, const RunConfig &cfg) {
    ExecutionPlan plan = compile_plan(schedule, cfg);
    if (plan.peak_width > cfg.max_width) {
        std::stringstream ss;
        ss << "exact backend refuses dense evolution: the plan needs " << plan.peak_width
           << " simultaneously entangled qubits (limit " << cfg.max_width
           << "); use the trajectory backend for this configuration";
        throw std::runtime_error(ss.str());
    }
    SyndromeDistribution out;
    Accumulator acc{plan.readout, out.probabilities};
    PureRegister prefix = run_prefix(plan);
    if (plan.pure) {
        dfs_pure(plan, plan.prefix_end, std::move(prefix), acc);
        return out;
    }
    MixedContext ctx{plan, {}, superoperator_of(gates::identity(2))};
    ctx.noise_superop = plan.noise.superoperator();
    for (const auto &ch : plan.channels2) {
        ctx.superops.push_back(ch.is_unitary() ? ComplexMatrix() : ch.superoperator());
    }
    MixedRegister reg;
    reg.rho = DensityMatrix::from_state(prefix.psi);
    reg.pending_mask = prefix.pending_mask;
    for (int q = 0; q < 32; q++) {
        if (prefix.is_pending(q)) {
            reg.pending[q] = prefix.pending[q] * prefix.pending[q].adjoint();
        }
    }
    dfs_mixed(ctx, plan.prefix_end, std::move(reg), acc);
    return out;
}

namespace {

// Branch weights of a Kraus channel: either constants (every K^dagger K proportional to I) or
// traces against the reduced density matrix.
struct SamplingTable {
    std::vector<ComplexMatrix> kraus;
    std::vector<Eigen::Matrix4cd> kdk4;
    std::vector<Mat2> kdk2;
    std::vector<double> constant_weights;
    bool state_independent = false;

    explicit SamplingTable(const KrausChannel &ch) : kraus(ch.kraus_ops()) {
        size_t d = ch.dim();
        state_independent = true;
        for (const auto &k : kraus) {
            ComplexMatrix m = k.adjoint() * k;
            double c = m(0, 0).real();
            if (max_abs(m - c * gates::identity(d)) > 1e-12) {
                state_independent = false;
            }
            constant_weights.push_back(c);
            if (d == 4) {
                kdk4.push_back(m);
            } else {
                kdk2.push_back(m);
            }
        }
    }
};

size_t pick_index(const std::vector<double> &w, double total, double u) {
    double x = u * total;
    size_t last = 0;
    for (size_t j = 0; j < w.size(); j++) {
        if (w[j] <= 0) {
            continue;
        }
        last = j;
        if (x < w[j]) {
            return j;
        }
        x -= w[j];
    }
    return last;
}

Eigen::Matrix4cd reduced_two_qubit(const StateVector &psi, int s0, int s1) {
    const auto &a = psi.amplitudes();
    size_t m0 = size_t{1} << s0, m1 = size_t{1} << s1;
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (size_t i = 0; i < a.size(); i++) {
        if (i & (m0 | m1)) {
            continue;
        }
        Complex v[4] = {a[i], a[i | m1], a[i | m0], a[i | m0 | m1]};
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                rho(r, c) += v[r] * std::conj(v[c]);
            }
        }
    }
    return rho;
}

Mat2 reduced_one_qubit(const StateVector &psi, int s) {
    const auto &a = psi.amplitudes();
    size_t m = size_t{1} << s;
    Mat2 rho = Mat2::Zero();
    for (size_t i = 0; i < a.size(); i++) {
        if (i & m) {
            continue;
        }
        Complex v0 = a[i], v1 = a[i | m];
        rho(0, 0) += std::norm(v0);
        rho(0, 1) += v0 * std::conj(v1);
        rho(1, 0) += v1 * std::conj(v0);
        rho(1, 1) += std::norm(v1);
    }
    return rho;
}

void scale_state(StateVector &psi, double factor) {
    for (auto &a : psi.mutable_amplitudes()) {
        a *= factor;
    }
}

struct TrajectoryContext {
    const ExecutionPlan &plan;
    const PureRegister &prefix;
    std::vector<SamplingTable> channels;
    SamplingTable noise;
};

// Splits `count` shots over branches with weights w (summing to total) by sequential binomials.
void split_counts(const std::vector<double> &w, double total, uint64_t count, PhiloxStream &rng,
                  std::vector<uint64_t> &out) {
    out.assign(w.size(), 0);
    if (count == 1) {
        out[pick_index(w, total, rng.uniform())] = 1;
        return;
    }
    double rest = total;
    size_t last = 0;
    for (size_t j = 0; j < w.size(); j++) {
        if (w[j] > 0) {
            last = j;
        }
    }
    for (size_t j = 0; j < w.size() && count > 0; j++) {
        if (w[j] <= 0) {
            continue;
        }
        if (j == last || w[j] >= rest) {
            out[j] = count;
            return;
        }
        std::binomial_distribution<uint64_t> dist(count, w[j] / rest);
        uint64_t k = dist(rng);
        out[j] = k;
        count -= k;
        rest -= w[j];
    }
}

// Shot branching: all shots sharing a history share one state. At each stochastic op the shots
// are split multinomially over the branches, which gives the same joint law of outcome counts as
// running every shot independently.
void branch_trajectories(const TrajectoryContext &ctx, size_t i, PureRegister reg, uint64_t count,
                         PhiloxStream &rng, std::vector<uint64_t> &counts) {
    const ExecutionPlan &plan = ctx.plan;
    std::vector<double> w;
    std::vector<uint64_t> split;
    auto fork = [&](size_t j, auto &&prepare_child) {
        // Later children reuse reg; earlier ones get copies.
        size_t last = 0;
        for (size_t k = 0; k < split.size(); k++) {
            if (split[k]) {
                last = k;
            }
        }
        std::vector<uint64_t> mine = split;
        for (size_t k = 0; k < mine.size(); k++) {
            if (!mine[k]) {
                continue;
            }
            PureRegister child = k == last ? std::move(reg) : reg;
            prepare_child(child, k);
            branch_trajectories(ctx, j + 1, std::move(child), mine[k], rng, counts);
        }
    };
    for (; i < plan.ops.size(); i++) {
        const PlanOp &op = plan.ops[i];
        switch (op.kind) {
            case PlanOp::prepare:
                reg.pending[op.q0] = Vec2(1, 0);
                reg.pending_mask |= 1u << op.q0;
                break;
            case PlanOp::gate1:
                if (reg.is_pending(op.q0)) {
                    reg.pending[op.q0] = plan.gates1[op.index] * reg.pending[op.q0];
                } else {
                    reg.psi.apply_operator(plan.gates1[op.index], {op.q0});
                }
                break;
            case PlanOp::noise1: {
                const SamplingTable &t = ctx.noise;
                double total = 1.0;
                if (t.state_independent) {
                    w = t.constant_weights;
                } else {
                    w.resize(t.kraus.size());
                    Mat2 red = reg.is_pending(op.q0) ? Mat2(reg.pending[op.q0] * reg.pending[op.q0].adjoint())
                                                     : reduced_one_qubit(reg.psi, reg.psi.slot_of(op.q0));
                    total = 0;
                    for (size_t k = 0; k < w.size(); k++) {
                        w[k] = std::max(0.0, (t.kdk2[k] * red).trace().real());
                        total += w[k];
                    }
                }
                split_counts(w, total, count, rng, split);
                std::vector<double> weights = w;
                fork(i, [&](PureRegister &child, size_t j) {
                    if (child.is_pending(op.q0)) {
                        Vec2 v = t.kraus[j] * child.pending[op.q0];
                        child.pending[op.q0] = v / v.norm();
                    } else {
                        child.psi.apply_operator(t.kraus[j], {op.q0});
                        scale_state(child.psi, std::sqrt(total / weights[j]));
                    }
                });
                return;
            }
            case PlanOp::gate2: {
                reg.make_live(op.q0);
                reg.make_live(op.q1);
                const SamplingTable &t = ctx.channels[op.index];
                if (t.kraus.size() == 1) {
                    reg.psi.apply_operator(t.kraus[0], {op.q0, op.q1});
                    break;
                }
                Eigen::Matrix4cd red = reduced_two_qubit(reg.psi, reg.psi.slot_of(op.q0), reg.psi.slot_of(op.q1));
                double norm = red.trace().real();
                w.resize(t.kraus.size());
                double total = 0;
                for (size_t k = 0; k < w.size(); k++) {
                    w[k] = std::max(0.0, (t.kdk4[k] * red).trace().real());
                    total += w[k];
                }
                if (!(total > 1e-14 * norm)) {
                    throw std::runtime_error("every Kraus branch has vanishing norm on this state");
                }
                split_counts(w, total, count, rng, split);
                std::vector<double> weights = w;
                fork(i, [&](PureRegister &child, size_t j) {
                    child.psi.apply_operator(t.kraus[j], {op.q0, op.q1});
                    scale_state(child.psi, std::sqrt(norm / weights[j]));
                });
                return;
            }
            case PlanOp::measure:
            case PlanOp::discard: {
                bool record = op.kind == PlanOp::measure;
                double p1;
                if (reg.is_pending(op.q0)) {
                    Vec2 v = reg.pending[op.q0];
                    p1 = std::norm(v(1)) / v.squaredNorm();
                } else {
                    p1 = std::clamp(reg.psi.probability_one(op.q0) / reg.psi.norm2(), 0.0, 1.0);
                }
                w = {1 - p1, p1};
                split_counts(w, 1.0, count, rng, split);
                fork(i, [&](PureRegister &child, size_t b) {
                    if (child.is_pending(op.q0)) {
                        child.pending_mask &= ~(1u << op.q0);
                    } else {
                        double kept = child.psi.project_out(op.q0, (int)b);
                        if (kept <= 0) {
                            throw std::runtime_error("sampled a measurement outcome of zero probability");
                        }
                        scale_state(child.psi, 1.0 / std::sqrt(kept));
                    }
                    if (record && b) {
                        child.raw |= 1u << op.q0;
                    }
                });
                return;
            }
            default:
                throw std::logic_error("unexpected op after the deterministic prefix");
        }
    }
    counts[plan.readout.key_of(reg.raw)] += count;
}

}  // namespace

constexpr uint64_t kShotsPerChunk = uint64_t{1} << 16;

SyndromeDistribution run_trajectories(const RunConfig &cfg) {
    return run_trajectories(build_schedule(cfg.scenario, cfg.serialization), cfg);
}

SyndromeDistribution run_trajectories(const ExtractionSchedule &schedule, const RunConfig &cfg) {
    if (cfg.n_samples < 1) {
        throw std::invalid_argument("trajectory backend needs n_samples >= 1");
    }
    ExecutionPlan plan = compile_plan(schedule, cfg);
    if (plan.peak_width > 26) {
        throw std::runtime_error("trajectory register would exceed 26 qubits");
    }
    PureRegister prefix = run_prefix(plan);
    TrajectoryContext ctx{plan, prefix, {}, SamplingTable(plan.noise)};
    for (const auto &ch : plan.channels2) {
        ctx.channels.emplace_back(ch);
    }

    // Shots are cut into fixed-size chunks, chunk c drawing from stream stream_offset + c, so the
    // counts do not depend on the thread count.
    size_t n_chunks = (cfg.n_samples + kShotsPerChunk - 1) / kShotsPerChunk;
    size_t n_threads = std::max<size_t>(1, std::min(cfg.threads, n_chunks));
    std::vector<std::vector<uint64_t>> partial(n_chunks, std::vector<uint64_t>(kNumKeys, 0));
    std::vector<std::exception_ptr> errors(n_threads);
    auto worker = [&](size_t t) {
        try {
            for (size_t c = t; c < n_chunks; c += n_threads) {
                uint64_t shots = std::min<uint64_t>(kShotsPerChunk, cfg.n_samples - c * kShotsPerChunk);
                PhiloxStream rng(cfg.seed, cfg.stream_offset + c);
                branch_trajectories(ctx, plan.prefix_end, prefix, shots, rng, partial[c]);
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < n_threads; t++) {
            pool.emplace_back(worker, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    SyndromeDistribution out;
    out.counts.assign(kNumKeys, 0);
    for (const auto &p : partial) {
        for (size_t k = 0; k < kNumKeys; k++) {
            out.counts[k] += p[k];
        }
    }
    out.n_samples = cfg.n_samples;
    double n = (double)cfg.n_samples;
    for (size_t k = 0; k < kNumKeys; k++) {
        double p = (double)out.counts[k] / n;
        out.probabilities[k] = p;
        out.std_errors[k] = std::sqrt(p * (1 - p) / n);
    }
    return out;
}

SyndromeDistribution run(const RunConfig &cfg) {
    return cfg.backend == Backend::exact ? run_exact(cfg) : run_trajectories(cfg);
}

}  // namespace s17
