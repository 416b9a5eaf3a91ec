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

#include "s17/schedule.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace s17 {

std::string scenario_name(Scenario s) {
    return s == Scenario::I ? "I" : "II";
}

std::string serialization_name(Serialization s) {
    return s == Serialization::concurrent ? "concurrent" : "serialized";
}

Scenario parse_scenario(const std::string &text) {
    if (text == "I" || text == "1" || text == "i") {
        return Scenario::I;
    }
    if (text == "II" || text == "2" || text == "ii") {
        return Scenario::II;
    }
    throw std::invalid_argument("unknown scenario '" + text + "' (expected I or II)");
}

Serialization parse_serialization(const std::string &text) {
    if (text == "concurrent") {
        return Serialization::concurrent;
    }
    if (text == "serialized") {
        return Serialization::serialized;
    }
    throw std::invalid_argument("unknown serialization '" + text + "' (expected concurrent or serialized)");
}

std::string op_name(ScheduleOp::Kind kind) {
    switch (kind) {
        case ScheduleOp::prepare:
            return "R";
        case ScheduleOp::hadamard:
            return "H";
        case ScheduleOp::encode_logical_x:
            return "XL?";
        case ScheduleOp::project_x_stabilizers:
            return "PROJ_X";
        case ScheduleOp::prep_noise:
            return "DEPOL";
        case ScheduleOp::cnot:
            return "CNOT";
        case ScheduleOp::measure:
            return "M";
        case ScheduleOp::discard:
            return "DROP";
    }
    return "?";
}

uint32_t Readout::key_of(uint32_t raw_record) const {
    uint32_t key = 0;
    for (size_t i = 0; i < masks.size(); i++) {
        key |= (uint32_t)(std::popcount(raw_record & masks[i]) & 1) << i;
    }
    return key;
}

namespace {

/// Top-left grid coordinate of each stabilizer's plaquette; boundary plaquettes stick out of the grid.
std::pair<int, int> plaquette_origin(const std::string &name) {
    static const std::map<std::string, std::pair<int, int>> origins{
        {"X2", {0, 0}}, {"X7", {1, 1}}, {"X4", {0, 2}}, {"X5", {1, -1}},
        {"Z3", {0, 1}}, {"Z6", {1, 0}}, {"Z1", {-1, 0}}, {"Z8", {2, 1}},
    };
    return origins.at(name);
}

uint32_t support_mask(const PauliString &p) {
    return (uint32_t)p.support();
}

}  // namespace

std::vector<std::pair<int, int>> coupling_order(const CodeSpec &code, const Stabilizer &s) {
    auto [r0, c0] = plaquette_origin(s.name);
    std::vector<std::pair<int, int>> out;
    for (int q : code.data_qubits()) {
        if (s.op.at(q) == 'I') {
            continue;
        }
        auto [r, c] = CodeSpec::grid_position(q);
        int dr = r - r0, dc = c - c0;
        if (dr < 0 || dr > 1 || dc < 0 || dc > 1) {
            throw std::logic_error("stabilizer " + s.name + " reaches outside its plaquette");
        }
        int layer = s.family == 'Z' ? 2 * dr + dc : dr + 2 * dc;
        out.push_back({layer, q});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> measured_ancillas(const CodeSpec &code, Scenario scenario) {
    std::vector<int> out;
    for (const auto &s : code.stabilizers()) {
        if (scenario == Scenario::II || s.family == 'Z') {
            out.push_back(s.ancilla);
        }
    }
    return out;
}

namespace {

// Whether data qubit q needs a basis change around the CNOT that couples it to stabilizer s.
bool needs_basis_change(const Stabilizer &s, int q) {
    char f = s.op.at(q);
    return s.family == 'Z' ? f == 'X' : f == 'Z';
}

ScheduleOp coupling_cnot(const Stabilizer &s, int q) {
    if (s.family == 'Z') {
        return {ScheduleOp::cnot, {q, s.ancilla}, s.ancilla};
    }
    return {ScheduleOp::cnot, {s.ancilla, q}, s.ancilla};
}

std::vector<int> topological_ancilla_order(const CodeSpec &code, const std::vector<int> &ancillas) {
    std::map<int, std::vector<std::pair<int, int>>> per_qubit;
    for (int a : ancillas) {
        for (auto [layer, q] : coupling_order(code, code.stabilizer_for_ancilla(a))) {
            per_qubit[q].push_back({layer, a});
        }
    }
    std::map<int, std::set<int>> preds;
    for (auto &[q, seq] : per_qubit) {
        std::sort(seq.begin(), seq.end());
        for (size_t i = 1; i < seq.size(); i++) {
            if (seq[i].first == seq[i - 1].first) {
                throw std::logic_error("two ancillas couple to the same qubit in one layer");
            }
            preds[seq[i].second].insert(seq[i - 1].second);
        }
    }
    std::vector<int> order;
    std::vector<int> remaining = ancillas;
    while (!remaining.empty()) {
        auto it = std::find_if(remaining.begin(), remaining.end(), [&](int a) {
            for (int p : preds[a]) {
                if (std::find(order.begin(), order.end(), p) == order.end()) {
                    return false;
                }
            }
            return true;
        });
        if (it == remaining.end()) {
            throw std::logic_error("coupling order admits no one-ancilla-at-a-time serialization");
        }
        order.push_back(*it);
        remaining.erase(it);
    }
    return order;
}

Readout make_readout(const CodeSpec &code, Scenario scenario) {
    Readout r;
    std::vector<int> ancillas = measured_ancillas(code, scenario);
    for (int a : ancillas) {
        r.names.push_back("anc_" + code.stabilizer_for_ancilla(a).name);
        r.masks.push_back(1u << a);
    }
    if (scenario == Scenario::I) {
        for (int a : ancillas) {
            const Stabilizer &s = code.stabilizer_for_ancilla(a);
            r.names.push_back("data_" + s.name);
            r.masks.push_back(support_mask(s.op));
        }
    }
    r.names.push_back("logical_Z");
    r.masks.push_back(support_mask(code.logical_z()));
    return r;
}

}  // namespace

ExtractionSchedule build_schedule(Scenario scenario, Serialization serialization) {
    CodeSpec code;
    ExtractionSchedule out;
    out.scenario = scenario;
    out.serialization = serialization;
    out.readout = make_readout(code, scenario);
    std::vector<int> ancillas = measured_ancillas(code, scenario);
    out.ancilla_order = topological_ancilla_order(code, ancillas);
    auto &ts = out.timesteps;
    bool concurrent = serialization == Serialization::concurrent;
    bool noisy_ancillas = scenario == Scenario::I;

    auto step = [&](std::vector<ScheduleOp> ops) {
        if (!ops.empty()) {
            ts.push_back(std::move(ops));
        }
    };

    std::vector<ScheduleOp> prep;
    for (int q : code.data_qubits()) {
        prep.push_back({ScheduleOp::prepare, {q}});
    }
    if (concurrent) {
        for (int a : ancillas) {
            prep.push_back({ScheduleOp::prepare, {a}, a});
        }
    }
    step(prep);
    std::vector<ScheduleOp> rot;
    for (int q : code.data_qubits()) {
        if (code.is_rotated(q)) {
            rot.push_back({ScheduleOp::hadamard, {q}});
        }
    }
    step(rot);
    if (scenario == Scenario::II) {
        step({{ScheduleOp::project_x_stabilizers, code.data_qubits()}});
    }
    std::vector<int> xl;
    for (int q : code.data_qubits()) {
        if (code.logical_x().at(q) != 'I') {
            xl.push_back(q);
        }
    }
    step({{ScheduleOp::encode_logical_x, xl}});
    std::vector<ScheduleOp> noise;
    for (int q : code.data_qubits()) {
        noise.push_back({ScheduleOp::prep_noise, {q}});
    }
    if (concurrent && noisy_ancillas) {
        for (int a : ancillas) {
            noise.push_back({ScheduleOp::prep_noise, {a}, a});
        }
    }
    step(noise);

    if (concurrent) {
        std::vector<ScheduleOp> anc_h;
        for (int a : ancillas) {
            if (code.stabilizer_for_ancilla(a).family == 'X') {
                anc_h.push_back({ScheduleOp::hadamard, {a}, a});
            }
        }
        step(anc_h);
        for (int layer = 0; layer < 4; layer++) {
            std::vector<ScheduleOp> pre, gates, post;
            for (int a : ancillas) {
                const Stabilizer &s = code.stabilizer_for_ancilla(a);
                for (auto [l, q] : coupling_order(code, s)) {
                    if (l != layer) {
                        continue;
                    }
                    if (needs_basis_change(s, q)) {
                        pre.push_back({ScheduleOp::hadamard, {q}, a});
                        post.push_back({ScheduleOp::hadamard, {q}, a});
                    }
                    gates.push_back(coupling_cnot(s, q));
                }
            }
            step(pre);
            step(gates);
            step(post);
        }
        step(anc_h);
        std::vector<ScheduleOp> meas;
        for (int a : ancillas) {
            meas.push_back({ScheduleOp::measure, {a}, a});
        }
        step(meas);
    } else {
        for (int a : out.ancilla_order) {
            const Stabilizer &s = code.stabilizer_for_ancilla(a);
            step({{ScheduleOp::prepare, {a}, a}});
            if (noisy_ancillas) {
                step({{ScheduleOp::prep_noise, {a}, a}});
            }
            if (s.family == 'X') {
                step({{ScheduleOp::hadamard, {a}, a}});
            }
            for (auto [l, q] : coupling_order(code, s)) {
                (void)l;
                if (needs_basis_change(s, q)) {
                    step({{ScheduleOp::hadamard, {q}, a}});
                }
                step({coupling_cnot(s, q)});
                if (needs_basis_change(s, q)) {
                    step({{ScheduleOp::hadamard, {q}, a}});
                }
            }
            if (s.family == 'X') {
                step({{ScheduleOp::hadamard, {a}, a}});
            }
            step({{ScheduleOp::measure, {a}, a}});
        }
    }

    // Final data readout. Scenario I reads every data qubit in the basis of its Z-family
    // stabilizer factors; scenario II keeps only the logical Z support.
    std::vector<ScheduleOp> final_h, final_m;
    uint32_t logical = support_mask(code.logical_z());
    for (int q : code.data_qubits()) {
        bool keep = scenario == Scenario::I || (logical >> q & 1);
        if (!keep) {
            final_m.push_back({ScheduleOp::discard, {q}});
            continue;
        }
        if (code.is_rotated(q)) {
            final_h.push_back({ScheduleOp::hadamard, {q}});
        }
        final_m.push_back({ScheduleOp::measure, {q}});
    }
    step(final_h);
    step(final_m);
    out.validate();
    return out;
}

void ExtractionSchedule::validate() const {
    std::map<int, int> measured;
    for (size_t t = 0; t < timesteps.size(); t++) {
        std::set<int> used;
        for (const auto &op : timesteps[t]) {
            for (int q : op.qubits) {
                if (!used.insert(q).second) {
                    std::stringstream ss;
                    ss << "timestep " << t << " uses qubit " << q << " twice";
                    throw std::logic_error(ss.str());
                }
            }
            if (op.kind == ScheduleOp::measure) {
                measured[op.qubits[0]]++;
            }
        }
    }
    CodeSpec code;
    for (int a : measured_ancillas(code, scenario)) {
        if (measured[a] != 1) {
            std::stringstream ss;
            ss << "ancilla " << a << " is measured " << measured[a] << " times";
            throw std::logic_error(ss.str());
        }
    }
}

std::string ExtractionSchedule::dump() const {
    std::stringstream ss;
    ss << "# scenario " << scenario_name(scenario) << ", " << serialization_name(serialization) << "\n";
    for (size_t t = 0; t < timesteps.size(); t++) {
        ss << "t" << t << ":";
        for (size_t i = 0; i < timesteps[t].size(); i++) {
            const auto &op = timesteps[t][i];
            ss << (i ? " | " : " ") << op_name(op.kind);
            for (int q : op.qubits) {
                ss << " " << q;
            }
        }
        ss << "\n";
    }
    ss << "# readout";
    for (size_t i = 0; i < readout.names.size(); i++) {
        ss << " " << i << "=" << readout.names[i];
    }
    ss << "\n";
    return ss.str();
}

size_t ExtractionSchedule::op_count() const {
    size_t n = 0;
    for (const auto &t : timesteps) {
        n += t.size();
    }
    return n;
}

}  // namespace s17
