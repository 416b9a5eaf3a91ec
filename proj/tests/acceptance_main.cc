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


// Acceptance suite. Prints one PASS/FAIL line per criterion; with a criterion name as the only
// argument, runs just that one. Exits nonzero if any selected criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "binomial_check.h"
#include "pauli_oracle.h"
#include "s17/benchmark.h"
#include "s17/decoder.h"
#include "s17/fidelity.h"
#include "s17/floating_gate.h"
#include "s17/spin_exchange.h"
#include "s17/surface17.h"

using namespace s17;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *f, ...) {
    char buf[1024];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

void note(Outcome &o, bool ok, const std::string &what) {
    o.pass = o.pass && ok;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += (ok ? "" : "FAILED ") + what;
}

std::vector<BenchmarkRecord> run_preset(const std::string &name) {
    std::vector<BenchmarkRecord> all;
    for (SweepSpec s : find_preset(name).sweeps) {
        s.threads = std::max(1u, std::thread::hardware_concurrency());
        auto r = run_benchmark(s);
        all.insert(all.end(), r.begin(), r.end());
    }
    return all;
}

double min_infidelity(const std::vector<BenchmarkRecord> &recs) {
    double m = INFINITY;
    for (const auto &r : recs) m = std::min(m, r.infidelity);
    return m;
}

double max_infidelity(const std::vector<BenchmarkRecord> &recs) {
    double m = 0;
    for (const auto &r : recs) m = std::max(m, r.infidelity);
    return m;
}

Outcome ideal_limit() {
    Outcome o;
    double ldiv_ideal = gate_infidelity(KrausChannel::unitary(ldiv_ideal_cnot()), gates::cnot());
    note(o, ldiv_ideal <= 1e-10, fmt("ldiv_ideal_cnot %.2e", ldiv_ideal));
    for (auto v : {FloatingVariant::v1, FloatingVariant::v2}) {
        auto [d1, d2] = default_domain(v == FloatingVariant::v1 ? GateFamily::v1 : GateFamily::v2);
        double worst = 0;
        for (size_t i = 0; i < 16; i++) {
            for (size_t j = 0; j < 16; j++) {
                FloatingGateParams p{cell_centre(d1, 16, i), cell_centre(d2, 16, j), v};
                worst = std::max(worst, gate_infidelity(floating_cnot(p, HamiltonianChoice::flip_flop), gates::cnot()));
            }
        }
        note(o, worst <= 1e-10, fmt("%s flip-flop max over 16x16 %.2e", v == FloatingVariant::v1 ? "v1" : "v2", worst));
    }
    LdivParams lp;
    lp.t = 1.0;
    lp.gamma = 0.0;
    lp.delta = 0.0;
    double noisy = gate_infidelity(ldiv_noisy_cnot(lp), gates::cnot());
    note(o, noisy <= 1e-10, fmt("ldiv_noisy_cnot(t=1, gamma=delta=0) %.2e", noisy));
    return o;
}

// Symplectic product by explicit per-qubit comparison.
bool oracle_commutes(const PauliString &a, const PauliString &b) {
    int anti = 0;
    for (int q = 0; q < (int)a.n; q++) {
        char x = a.at(q), y = b.at(q);
        if (x != 'I' && y != 'I' && x != y) anti++;
    }
    return anti % 2 == 0;
}

Outcome code_algebra() {
    Outcome o;
    CodeSpec code;
    const auto &s = code.stabilizers();
    size_t bad = 0;
    for (size_t i = 0; i < s.size(); i++) {
        for (size_t j = i + 1; j < s.size(); j++) bad += !oracle_commutes(s[i].op, s[j].op);
    }
    note(o, s.size() == 8 && bad == 0, fmt("%zu stabilizers, %zu anticommuting pairs", s.size(), bad));
    bad = 0;
    for (const auto &st : s) {
        bad += !oracle_commutes(st.op, code.logical_z()) + !oracle_commutes(st.op, code.logical_x());
    }
    note(o, bad == 0, fmt("logical/stabilizer anticommuting pairs %zu", bad));
    note(o, !oracle_commutes(code.logical_z(), code.logical_x()), "Z_L/X_L anticommute");
    auto errors = code.single_qubit_errors();
    size_t silent = 0;
    for (const auto &e : errors) {
        uint32_t syn = 0;
        for (size_t i = 0; i < s.size(); i++) syn |= (uint32_t)!oracle_commutes(e, s[i].op) << i;
        silent += syn == 0 || syn != code.syndrome_of_error(e);
    }
    note(o, errors.size() == 27 && silent == 0, fmt("%zu single-qubit Paulis, %zu undetected or mislabelled", errors.size(), silent));
    auto pairs = degenerate_pairs(code);
    size_t not_stab = 0;
    for (const auto &p : pairs) not_stab += !code.in_stabilizer_group(p.first * p.second);
    note(o, !pairs.empty() && not_stab == 0, fmt("%zu degenerate pairs, %zu not differing by a stabilizer", pairs.size(), not_stab));
    return o;
}

RunConfig ideal_config(Scenario sc, double p, int encoded) {
    RunConfig c;
    c.scenario = sc;
    c.p_init = p;
    c.encoded = encoded;
    return c;
}

Outcome oracle_equivalence() {
    Outcome o;
    double worst = 0;
    for (auto ser : {Serialization::concurrent, Serialization::serialized}) {
        for (double p : {0.002, 0.01}) {
            for (int enc : {0, 1}) {
                RunConfig c = ideal_config(Scenario::I, p, enc);
                c.serialization = ser;
                auto got = run_exact(c);
                auto want = oracle::pauli_branch_oracle(ser, p, enc);
                for (size_t k = 0; k < kNumKeys; k++) worst = std::max(worst, std::abs(got.probabilities[k] - want[k]));
            }
        }
    }
    note(o, worst <= 1e-10, fmt("exact vs Pauli-branch oracle max |dp| %.2e", worst));
    const size_t n = 100000;
    for (double p : {0.002, 0.01}) {
        for (int enc : {0, 1}) {
            RunConfig c = ideal_config(Scenario::I, p, enc);
            auto exact = run_exact(c);
            c.backend = Backend::trajectory;
            c.n_samples = n;
            c.seed = 2026 + enc;
            // Exact binomial tails per outcome, compared with the normal 4 sigma tail.
            double pv = oracle::min_outcome_p_value(exact.probabilities, run_trajectories(c).counts, n);
            note(o, pv >= oracle::kFourSigmaTail,
                 fmt("trajectory N=1e5 p_init=%g enc=%d min outcome p-value %.2e (4 sigma tail %.2e)", p, enc, pv,
                     oracle::kFourSigmaTail));
        }
    }
    return o;
}

Outcome noiseless() {
    Outcome o;
    SweepSpec spec = default_sweep(GateFamily::ideal, Scenario::I);
    for (auto sc : {Scenario::I, Scenario::II}) {
        spec.scenario = sc;
        spec.backend = Backend::exact;
        spec.n_samples = 0;
        auto [pc, se] = p_code_at(KrausChannel::unitary(gates::cnot()), spec, 0.0, 0);
        note(o, std::abs(pc) <= 1e-9, fmt("scenario %s exact p_code %.2e", scenario_name(sc).c_str(), pc));
        for (int enc : {0, 1}) {
            RunConfig c = ideal_config(sc, 0.0, enc);
            c.backend = Backend::trajectory;
            c.n_samples = 100000;
            c.seed = 99;
            auto d = run_trajectories(c);
            uint64_t off = d.n_samples - d.counts[enc ? 0x100 : 0];
            note(o, off == 0, fmt("scenario %s enc=%d error events %llu/1e5", scenario_name(sc).c_str(), enc,
                                 (unsigned long long)off));
        }
    }
    return o;
}

Outcome quadratic_regime() {
    Outcome o;
    auto recs = select_p_init(run_preset("fig5"), 0.0);
    auto low = lowest_decade(recs);
    LineFit f = log_log_fit(low);
    note(o, std::abs(f.slope - 2) <= 0.3,
         fmt("v1 p_init=0 lowest-decade slope %.3f +- %.3f over %zu points (target 2 +- 0.3)", f.slope, f.slope_stderr, f.n));
    return o;
}

Outcome linear_crossover() {
    Outcome o;
    auto all = run_preset("fig5");
    auto recs = select_p_init(all, 0.002);
    LineFit f = log_log_fit(recs);
    note(o, std::abs(f.slope - 1) <= 0.3, fmt("p_init=0.002 slope %.3f +- %.3f (target 1 +- 0.3)", f.slope, f.slope_stderr));
    double x = std::log10(min_infidelity(recs));
    double floor = std::pow(10.0, f.intercept + f.slope * x);
    note(o, floor >= 3e-5 && floor <= 3e-4, fmt("fitted p_code at minimal infidelity %.3e (target [3e-5, 3e-4])", floor));
    LineFit h = log_log_fit(select_p_init(all, 0.07));
    note(o, std::abs(h.slope) <= 2 * h.slope_stderr, fmt("p_init=0.07 slope %.4f +- %.4f (target 0 within 2 sigma)", h.slope, h.slope_stderr));
    return o;
}

Outcome spread() {
    Outcome o;
    auto recs = select_p_init(run_preset("fig5"), 0.0);
    double s = max_bin_spread(recs);
    note(o, s >= 1.5, fmt("v1 p_init=0 max matched-bin p_code ratio %.2f (target >= 1.5)", s));
    return o;
}

Outcome k2_comparison() {
    Outcome o;
    auto all = run_preset("fig11");
    auto with = select_gate(all, "ldiv");
    auto without = select_gate(all, "ldiv_no_k2");
    double mw = max_infidelity(with), mn = max_infidelity(without);
    note(o, mw >= 1e-2 && mw <= 4e-2, fmt("max infidelity with K2 %.3e (target [1e-2, 4e-2])", mw));
    note(o, mn >= 4e-3 && mn <= 1.6e-2, fmt("max infidelity without K2 %.3e (target [4e-3, 1.6e-2])", mn));
    note(o, mw > mn, "with-K2 maximum larger");
    Range overlap{std::log10(std::max(min_infidelity(with), min_infidelity(without))), std::log10(std::min(mw, mn))};
    if (!(overlap.hi > overlap.lo)) {
        note(o, false, "no overlapping infidelity range");
        return o;
    }
    auto bw = infidelity_bins(with, 20, overlap), bn = infidelity_bins(without, 20, overlap);
    size_t matched = 0, larger = 0;
    for (size_t b = 0; b < bw.size(); b++) {
        if (bw[b].count && bn[b].count) {
            matched++;
            larger += bn[b].mean_p_code > bw[b].mean_p_code;
        }
    }
    double frac = matched ? (double)larger / (double)matched : 0;
    note(o, matched > 0 && frac >= 0.7, fmt("no-K2 larger p_code in %zu/%zu matched bins (target >= 70%%)", larger, matched));
    return o;
}

Outcome scenario_ii_shape() {
    Outcome o;
    auto v2 = run_preset("fig9-smoke");
    std::map<double, double> spreads;
    std::string listing;
    for (double p : {0.0, 0.007, 0.014}) {
        spreads[p] = max_bin_spread(select_p_init(v2, p));
        listing += fmt(" %g:%.3f", p, spreads[p]);
    }
    bool max_at = spreads[0.007] > spreads[0.0] && spreads[0.007] > spreads[0.014];
    note(o, max_at, "v2 smoke spread by p_init" + listing + " (target max at 0.007)");
    auto ld = run_preset("fig10-smoke");
    std::vector<double> ps{0.0, 0.003, 0.007};
    std::vector<double> mean(3, 0), se(3, 0);
    for (size_t i = 0; i < ps.size(); i++) {
        auto recs = select_p_init(ld, ps[i]);
        LineFit f = log_log_fit(recs);
        note(o, std::abs(f.slope - 1) <= 0.3, fmt("ldiv II p_init=%g slope %.3f +- %.3f (target 1 +- 0.3)", ps[i], f.slope, f.slope_stderr));
        for (const auto &r : recs) {
            mean[i] += r.p_code;
            se[i] += r.p_code_stderr * r.p_code_stderr;
        }
        mean[i] /= (double)recs.size();
        se[i] = std::sqrt(se[i]) / (double)recs.size();
    }
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = i + 1; j < 3; j++) {
            double z = std::abs(mean[i] - mean[j]) / std::sqrt(se[i] * se[i] + se[j] * se[j]);
            note(o, z <= 3, fmt("ldiv II grid-mean p_code %g vs %g: %.3e vs %.3e, %.2f sigma", ps[i], ps[j], mean[i], mean[j], z));
        }
    }
    return o;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    Outcome o;
    auto dir = std::filesystem::temp_directory_path() / ("s17_acceptance_" + std::to_string(getpid()));
    std::filesystem::create_directories(dir);
    std::vector<std::pair<std::string, std::string>> configs{
        {"ldiv-II-trajectory", "--gate ldiv --scenario II --grid 3x3 --n-samples 20000 --seed 17"},
        {"v2-I-trajectory", "--gate v2 --scenario I --backend trajectory --grid 2x3 --n-samples 30000 --seed 3"},
        {"v1-I-exact", "--gate v1 --scenario I --grid 4x4 --seed 5"},
    };
    for (const auto &[name, args] : configs) {
        std::vector<std::string> runs{"--threads 1", "--threads 1", "--threads 8"};
        std::vector<std::string> csv;
        for (size_t i = 0; i < runs.size(); i++) {
            auto out = dir / (name + "_" + std::to_string(i) + ".csv");
            std::string cmd = std::string(S17BENCH_CLI_PATH) + " " + args + " " + runs[i] + " --output " + out.string() +
                              " > /dev/null 2>&1";
            if (std::system(cmd.c_str()) != 0) {
                note(o, false, name + ": CLI run failed");
                break;
            }
            csv.push_back(slurp(out));
        }
        if (csv.size() == 3) {
            bool ok = !csv[0].empty() && csv[0] == csv[1] && csv[0] == csv[2];
            note(o, ok, name + fmt(" %zu bytes, repeat %s, threads 1 vs 8 %s", csv[0].size(),
                                   csv[0] == csv[1] ? "identical" : "differs", csv[0] == csv[2] ? "identical" : "differs"));
        }
    }
    std::filesystem::remove_all(dir);
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> &criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
        {"ideal_limit", ideal_limit},
        {"code_algebra", code_algebra},
        {"oracle_equivalence", oracle_equivalence},
        {"noiseless", noiseless},
        {"quadratic_regime", quadratic_regime},
        {"linear_crossover", linear_crossover},
        {"spread", spread},
        {"k2_comparison", k2_comparison},
        {"scenario_ii_shape", scenario_ii_shape},
        {"determinism", determinism},
    };
    return all;
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<std::string> selected(argv + 1, argv + argc);
    if (selected.empty()) {
        for (const auto &c : criteria()) selected.push_back(c.first);
    }
    int failures = 0;
    for (const auto &name : selected) {
        auto it = std::find_if(criteria().begin(), criteria().end(), [&](const auto &c) { return c.first == name; });
        if (it == criteria().end()) {
            std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
            return 2;
        }
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it->second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures ? 1 : 0;
}
