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

#ifndef S17_BENCHMARK_H
#define S17_BENCHMARK_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "s17/simulator.h"

namespace s17 {

enum class GateFamily { v1, v2, ldiv, ldiv_no_k2, ideal };

std::string gate_name(GateFamily g);
GateFamily parse_gate(const std::string &text);

struct Range {
    double lo;
    double hi;
};

/// Default sweep domain of a gate family: (R, gamma) for v1/v2, (t, Gamma) for L-DiV.
std::pair<Range, Range> default_domain(GateFamily g);
std::pair<std::string, std::string> parameter_names(GateFamily g);
/// Preset p_init values of each family.
std::vector<double> default_p_init(GateFamily g);

inline constexpr double kDefaultDelta = -0.0145;

struct SweepSpec {
    GateFamily gate = GateFamily::v1;
    Scenario scenario = Scenario::I;
    Range param1{30, 35};
    Range param2{0, 1};
    size_t n1 = 16;
    size_t n2 = 16;
    double delta = kDefaultDelta;
    double slip_time = 0.2;
    std::vector<double> p_init{0.0};
    Backend backend = Backend::exact;
    size_t n_samples = 0;
    uint64_t seed = 0;
    Serialization serialization = Serialization::concurrent;
    size_t threads = 1;
    size_t bootstrap_resamples = 100;
};

/// A sweep spec filled with the family's default domain and p_init presets.
SweepSpec default_sweep(GateFamily g, Scenario scenario);

/// Cell-centre value i of n over an open interval: lo + (i + 1/2)(hi - lo)/n.
double cell_centre(Range r, size_t n, size_t i);

struct GatePoint {
    std::string param1_name;
    double param1 = 0;
    std::string param2_name;
    double param2 = 0;
    KrausChannel channel = KrausChannel::unitary(gates::cnot());
    double infidelity = 0;
};

/// Builds the gate channel at every grid point (param1 major). The ideal family has one point.
std::vector<GatePoint> gate_grid(const SweepSpec &spec);

struct BenchmarkRecord {
    std::string gate;
    Scenario scenario = Scenario::I;
    std::string param1_name;
    double param1 = 0;
    std::string param2_name;
    double param2 = 0;
    double p_init = 0;
    double infidelity = 0;
    double p_code = 0;
    double p_code_stderr = 0;
    Backend backend = Backend::exact;
    size_t n_samples = 0;
    uint64_t seed = 0;
};

/// Runs encoded |0> and |1> at every (p_init, grid point), decodes and reports p_code for |0>.
/// Records are ordered by p_init, then grid point. Failures are rethrown as std::runtime_error
/// naming the grid point.
std::vector<BenchmarkRecord> run_benchmark(
    const SweepSpec &spec, const std::function<void(size_t, size_t)> &progress = nullptr);

/// One point of a run: returns p_code and its standard error.
std::pair<double, double> p_code_at(const KrausChannel &cnot, const SweepSpec &spec, double p_init, uint64_t stream_base);

// Statistics over sweep output.

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;
    size_t n = 0;
};

/// Ordinary least squares of y on x.
LineFit least_squares(const std::vector<double> &x, const std::vector<double> &y);

/// Least squares of log10 p_code on log10 infidelity over records with both positive.
LineFit log_log_fit(const std::vector<BenchmarkRecord> &records);

/// Records whose infidelity lies within [min, 10 * min] of the positive infidelities.
std::vector<BenchmarkRecord> lowest_decade(const std::vector<BenchmarkRecord> &records);

struct InfidelityBin {
    double lo = 0;
    double hi = 0;
    size_t count = 0;
    double min_p_code = 0;
    double max_p_code = 0;
    double mean_p_code = 0;
};

/// n_bins equal-width bins in log10 infidelity over [lo, hi] (the records' range when unset).
std::vector<InfidelityBin> infidelity_bins(const std::vector<BenchmarkRecord> &records, size_t n_bins = 20,
                                           std::optional<Range> log_range = std::nullopt);

/// Largest max/min p_code over bins holding at least min_points records with positive p_code.
double max_bin_spread(const std::vector<BenchmarkRecord> &records, size_t n_bins = 20, size_t min_points = 3);

std::vector<BenchmarkRecord> select_p_init(const std::vector<BenchmarkRecord> &records, double p_init);
std::vector<BenchmarkRecord> select_gate(const std::vector<BenchmarkRecord> &records, const std::string &gate);

/// A named figure preset: one sweep per gate family.
struct Preset {
    std::string name;
    std::string description;
    std::vector<SweepSpec> sweeps;
};

const std::vector<Preset> &presets();
/// Throws std::invalid_argument listing the known names.
const Preset &find_preset(const std::string &name);

}  // namespace s17

#endif
