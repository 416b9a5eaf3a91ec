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

#include "s17/benchmark.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "s17/decoder.h"
#include "s17/fidelity.h"
#include "s17/floating_gate.h"
#include "s17/spin_exchange.h"

namespace s17 {

std::string gate_name(GateFamily g) {
    switch (g) {
        case GateFamily::v1:
            return "v1";
        case GateFamily::v2:
            return "v2";
        case GateFamily::ldiv:
            return "ldiv";
        case GateFamily::ldiv_no_k2:
            return "ldiv_no_k2";
        case GateFamily::ideal:
            return "ideal";
    }
    return "?";
}

GateFamily parse_gate(const std::string &text) {
    for (auto g : {GateFamily::v1, GateFamily::v2, GateFamily::ldiv, GateFamily::ldiv_no_k2, GateFamily::ideal}) {
        if (gate_name(g) == text) {
            return g;
        }
    }
    throw std::invalid_argument("unknown gate '" + text + "' (expected v1, v2, ldiv, ldiv_no_k2 or ideal)");
}

std::pair<Range, Range> default_domain(GateFamily g) {
    switch (g) {
        case GateFamily::v1:
        case GateFamily::v2:
            return {{30, 35}, {0, 1}};
        case GateFamily::ldiv:
        case GateFamily::ldiv_no_k2:
            return {{1, 1.1}, {0.007, 0.027}};
        case GateFamily::ideal:
            return {{0, 0}, {0, 0}};
    }
    return {{0, 0}, {0, 0}};
}

std::pair<std::string, std::string> parameter_names(GateFamily g) {
    switch (g) {
        case GateFamily::v1:
        case GateFamily::v2:
            return {"R", "gamma"};
        case GateFamily::ldiv:
        case GateFamily::ldiv_no_k2:
            return {"t", "Gamma"};
        case GateFamily::ideal:
            return {"none", "none"};
    }
    return {"none", "none"};
}

std::vector<double> default_p_init(GateFamily g) {
    switch (g) {
        case GateFamily::v1:
            return {0.0, 0.002, 0.07};
        case GateFamily::v2:
            return {0.0, 0.007, 0.014};
        case GateFamily::ldiv:
        case GateFamily::ldiv_no_k2:
            return {0.0, 0.003, 0.007};
        case GateFamily::ideal:
            return {0.0};
    }
    return {0.0};
}

SweepSpec default_sweep(GateFamily g, Scenario scenario) {
    SweepSpec s;
    s.gate = g;
    s.scenario = scenario;
    std::tie(s.param1, s.param2) = default_domain(g);
    if (g == GateFamily::ideal) {
        s.n1 = s.n2 = 1;
    }
    s.p_init = default_p_init(g);
    if (scenario == Scenario::II) {
        s.backend = Backend::trajectory;
        s.n_samples = 200000;
    }
    return s;
}

double cell_centre(Range r, size_t n, size_t i) {
    return r.lo + ((double)i + 0.5) * (r.hi - r.lo) / (double)n;
}

std::vector<GatePoint> gate_grid(const SweepSpec &spec) {
    auto [name1, name2] = parameter_names(spec.gate);
    std::vector<GatePoint> out;
    if (spec.gate == GateFamily::ideal) {
        GatePoint p;
        p.param1_name = name1;
        p.param2_name = name2;
        p.infidelity = gate_infidelity(p.channel, gates::cnot());
        out.push_back(p);
        return out;
    }
    if (spec.n1 == 0 || spec.n2 == 0) {
        throw std::invalid_argument("grid resolution must be at least 1x1");
    }
    for (size_t i = 0; i < spec.n1; i++) {
        for (size_t j = 0; j < spec.n2; j++) {
            GatePoint p;
            p.param1_name = name1;
            p.param2_name = name2;
            p.param1 = cell_centre(spec.param1, spec.n1, i);
            p.param2 = cell_centre(spec.param2, spec.n2, j);
            if (spec.gate == GateFamily::v1 || spec.gate == GateFamily::v2) {
                FloatingGateParams fp{p.param1, p.param2, spec.gate == GateFamily::v1 ? FloatingVariant::v1 : FloatingVariant::v2};
                p.channel = floating_cnot(fp);
            } else {
                LdivParams lp;
                lp.t = p.param1;
                lp.gamma = p.param2;
                lp.delta = spec.delta;
                lp.include_k2 = spec.gate == GateFamily::ldiv;
                lp.slip_time = spec.slip_time;
                p.channel = ldiv_noisy_cnot(lp);
            }
            p.infidelity = gate_infidelity(p.channel, gates::cnot());
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::pair<double, double> p_code_at(const KrausChannel &cnot, const SweepSpec &spec, double p_init, uint64_t stream_base) {
    RunConfig cfg;
    cfg.scenario = spec.scenario;
    cfg.cnot = cnot;
    cfg.p_init = p_init;
    cfg.backend = spec.backend;
    cfg.n_samples = spec.n_samples;
    cfg.seed = spec.seed;
    cfg.serialization = spec.serialization;
    cfg.threads = 1;
    cfg.encoded = 0;
    cfg.stream_offset = stream_base;
    SyndromeDistribution d0 = run(cfg);
    cfg.encoded = 1;
    cfg.stream_offset = stream_base + (uint64_t{1} << 32);
    SyndromeDistribution d1 = run(cfg);
    double p = logical_error_probability(build_table(d0, d1), 0);
    double err = 0;
    if (spec.backend == Backend::trajectory) {
        err = bootstrap_stderr(d0, d1, 0, spec.bootstrap_resamples, spec.seed, stream_base + (uint64_t{1} << 33));
    }
    return {p, err};
}

std::vector<BenchmarkRecord> run_benchmark(const SweepSpec &spec, const std::function<void(size_t, size_t)> &progress) {
    if (spec.p_init.empty()) {
        throw std::invalid_argument("at least one p_init value is required");
    }
    if (spec.backend == Backend::trajectory && spec.n_samples < 1) {
        throw std::invalid_argument("trajectory backend needs n_samples >= 1");
    }
    std::vector<GatePoint> grid = gate_grid(spec);
    size_t n_tasks = grid.size() * spec.p_init.size();
    std::vector<BenchmarkRecord> out(n_tasks);
    std::atomic<size_t> next{0};
    std::atomic<size_t> done{0};
    std::mutex error_mutex;
    std::string first_error;
    std::mutex progress_mutex;

    auto worker = [&]() {
        while (true) {
            size_t task = next.fetch_add(1);
            if (task >= n_tasks) {
                return;
            }
            size_t pi = task / grid.size();
            const GatePoint &pt = grid[task % grid.size()];
            BenchmarkRecord &r = out[task];
            r.gate = gate_name(spec.gate);
            r.scenario = spec.scenario;
            r.param1_name = pt.param1_name;
            r.param1 = pt.param1;
            r.param2_name = pt.param2_name;
            r.param2 = pt.param2;
            r.p_init = spec.p_init[pi];
            r.infidelity = pt.infidelity;
            r.backend = spec.backend;
            r.n_samples = spec.backend == Backend::trajectory ? spec.n_samples : 0;
            r.seed = spec.seed;
            try {
                std::tie(r.p_code, r.p_code_stderr) = p_code_at(pt.channel, spec, r.p_init, (uint64_t)task << 34);
            } catch (const std::exception &e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty()) {
                    std::stringstream ss;
                    ss.precision(17);
                    ss << "grid point " << pt.param1_name << "=" << pt.param1 << ", " << pt.param2_name << "="
                       << pt.param2 << ", p_init=" << r.p_init << ": " << e.what();
                    first_error = ss.str();
                }
                next.store(n_tasks);
                return;
            }
            size_t d = ++done;
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(d, n_tasks);
            }
        }
    };
    size_t n_threads = std::max<size_t>(1, std::min(spec.threads, n_tasks));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < n_threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (!first_error.empty()) {
        throw std::runtime_error(first_error);
    }
    return out;
}

LineFit least_squares(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("least_squares: size mismatch");
    }
    LineFit f;
    f.n = x.size();
    if (f.n < 2) {
        f.slope = f.intercept = f.slope_stderr = NAN;
        return f;
    }
    double n = (double)f.n;
    double mx = 0, my = 0;
    for (size_t i = 0; i < f.n; i++) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < f.n; i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0)) {
        f.slope = f.intercept = f.slope_stderr = NAN;
        return f;
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (f.n > 2) {
        double rss = 0;
        for (size_t i = 0; i < f.n; i++) {
            double e = y[i] - f.intercept - f.slope * x[i];
            rss += e * e;
        }
        f.slope_stderr = std::sqrt(rss / (n - 2) / sxx);
    } else {
        f.slope_stderr = NAN;
    }
    return f;
}

LineFit log_log_fit(const std::vector<BenchmarkRecord> &records) {
    std::vector<double> x, y;
    for (const auto &r : records) {
        if (r.infidelity > 0 && r.p_code > 0) {
            x.push_back(std::log10(r.infidelity));
            y.push_back(std::log10(r.p_code));
        }
    }
    return least_squares(x, y);
}

std::vector<BenchmarkRecord> lowest_decade(const std::vector<BenchmarkRecord> &records) {
    double lo = INFINITY;
    for (const auto &r : records) {
        if (r.infidelity > 0) {
            lo = std::min(lo, r.infidelity);
        }
    }
    std::vector<BenchmarkRecord> out;
    for (const auto &r : records) {
        if (r.infidelity > 0 && r.infidelity <= 10 * lo) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<InfidelityBin> infidelity_bins(const std::vector<BenchmarkRecord> &records, size_t n_bins,
                                           std::optional<Range> log_range) {
    Range range{INFINITY, -INFINITY};
    if (log_range) {
        range = *log_range;
    } else {
        for (const auto &r : records) {
            if (r.infidelity > 0) {
                range.lo = std::min(range.lo, std::log10(r.infidelity));
                range.hi = std::max(range.hi, std::log10(r.infidelity));
            }
        }
    }
    std::vector<InfidelityBin> bins(n_bins);
    if (n_bins == 0 || !(range.hi >= range.lo)) {
        return {};
    }
    double width = (range.hi - range.lo) / (double)n_bins;
    for (size_t b = 0; b < n_bins; b++) {
        bins[b].lo = std::pow(10.0, range.lo + width * (double)b);
        bins[b].hi = std::pow(10.0, range.lo + width * (double)(b + 1));
        bins[b].min_p_code = INFINITY;
        bins[b].max_p_code = -INFINITY;
    }
    for (const auto &r : records) {
        if (!(r.infidelity > 0)) {
            continue;
        }
        double x = std::log10(r.infidelity);
        if (x < range.lo || x > range.hi) {
            continue;
        }
        size_t b = width > 0 ? std::min(n_bins - 1, (size_t)((x - range.lo) / width)) : 0;
        auto &bin = bins[b];
        bin.count++;
        bin.min_p_code = std::min(bin.min_p_code, r.p_code);
        bin.max_p_code = std::max(bin.max_p_code, r.p_code);
        bin.mean_p_code += r.p_code;
    }
    for (auto &bin : bins) {
        if (bin.count) {
            bin.mean_p_code /= (double)bin.count;
        }
    }
    return bins;
}

double max_bin_spread(const std::vector<BenchmarkRecord> &records, size_t n_bins, size_t min_points) {
    double best = 0;
    for (const auto &bin : infidelity_bins(records, n_bins)) {
        if (bin.count >= min_points && bin.min_p_code > 0) {
            best = std::max(best, bin.max_p_code / bin.min_p_code);
        }
    }
    return best;
}

std::vector<BenchmarkRecord> select_p_init(const std::vector<BenchmarkRecord> &records, double p_init) {
    std::vector<BenchmarkRecord> out;
    for (const auto &r : records) {
        if (r.p_init == p_init) {
            out.push_back(r);
        }
    }
    return out;
}

std::vector<BenchmarkRecord> select_gate(const std::vector<BenchmarkRecord> &records, const std::string &gate) {
    std::vector<BenchmarkRecord> out;
    for (const auto &r : records) {
        if (r.gate == gate) {
            out.push_back(r);
        }
    }
    return out;
}

const std::vector<Preset> &presets() {
    static const std::vector<Preset> all = [] {
        std::vector<Preset> p;
        p.push_back({"fig5", "v1, scenario I, p_init 0/0.002/0.07, exact", {default_sweep(GateFamily::v1, Scenario::I)}});
        p.push_back({"fig6", "v2, scenario I, p_init 0/0.007/0.014, exact", {default_sweep(GateFamily::v2, Scenario::I)}});
        p.push_back({"fig7", "ldiv, scenario I, p_init 0/0.003/0.007, exact", {default_sweep(GateFamily::ldiv, Scenario::I)}});
        p.push_back({"fig8", "v1, scenario II, trajectories", {default_sweep(GateFamily::v1, Scenario::II)}});
        p.push_back({"fig9", "v2, scenario II, trajectories", {default_sweep(GateFamily::v2, Scenario::II)}});
        p.push_back({"fig10", "ldiv, scenario II, trajectories", {default_sweep(GateFamily::ldiv, Scenario::II)}});
        SweepSpec with = default_sweep(GateFamily::ldiv, Scenario::I);
        SweepSpec without = default_sweep(GateFamily::ldiv_no_k2, Scenario::I);
        with.p_init = without.p_init = {0.0};
        for (GateFamily g : {GateFamily::v2, GateFamily::ldiv}) {
            SweepSpec smoke = default_sweep(g, Scenario::II);
            smoke.n1 = smoke.n2 = 8;
            smoke.n_samples = 50000;
            p.push_back({g == GateFamily::v2 ? "fig9-smoke" : "fig10-smoke",
                         gate_name(g) + ", scenario II, 8x8 grid, 5e4 trajectories", {smoke}});
        }
        p.push_back({"fig11", "ldiv with and without the slip term, scenario I, p_init 0", {with, without}});
        return p;
    }();
    return all;
}

const Preset &find_preset(const std::string &name) {
    for (const auto &p : presets()) {
        if (p.name == name) {
            return p;
        }
    }
    std::string known;
    for (const auto &p : presets()) {
        known += (known.empty() ? "" : ", ") + p.name;
    }
    throw std::invalid_argument("unknown preset '" + name + "' (known: " + known + ")");
}

}  // namespace s17
