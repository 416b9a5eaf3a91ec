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

// Command-line driver: sweeps a CNOT family over its parameter grid and writes p_code records.
//
// Exit codes: 0 success, 1 simulation or I/O failure, 2 configuration error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "s17/benchmark.h"
#include "s17/record_io.h"
#include "s17/schedule.h"
#include "s17/sweep_config.h"

namespace {

struct Stat3 {
    double min = 0;
    double median = 0;
    double max = 0;
};

Stat3 stats(std::vector<double> v) {
    Stat3 s;
    if (v.empty()) {
        return s;
    }
    std::sort(v.begin(), v.end());
    s.min = v.front();
    s.max = v.back();
    size_t n = v.size();
    s.median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    return s;
}

void print_summary(const std::vector<s17::BenchmarkRecord> &records, const s17::SweepSpec &spec) {
    for (double p : spec.p_init) {
        std::vector<double> pc, inf;
        for (const auto &r : records) {
            if (r.p_init == p) {
                pc.push_back(r.p_code);
                inf.push_back(r.infidelity);
            }
        }
        Stat3 a = stats(pc);
        Stat3 b = stats(inf);
        std::printf(
            "gate=%s scenario=%s p_init=%g points=%zu p_code min/median/max=%.4g/%.4g/%.4g "
            "infidelity min/median/max=%.4g/%.4g/%.4g\n",
            s17::gate_name(spec.gate).c_str(), s17::scenario_name(spec.scenario).c_str(), p, pc.size(), a.min,
            a.median, a.max, b.min, b.median, b.max);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Surface-17 code performance versus CNOT gate parameters"};
    app.set_version_flag("--version", "s17bench 0.1.0");

    std::map<std::string, std::string> flag_values;
    auto add = [&](const std::string &key, const std::string &help) {
        return app.add_option("--" + key, flag_values[key], help);
    };
    add("gate", "Gate family: v1, v2, ldiv, ldiv_no_k2, ideal");
    add("scenario", "Scenario: I or II");
    add("grid", "Grid resolution NxM (param1 x param2), default 16x16");
    add("param1-range", "param1 interval lo:hi (R for v1/v2, t for ldiv)");
    add("param2-range", "param2 interval lo:hi (gamma for v1/v2, Gamma for ldiv)");
    add("delta", "L-DiV detuning Delta (default -0.0145)");
    add("slip-time", "L-DiV slip time in units of the exchange time (default 0.2)");
    add("p-init", "Comma-separated initialization noise strengths");
    add("backend", "exact or trajectory");
    add("n-samples", "Trajectories per encoding (trajectory backend)");
    add("seed", "64-bit seed");
    add("threads", "Worker threads")->envname("S17BENCH_THREADS");
    add("serialization", "concurrent or serialized CNOT layers");
    add("bootstrap", "Bootstrap resamples for p_code_stderr (default 100)");
    add("output", "CSV output path (default s17bench.csv)");
    add("json", "Also write JSON records to this path");
    add("preset", "Named figure preset (see --list-presets)");
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file; flags override it");
    bool allow_ood = false;
    app.add_flag("--allow-out-of-domain", allow_ood, "Accept parameter ranges outside the sweep domain");
    bool dump_schedule = false;
    app.add_flag("--dump-schedule", dump_schedule, "Print the extraction schedule and compiled plan, then exit");
    bool list_presets = false;
    app.add_flag("--list-presets", list_presets, "List presets and exit");
    bool progress = false;
    app.add_flag("--progress", progress, "Report grid progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (list_presets) {
        for (const auto &p : s17::presets()) {
            std::printf("%-12s %s\n", p.name.c_str(), p.description.c_str());
        }
        return 0;
    }

    s17::SweepConfig cfg;
    std::vector<s17::SweepSpec> sweeps;
    try {
        std::vector<std::map<std::string, s17::Setting>> layers;
        if (!config_path.empty()) {
            layers.push_back(s17::parse_config_file(config_path));
        }
        std::map<std::string, s17::Setting> cli;
        for (const auto &[key, value] : flag_values) {
            auto *opt = app.get_option("--" + key);
            if (opt->count() > 0) {
                cli[key] = {value, "--" + key};
            } else if (key == "threads" && !value.empty()) {
                cli[key] = {value, "S17BENCH_THREADS"};
            }
        }
        if (allow_ood) {
            cli["allow-out-of-domain"] = {"true", "--allow-out-of-domain"};
        }
        layers.push_back(cli);
        cfg = s17::build_config(layers);
        sweeps = s17::expand_config(cfg);
    } catch (const s17::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    if (dump_schedule) {
        for (const auto &spec : sweeps) {
            auto schedule = s17::build_schedule(spec.scenario, spec.serialization);
            std::cout << schedule.dump();
            s17::RunConfig rc;
            rc.scenario = spec.scenario;
            rc.serialization = spec.serialization;
            rc.p_init = spec.p_init.empty() ? 0.0 : spec.p_init.back();
            std::cout << s17::compile_plan(schedule, rc).describe();
        }
        return 0;
    }

    std::vector<s17::BenchmarkRecord> all;
    try {
        for (const auto &spec : sweeps) {
            std::function<void(size_t, size_t)> report;
            if (progress) {
                report = [](size_t done, size_t total) {
                    std::fprintf(stderr, "\r[%zu/%zu]", done, total);
                    if (done == total) {
                        std::fprintf(stderr, "\n");
                    }
                };
            }
            auto records = s17::run_benchmark(spec, report);
            print_summary(records, spec);
            all.insert(all.end(), records.begin(), records.end());
        }
        s17::write_text_file(cfg.output, s17::to_csv(all));
        if (cfg.json_output) {
            s17::write_text_file(*cfg.json_output, s17::to_json(all));
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
