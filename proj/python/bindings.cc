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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "s17/benchmark.h"
#include "s17/record_io.h"
#include "s17/sweep_config.h"

namespace py = pybind11;
using namespace s17;

namespace {

py::dict record_dict(const BenchmarkRecord &r) {
    py::dict d;
    d["gate"] = r.gate;
    d["scenario"] = scenario_name(r.scenario);
    d["param1_name"] = r.param1_name;
    d["param1"] = r.param1;
    d["param2_name"] = r.param2_name;
    d["param2"] = r.param2;
    d["p_init"] = r.p_init;
    d["infidelity"] = r.infidelity;
    d["p_code"] = r.p_code;
    d["p_code_stderr"] = r.p_code_stderr;
    d["backend"] = backend_name(r.backend);
    d["n_samples"] = r.n_samples;
    d["seed"] = r.seed;
    return d;
}

// Runs a sweep described by config keys (the same keys the CLI accepts) and returns CSV text.
std::string run_sweep_csv(const std::map<std::string, std::string> &settings) {
    std::map<std::string, Setting> layer;
    std::stringstream text;
    for (const auto &[k, v] : settings) {
        text << k << " = " << v << "\n";
    }
    layer = parse_config_text(text.str(), "python");
    SweepConfig cfg = build_config({layer});
    std::vector<BenchmarkRecord> all;
    {
        py::gil_scoped_release release;
        for (const auto &spec : expand_config(cfg)) {
            auto r = run_benchmark(spec);
            all.insert(all.end(), r.begin(), r.end());
        }
    }
    return to_csv(all);
}

double infidelity_at(const std::string &gate, double param1, double param2, double delta, double slip_time) {
    SweepSpec s = default_sweep(parse_gate(gate), Scenario::I);
    s.param1 = {param1, param1};
    s.param2 = {param2, param2};
    s.n1 = s.n2 = 1;
    s.delta = delta;
    s.slip_time = slip_time;
    return gate_grid(s).front().infidelity;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Surface-17 CNOT benchmark core";
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.attr("CSV_SCHEMA_VERSION") = kCsvSchemaVersion;
    m.def("csv_header", &csv_header);
    m.def("config_keys", &config_keys);
    m.def("preset_names", [] {
        std::vector<std::string> names;
        for (const auto &p : presets()) names.push_back(p.name);
        return names;
    });
    m.def("gate_infidelity", &infidelity_at, py::arg("gate"), py::arg("param1"), py::arg("param2"),
          py::arg("delta") = kDefaultDelta, py::arg("slip_time") = 0.2,
          "Average-fidelity infidelity of one CNOT implementation against the ideal CNOT.");
    m.def("run_sweep_csv", &run_sweep_csv, py::arg("settings"));
    m.def(
        "read_csv",
        [](const std::string &text) {
            std::istringstream in(text);
            py::list out;
            for (const auto &r : read_csv(in)) out.append(record_dict(r));
            return out;
        },
        py::arg("text"));
}
