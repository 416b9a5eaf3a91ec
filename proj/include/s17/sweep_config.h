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

#ifndef S17_SWEEP_CONFIG_H
#define S17_SWEEP_CONFIG_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "s17/benchmark.h"

namespace s17 {

/// Invalid configuration; the message names the source line or field.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Everything the command-line tool needs for one invocation.
struct SweepConfig {
    std::optional<std::string> preset;
    GateFamily gate = GateFamily::v1;
    Scenario scenario = Scenario::I;
    /// Grid resolution (param1 x param2); family default 16x16 when unset.
    std::optional<std::pair<size_t, size_t>> grid;
    std::optional<Range> param1_range;
    std::optional<Range> param2_range;
    double delta = kDefaultDelta;
    double slip_time = 0.2;
    std::optional<std::vector<double>> p_init;
    std::optional<Backend> backend;
    std::optional<size_t> n_samples;
    uint64_t seed = 0;
    size_t threads = 1;
    Serialization serialization = Serialization::concurrent;
    size_t bootstrap_resamples = 100;
    bool allow_out_of_domain = false;
    std::string output = "s17bench.csv";
    std::optional<std::string> json_output;
};

/// A key=value setting and where it came from, for diagnostics ("run.cfg:7" or "--grid").
struct Setting {
    std::string value;
    std::string origin;
};

/// Parses the flat key=value format: one setting per line, '#' starts a comment, blank lines are
/// ignored, keys may use '-' or '_'. Throws ConfigError with file:line on malformed lines.
std::map<std::string, Setting> parse_config_text(const std::string &text, const std::string &source_name);
std::map<std::string, Setting> parse_config_file(const std::string &path);

/// Applies settings (later maps override earlier ones) to a default SweepConfig and validates it.
SweepConfig build_config(const std::vector<std::map<std::string, Setting>> &layers);

/// Keys understood by build_config.
const std::vector<std::string> &config_keys();

/// Expands a config into the sweeps to run (a preset may hold several).
std::vector<SweepSpec> expand_config(const SweepConfig &cfg);

/// "16x16" -> (16, 16).
std::pair<size_t, size_t> parse_grid(const std::string &text);
/// "30:35" or "30,35" -> Range.
Range parse_range(const std::string &text);
std::vector<double> parse_double_list(const std::string &text);

}  // namespace s17

#endif
