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

#include "s17/sweep_config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace s17 {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

double parse_double(const std::string &text) {
    std::string t = trim(text);
    size_t used = 0;
    double v;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("'" + t + "' is not a number");
    }
    if (used != t.size() || !std::isfinite(v)) {
        throw std::invalid_argument("'" + t + "' is not a finite number");
    }
    return v;
}

uint64_t parse_uint(const std::string &text) {
    std::string t = trim(text);
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw std::invalid_argument("'" + t + "' is not a non-negative integer");
    }
    return v;
}

bool parse_bool(const std::string &text) {
    std::string t = trim(text);
    if (t == "1" || t == "true" || t == "yes" || t == "on") {
        return true;
    }
    if (t == "0" || t == "false" || t == "no" || t == "off") {
        return false;
    }
    throw std::invalid_argument("'" + t + "' is not a boolean");
}

}  // namespace

std::pair<size_t, size_t> parse_grid(const std::string &text) {
    std::string t = trim(text);
    size_t x = t.find_first_of("xX");
    if (x == std::string::npos) {
        throw std::invalid_argument("grid must look like NxM, got '" + t + "'");
    }
    uint64_t a = parse_uint(t.substr(0, x));
    uint64_t b = parse_uint(t.substr(x + 1));
    if (a == 0 || b == 0 || a > 4096 || b > 4096) {
        throw std::invalid_argument("grid dimensions must be between 1 and 4096");
    }
    return {(size_t)a, (size_t)b};
}

Range parse_range(const std::string &text) {
    std::string t = trim(text);
    size_t sep = t.find_first_of(":,");
    if (sep == std::string::npos) {
        throw std::invalid_argument("range must look like lo:hi, got '" + t + "'");
    }
    Range r{parse_double(t.substr(0, sep)), parse_double(t.substr(sep + 1))};
    if (!(r.lo < r.hi)) {
        throw std::invalid_argument("range lower bound must be below the upper bound");
    }
    return r;
}

std::vector<double> parse_double_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list");
    }
    return out;
}

std::map<std::string, Setting> parse_config_text(const std::string &text, const std::string &source_name) {
    std::map<std::string, Setting> out;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        line_no++;
        std::string origin = source_name + ":" + std::to_string(line_no);
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ": expected key=value, got '" + line + "'");
        }
        std::string key = normalize_key(trim(line.substr(0, eq)));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(origin + ": missing key before '='");
        }
        const auto &keys = config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError(origin + ": unknown key '" + key + "'");
        }
        if (out.count(key)) {
            throw ConfigError(origin + ": key '" + key + "' already set at " + out[key].origin);
        }
        out[key] = {value, origin};
    }
    return out;
}

std::map<std::string, Setting> parse_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys{
        "preset", "gate", "scenario", "grid", "param1-range", "param2-range", "delta", "slip-time",
        "p-init", "backend", "n-samples", "seed", "threads", "serialization", "bootstrap",
        "allow-out-of-domain", "output", "json",
    };
    return keys;
}

namespace {

void apply(SweepConfig &cfg, const std::string &key, const std::string &value) {
    if (key == "preset") {
        find_preset(value);
        cfg.preset = value;
    } else if (key == "gate") {
        cfg.gate = parse_gate(value);
    } else if (key == "scenario") {
        cfg.scenario = parse_scenario(value);
    } else if (key == "grid") {
        cfg.grid = parse_grid(value);
    } else if (key == "param1-range") {
        cfg.param1_range = parse_range(value);
    } else if (key == "param2-range") {
        cfg.param2_range = parse_range(value);
    } else if (key == "delta") {
        cfg.delta = parse_double(value);
    } else if (key == "slip-time") {
        cfg.slip_time = parse_double(value);
    } else if (key == "p-init") {
        cfg.p_init = parse_double_list(value);
    } else if (key == "backend") {
        cfg.backend = parse_backend(value);
    } else if (key == "n-samples") {
        cfg.n_samples = (size_t)parse_uint(value);
    } else if (key == "seed") {
        cfg.seed = parse_uint(value);
    } else if (key == "threads") {
        cfg.threads = (size_t)parse_uint(value);
        if (cfg.threads == 0 || cfg.threads > 1024) {
            throw std::invalid_argument("thread count must be between 1 and 1024");
        }
    } else if (key == "serialization") {
        cfg.serialization = parse_serialization(value);
    } else if (key == "bootstrap") {
        cfg.bootstrap_resamples = (size_t)parse_uint(value);
        if (cfg.bootstrap_resamples < 2) {
            throw std::invalid_argument("bootstrap needs at least 2 resamples");
        }
    } else if (key == "allow-out-of-domain") {
        cfg.allow_out_of_domain = parse_bool(value);
    } else if (key == "output") {
        cfg.output = value;
    } else if (key == "json") {
        cfg.json_output = value;
    } else {
        throw std::invalid_argument("unknown key");
    }
}

}  // namespace

SweepConfig build_config(const std::vector<std::map<std::string, Setting>> &layers) {
    std::map<std::string, Setting> merged;
    for (const auto &layer : layers) {
        for (const auto &[k, v] : layer) {
            merged[normalize_key(k)] = v;
        }
    }
    SweepConfig cfg;
    // Apply the preset first so explicit keys refine it; order is otherwise irrelevant.
    std::vector<std::string> order{"preset"};
    for (const auto &[k, v] : merged) {
        if (k != "preset") {
            order.push_back(k);
        }
    }
    for (const auto &k : order) {
        auto it = merged.find(k);
        if (it == merged.end()) {
            continue;
        }
        try {
            apply(cfg, k, it->second.value);
        } catch (const std::exception &e) {
            throw ConfigError(it->second.origin + ": field '" + k + "': " + e.what());
        }
    }
    auto origin = [&](const std::string &k) {
        auto it = merged.find(k);
        return it == merged.end() ? std::string("default") : it->second.origin;
    };
    if (cfg.p_init) {
        for (double p : *cfg.p_init) {
            if (!(p >= 0 && p <= 1)) {
                throw ConfigError(origin("p-init") + ": field 'p-init': values must lie in [0, 1]");
            }
        }
    }
    if (cfg.preset) {
        for (const char *k : {"gate", "scenario", "backend"}) {
            if (merged.count(k)) {
                throw ConfigError(merged[k].origin + ": field '" + k + "' conflicts with preset '" + *cfg.preset +
                                  "' (presets fix gate, scenario and backend)");
            }
        }
    }
    if (cfg.n_samples && *cfg.n_samples < 1) {
        throw ConfigError(origin("n-samples") + ": field 'n-samples': trajectory backend needs at least 1 sample");
    }
    if (!cfg.allow_out_of_domain && !cfg.preset && cfg.gate != GateFamily::ideal) {
        auto [d1, d2] = default_domain(cfg.gate);
        auto names = parameter_names(cfg.gate);
        auto check = [&](const std::optional<Range> &r, Range d, const std::string &key, const std::string &name) {
            if (r && (r->lo < d.lo || r->hi > d.hi)) {
                std::stringstream ss;
                ss.precision(17);
                ss << origin(key) << ": field '" << key << "': " << name << " range [" << r->lo << ", " << r->hi
                   << "] leaves the sweep domain [" << d.lo << ", " << d.hi << "] (pass --allow-out-of-domain)";
                throw ConfigError(ss.str());
            }
        };
        check(cfg.param1_range, d1, "param1-range", names.first);
        check(cfg.param2_range, d2, "param2-range", names.second);
    }
    if (cfg.gate == GateFamily::ldiv || cfg.gate == GateFamily::ldiv_no_k2) {
        Range t = cfg.param1_range.value_or(default_domain(cfg.gate).first);
        if (t.lo < 1) {
            throw ConfigError(origin("param1-range") + ": field 'param1-range': exchange time must be >= 1");
        }
        Range g = cfg.param2_range.value_or(default_domain(cfg.gate).second);
        if (g.lo < 0) {
            throw ConfigError(origin("param2-range") + ": field 'param2-range': relaxation rate must be >= 0");
        }
    }
    if (cfg.gate == GateFamily::v1 || cfg.gate == GateFamily::v2) {
        Range r = cfg.param1_range.value_or(default_domain(cfg.gate).first);
        Range g = cfg.param2_range.value_or(default_domain(cfg.gate).second);
        if (r.lo <= 0 || g.lo < 0) {
            throw ConfigError(origin("param1-range") + ": R must be positive and gamma non-negative");
        }
    }
    return cfg;
}

std::vector<SweepSpec> expand_config(const SweepConfig &cfg) {
    std::vector<SweepSpec> out;
    if (cfg.preset) {
        out = find_preset(*cfg.preset).sweeps;
    } else {
        out.push_back(default_sweep(cfg.gate, cfg.scenario));
        if (cfg.backend && out.back().backend != *cfg.backend) {
            out.back().backend = *cfg.backend;
            out.back().n_samples = *cfg.backend == Backend::trajectory ? 200000 : 0;
        }
    }
    for (auto &s : out) {
        if (cfg.param1_range) {
            s.param1 = *cfg.param1_range;
        }
        if (cfg.param2_range) {
            s.param2 = *cfg.param2_range;
        }
        if (cfg.grid) {
            std::tie(s.n1, s.n2) = *cfg.grid;
        }
        if (cfg.p_init) {
            s.p_init = *cfg.p_init;
        }
        if (cfg.n_samples) {
            s.n_samples = *cfg.n_samples;
        }
        s.delta = cfg.delta;
        s.slip_time = cfg.slip_time;
        s.seed = cfg.seed;
        s.threads = cfg.threads;
        s.serialization = cfg.serialization;
        s.bootstrap_resamples = cfg.bootstrap_resamples;
        if (s.backend == Backend::exact) {
            s.n_samples = 0;
        }
    }
    return out;
}

}  // namespace s17
