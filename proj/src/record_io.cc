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

#include "s17/record_io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace s17 {

namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

const std::string &csv_header() {
    static const std::string header =
        "schema_version,gate,scenario,param1_name,param1,param2_name,param2,p_init,infidelity,p_code,"
        "p_code_stderr,backend,n_samples,seed";
    return header;
}

void write_csv(std::ostream &out, const std::vector<BenchmarkRecord> &records) {
    out << csv_header() << '\n';
    for (const auto &r : records) {
        out << kCsvSchemaVersion << ',' << r.gate << ',' << scenario_name(r.scenario) << ',' << r.param1_name << ','
            << fmt_real(r.param1) << ',' << r.param2_name << ',' << fmt_real(r.param2) << ',' << fmt_real(r.p_init)
            << ',' << fmt_real(r.infidelity) << ',' << fmt_real(r.p_code) << ',' << fmt_real(r.p_code_stderr) << ','
            << backend_name(r.backend) << ',' << r.n_samples << ',' << r.seed << '\n';
    }
}

std::string to_csv(const std::vector<BenchmarkRecord> &records) {
    std::ostringstream ss;
    write_csv(ss, records);
    return ss.str();
}

std::vector<BenchmarkRecord> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("line 1: empty input");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != csv_header()) {
        throw std::invalid_argument("line 1: header does not match the expected schema");
    }
    std::vector<BenchmarkRecord> out;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line == "\r") {
            continue;
        }
        auto f = split_csv_line(line);
        std::string where = "line " + std::to_string(line_no) + ": ";
        if (f.size() != 14) {
            throw std::invalid_argument(where + "expected 14 fields, got " + std::to_string(f.size()));
        }
        try {
            if (std::stoi(f[0]) != kCsvSchemaVersion) {
                throw std::invalid_argument("unsupported schema_version " + f[0]);
            }
            BenchmarkRecord r;
            r.gate = f[1];
            r.scenario = parse_scenario(f[2]);
            r.param1_name = f[3];
            r.param1 = std::stod(f[4]);
            r.param2_name = f[5];
            r.param2 = std::stod(f[6]);
            r.p_init = std::stod(f[7]);
            r.infidelity = std::stod(f[8]);
            r.p_code = std::stod(f[9]);
            r.p_code_stderr = std::stod(f[10]);
            r.backend = parse_backend(f[11]);
            r.n_samples = std::stoull(f[12]);
            r.seed = std::stoull(f[13]);
            out.push_back(std::move(r));
        } catch (const std::exception &e) {
            throw std::invalid_argument(where + e.what());
        }
    }
    return out;
}

std::string to_json(const std::vector<BenchmarkRecord> &records) {
    nlohmann::json j;
    j["schema_version"] = kCsvSchemaVersion;
    j["records"] = nlohmann::json::array();
    for (const auto &r : records) {
        j["records"].push_back({
            {"gate", r.gate},
            {"scenario", scenario_name(r.scenario)},
            {"param1_name", r.param1_name},
            {"param1", r.param1},
            {"param2_name", r.param2_name},
            {"param2", r.param2},
            {"p_init", r.p_init},
            {"infidelity", r.infidelity},
            {"p_code", r.p_code},
            {"p_code_stderr", r.p_code_stderr},
            {"backend", backend_name(r.backend)},
            {"n_samples", r.n_samples},
            {"seed", r.seed},
        });
    }
    return j.dump(2) + "\n";
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace s17
