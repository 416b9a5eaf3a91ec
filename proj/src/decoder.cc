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

#include "s17/decoder.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "s17/rng.h"

namespace s17 {

namespace {

std::vector<double> conditional(const std::vector<double> &p) {
    if (p.size() != kNumKeys) {
        throw std::invalid_argument("distribution must cover all 512 keys");
    }
    double total = 0;
    for (double x : p) {
        total += x;
    }
    if (!(total > 0)) {
        throw std::invalid_argument("cannot build a table from an empty distribution");
    }
    std::vector<double> out(p.size());
    for (size_t k = 0; k < p.size(); k++) {
        out[k] = p[k] / total;
    }
    return out;
}

}  // namespace

LookupTable build_table(const SyndromeDistribution &dist0, const SyndromeDistribution &dist1) {
    LookupTable t;
    t.p0 = conditional(dist0.probabilities);
    t.p1 = conditional(dist1.probabilities);
    return t;
}

double logical_error_probability(const LookupTable &table, int encoded) {
    if (encoded != 0 && encoded != 1) {
        throw std::invalid_argument("encoded state must be 0 or 1");
    }
    const auto &mine = encoded ? table.p1 : table.p0;
    const auto &other = encoded ? table.p0 : table.p1;
    double p = 0;
    for (size_t k = 0; k < kNumKeys; k++) {
        if (std::abs(mine[k] - other[k]) < 1e-12) {
            p += 0.5 * mine[k];
        } else if (other[k] > mine[k]) {
            p += mine[k];
        }
    }
    return p;
}

namespace {

std::vector<double> multinomial_draw(const std::vector<uint64_t> &counts, PhiloxStream &rng) {
    uint64_t n = 0;
    for (auto c : counts) {
        n += c;
    }
    std::vector<double> out(counts.size(), 0.0);
    uint64_t left = n;
    double mass_left = 1.0;
    for (size_t k = 0; k < counts.size() && left > 0; k++) {
        if (counts[k] == 0) {
            continue;
        }
        double p = (double)counts[k] / (double)n;
        double q = std::min(1.0, p / mass_left);
        uint64_t draw = q >= 1.0 ? left : std::binomial_distribution<uint64_t>(left, q)(rng);
        out[k] = (double)draw;
        left -= draw;
        mass_left -= p;
    }
    return out;
}

}  // namespace

double bootstrap_stderr(const SyndromeDistribution &dist0, const SyndromeDistribution &dist1, int encoded,
                        size_t n_resamples, uint64_t seed, uint64_t stream) {
    if (dist0.counts.empty() && dist1.counts.empty()) {
        return 0.0;
    }
    if (n_resamples < 2) {
        throw std::invalid_argument("bootstrap needs at least two resamples");
    }
    PhiloxStream rng(seed, stream);
    double sum = 0, sum2 = 0;
    for (size_t r = 0; r < n_resamples; r++) {
        SyndromeDistribution a = dist0, b = dist1;
        if (!a.counts.empty()) {
            a.probabilities = multinomial_draw(a.counts, rng);
        }
        if (!b.counts.empty()) {
            b.probabilities = multinomial_draw(b.counts, rng);
        }
        double p = logical_error_probability(build_table(a, b), encoded);
        sum += p;
        sum2 += p * p;
    }
    double n = (double)n_resamples;
    double var = (sum2 - sum * sum / n) / (n - 1);
    return std::sqrt(std::max(0.0, var));
}

}  // namespace s17
