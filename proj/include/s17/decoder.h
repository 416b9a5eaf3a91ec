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

#ifndef S17_DECODER_H
#define S17_DECODER_H

#include <cstdint>
#include <vector>

#include "s17/simulator.h"

namespace s17 {

/// Conditional outcome probabilities p0(s), p1(s) for encoded |0> and |1>, over the 9-bit keys
/// (syndrome bits plus the measured logical bit).
struct LookupTable {
    std::vector<double> p0 = std::vector<double>(kNumKeys, 0.0);
    std::vector<double> p1 = std::vector<double>(kNumKeys, 0.0);
};

/// Normalizes each distribution to a conditional; keys never observed stay 0.
LookupTable build_table(const SyndromeDistribution &dist0, const SyndromeDistribution &dist1);

/// Probability that maximum-likelihood decoding returns the wrong state when `encoded` was
/// prepared. A key with |p0 - p1| < 1e-12 counts half its weight (fair coin).
double logical_error_probability(const LookupTable &table, int encoded);

/// Bootstrap standard error of p_code for sampled inputs: both count vectors are redrawn
/// multinomially n_resamples times. Returns 0 when neither input carries counts.
double bootstrap_stderr(const SyndromeDistribution &dist0, const SyndromeDistribution &dist1, int encoded,
                        size_t n_resamples, uint64_t seed, uint64_t stream);

}  // namespace s17

#endif
