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


#ifndef S17_TESTS_BINOMIAL_CHECK_H
#define S17_TESTS_BINOMIAL_CHECK_H

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace s17::oracle {

// Two-sided tail mass of a normal beyond 4 sigma.
inline const double kFourSigmaTail = std::erfc(4.0 / std::sqrt(2.0));

inline double binomial_log_pmf(uint64_t k, uint64_t n, double p) {
    double kk = (double)k, nn = (double)n;
    return std::lgamma(nn + 1) - std::lgamma(kk + 1) - std::lgamma(nn - kk + 1) + kk * std::log(p) +
           (nn - kk) * std::log1p(-p);
}

// Two-sided exact binomial p-value for observing k of n at probability p (twice the smaller tail).
inline double binomial_two_sided_p(uint64_t k, uint64_t n, double p) {
    if (p <= 0) return k == 0 ? 1.0 : 0.0;
    if (p >= 1) return k == n ? 1.0 : 0.0;
    double upper = 0, lower = 0;
    for (uint64_t j = k; j <= n; j++) {
        double t = std::exp(binomial_log_pmf(j, n, p));
        upper += t;
        if (j > (double)n * p && t < 1e-18 * upper) break;
    }
    for (uint64_t j = k + 1; j-- > 0;) {
        double t = std::exp(binomial_log_pmf(j, n, p));
        lower += t;
        if (j < (double)n * p && t < 1e-18 * lower) break;
    }
    return std::min(1.0, 2 * std::min(upper, lower));
}

// Smallest per-outcome p-value of observed counts against exact probabilities.
inline double min_outcome_p_value(const std::vector<double> &exact, const std::vector<uint64_t> &counts, uint64_t n) {
    double worst = 1;
    for (size_t k = 0; k < exact.size(); k++) {
        worst = std::min(worst, binomial_two_sided_p(counts[k], n, std::clamp(exact[k], 0.0, 1.0)));
    }
    return worst;
}

}  // namespace s17::oracle

#endif
