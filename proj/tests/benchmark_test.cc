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

#include <cmath>

#include "gtest/gtest.h"
#include "s17/fidelity.h"
#include "s17/floating_gate.h"

using namespace s17;

namespace {

BenchmarkRecord rec(double inf, double pc, double p_init = 0) {
    BenchmarkRecord r;
    r.gate = "v1";
    r.infidelity = inf;
    r.p_code = pc;
    r.p_init = p_init;
    return r;
}

}  // namespace

TEST(sweep_spec, defaults_per_family) {
    auto v1 = default_sweep(GateFamily::v1, Scenario::I);
    EXPECT_EQ(v1.p_init, (std::vector<double>{0, 0.002, 0.07}));
    EXPECT_EQ(v1.n1, 16u);
    EXPECT_EQ(v1.backend, Backend::exact);
    auto v2 = default_sweep(GateFamily::v2, Scenario::II);
    EXPECT_EQ(v2.p_init, (std::vector<double>{0, 0.007, 0.014}));
    EXPECT_EQ(v2.backend, Backend::trajectory);
    EXPECT_EQ(v2.n_samples, 200000u);
    auto l = default_sweep(GateFamily::ldiv, Scenario::I);
    EXPECT_EQ(l.p_init, (std::vector<double>{0, 0.003, 0.007}));
    EXPECT_DOUBLE_EQ(l.param1.lo, 1.0);
    EXPECT_DOUBLE_EQ(l.param1.hi, 1.1);
    EXPECT_DOUBLE_EQ(l.param2.lo, 0.007);
    EXPECT_DOUBLE_EQ(l.param2.hi, 0.027);
    EXPECT_DOUBLE_EQ(l.delta, -0.0145);
    EXPECT_EQ(parameter_names(GateFamily::v2), (std::pair<std::string, std::string>{"R", "gamma"}));
}

TEST(gate_grid, cell_centres) {
    EXPECT_DOUBLE_EQ(cell_centre({30, 35}, 16, 0), 30 + 5.0 / 32);
    EXPECT_DOUBLE_EQ(cell_centre({0, 1}, 4, 3), 0.875);
    SweepSpec s = default_sweep(GateFamily::v1, Scenario::I);
    s.n1 = 3;
    s.n2 = 2;
    auto grid = gate_grid(s);
    ASSERT_EQ(grid.size(), 6u);
    EXPECT_DOUBLE_EQ(grid[0].param1, cell_centre(s.param1, 3, 0));
    EXPECT_DOUBLE_EQ(grid[1].param2, cell_centre(s.param2, 2, 1));
    EXPECT_DOUBLE_EQ(grid[2].param1, cell_centre(s.param1, 3, 1));
    FloatingGateParams fp{grid[3].param1, grid[3].param2, FloatingVariant::v1};
    EXPECT_NEAR(grid[3].infidelity, gate_infidelity(floating_cnot(fp), gates::cnot()), 1e-15);
}

TEST(run_benchmark, ideal_point_noiseless) {
    SweepSpec s = default_sweep(GateFamily::ideal, Scenario::I);
    s.p_init = {0.0};
    auto r = run_benchmark(s);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_LT(r[0].infidelity, 1e-12);
    EXPECT_LT(r[0].p_code, 1e-9);
    EXPECT_EQ(r[0].gate, "ideal");
}

TEST(run_benchmark, p_code_monotone_in_p_init_for_ideal_gate) {
    SweepSpec s = default_sweep(GateFamily::ideal, Scenario::I);
    s.p_init.clear();
    for (int i = 0; i <= 10; i++) s.p_init.push_back(0.001 * i);
    auto r = run_benchmark(s);
    ASSERT_EQ(r.size(), 11u);
    for (size_t i = 1; i < r.size(); i++) {
        EXPECT_GE(r[i].p_code, r[i - 1].p_code - 1e-15);
    }
}

TEST(run_benchmark, v1_floor_is_order_1e_minus_4) {
    // Lowest-infidelity cell of the 16x16 v1 grid at p_init = 0.002.
    SweepSpec s = default_sweep(GateFamily::v1, Scenario::I);
    auto grid = gate_grid(s);
    size_t best = 0;
    for (size_t i = 0; i < grid.size(); i++) {
        if (grid[i].infidelity < grid[best].infidelity) best = i;
    }
    auto [pc, err] = p_code_at(grid[best].channel, s, 0.002, 0);
    EXPECT_EQ(err, 0.0);
    EXPECT_LE(std::abs(std::log10(pc / 1e-4)), 1.0) << pc;
}

TEST(run_benchmark, deterministic_across_threads) {
    SweepSpec s = default_sweep(GateFamily::v2, Scenario::II);
    s.n1 = 2;
    s.n2 = 2;
    s.n_samples = 20000;
    s.p_init = {0.014};
    s.seed = 9;
    auto a = run_benchmark(s);
    s.threads = 4;
    auto b = run_benchmark(s);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a[i].p_code, b[i].p_code);
        EXPECT_EQ(a[i].p_code_stderr, b[i].p_code_stderr);
        EXPECT_GT(a[i].p_code_stderr, 0.0);
    }
}

TEST(statistics, least_squares_exact_line) {
    LineFit f = least_squares({1, 2, 3, 4}, {3, 5, 7, 9});
    EXPECT_NEAR(f.slope, 2.0, 1e-14);
    EXPECT_NEAR(f.intercept, 1.0, 1e-14);
    EXPECT_NEAR(f.slope_stderr, 0.0, 1e-7);
    EXPECT_EQ(f.n, 4u);
}

TEST(statistics, least_squares_stderr_closed_form) {
    std::vector<double> x{0, 1, 2, 3, 4}, y{0.1, 0.9, 2.2, 2.8, 4.1};
    LineFit f = least_squares(x, y);
    // Closed form: slope = Sxy / Sxx; se^2 = (SSR / (n - 2)) / Sxx.
    double mx = 2, my = 2.02, sxx = 10, sxy = 0;
    for (int i = 0; i < 5; i++) sxy += (x[i] - mx) * (y[i] - my);
    double slope = sxy / sxx, ssr = 0;
    for (int i = 0; i < 5; i++) {
        double r = y[i] - (my + slope * (x[i] - mx));
        ssr += r * r;
    }
    EXPECT_NEAR(f.slope, slope, 1e-14);
    EXPECT_NEAR(f.slope_stderr, std::sqrt(ssr / 3 / sxx), 1e-14);
}

TEST(statistics, log_log_fit_and_lowest_decade) {
    std::vector<BenchmarkRecord> rs;
    for (int i = 0; i < 30; i++) {
        double inf = 1e-5 * std::pow(10.0, i / 10.0);
        rs.push_back(rec(inf, 3 * inf * inf));
    }
    rs.push_back(rec(0.0, 1e-3));  // ignored by the log fit
    LineFit f = log_log_fit(rs);
    EXPECT_NEAR(f.slope, 2.0, 1e-10);
    EXPECT_NEAR(f.intercept, std::log10(3.0), 1e-10);
    auto low = lowest_decade(rs);
    EXPECT_EQ(low.size(), 11u);  // 1e-5 .. 1e-4 inclusive
}

TEST(statistics, bins_and_spread) {
    std::vector<BenchmarkRecord> rs{rec(1e-4, 1e-8), rec(1.05e-4, 2.1e-8), rec(1.02e-4, 1.5e-8), rec(1e-2, 1e-4),
                                    rec(1.01e-2, 1.1e-4), rec(1.02e-2, 1.2e-4)};
    auto bins = infidelity_bins(rs, 20);
    ASSERT_EQ(bins.size(), 20u);
    size_t total = 0;
    for (const auto &b : bins) total += b.count;
    EXPECT_EQ(total, rs.size());
    EXPECT_NEAR(max_bin_spread(rs, 20, 3), 2.1, 1e-12);
    EXPECT_EQ(max_bin_spread(rs, 20, 4), 0.0);
}

TEST(presets, figure_presets_exist) {
    for (const char *name : {"fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "fig9-smoke", "fig10-smoke"}) {
        EXPECT_NO_THROW(find_preset(name)) << name;
    }
    EXPECT_THROW(find_preset("fig99"), std::invalid_argument);
    const auto &f11 = find_preset("fig11");
    ASSERT_EQ(f11.sweeps.size(), 2u);
    EXPECT_EQ(f11.sweeps[0].gate, GateFamily::ldiv);
    EXPECT_EQ(f11.sweeps[1].gate, GateFamily::ldiv_no_k2);
    EXPECT_EQ(find_preset("fig9-smoke").sweeps[0].n_samples, 50000u);
}
