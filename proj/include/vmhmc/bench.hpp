/*
   Copyright 2026 The vmhmc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "vmhmc/samplers.hpp"

namespace vmhmc {

struct SweepConfig {
    std::vector<double> kappa_grid;
    std::vector<double> T_grid;
    std::int64_t n = 100'000;
    std::int64_t burn_in = 1000;
    std::uint64_t master_seed = 0;
    int threads = 1;
    /// When false wall_seconds is written as 0 so that output is a pure
    /// function of the configuration.
    bool record_timing = false;
    TrajectoryMode mode = TrajectoryMode::closed_form;
};

struct SweepRecord {
    double kappa = 0.0;
    double T = 0.0;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
    double ress_sin = 0.0;
    double tau_sin = 0.0;
    double ress_cos = 0.0;
    double tau_cos = 0.0;
    double wall_seconds = 0.0;
};

/// count log-spaced values in [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int count);
/// count evenly spaced values in [lo, hi], endpoints included.
std::vector<double> linear_grid(double lo, double hi, int count);

std::vector<double> default_kappa_grid(); // 24 values in [0.1, 20]
std::vector<double> default_T_grid();     // 64 values in [0, 2.5 pi]

/// Throws ConfigError for empty or non-increasing grids, bad n, threads < 1.
void validate_sweep_config(const SweepConfig& config);

/// One record per (kappa, T) cell in kappa-major order. Cell (i, j) runs an
/// HMC chain at nu = 0 seeded with derive_seed(master_seed, i, j).
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// RESS of the sin and cos observables of one chain. A chain that never
/// moves has ESS 1, recorded as tau = n.
SweepRecord summarize_chain(const std::vector<double>& samples);

struct OptimalTravelTime {
    double T_star = 0.0;
    /// RESS(sin) at the best grid cell.
    double ress_at_star = 0.0;
    double best_grid_T = 0.0;
    std::vector<double> ress_sin; // one per grid T
};

/// Grid argmax of RESS(sin) refined by a parabola through the best cell and
/// its neighbours.
OptimalTravelTime find_optimal_T(double kappa, const std::vector<double>& T_grid, std::int64_t n,
                                 std::uint64_t seed, std::int64_t burn_in = 1000,
                                 int threads = 1);

/// Vertex of the parabola through three points, clamped to [x0, x2]; returns
/// x1 when the points are not strictly concave.
double parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2);

struct BaselinePoint {
    double kappa = 0.0;
    double acceptance_rate = 0.0;
    double ress_sin = 0.0;
};

/// Best-Fisher acceptance rate (and RESS of sin) for each kappa.
std::vector<BaselinePoint> baseline_efficiency(const std::vector<double>& kappa_grid,
                                               std::int64_t n, std::uint64_t seed);

struct TimingRecord {
    double kappa = 0.0;
    double T = 0.0;
    double wall_seconds = 0.0;
};

/// Single-threaded per-cell chain wall time (diagnostics excluded).
std::vector<TimingRecord> time_sweep(const SweepConfig& config);

} // namespace vmhmc
