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

#include <cstddef>
#include <span>
#include <vector>

#include "vmhmc/special_math.hpp"

namespace vmhmc {

struct EssResult {
    /// rho_0 = 1, rho_1, ... up to the last lag the estimator inspected.
    std::vector<double> acf;
    /// Integrated autocorrelation time.
    double tau = 1.0;
    /// Relative effective sample size, 1 / tau.
    double ress = 1.0;
    /// Last lag included in the truncated sum (0 when no pair was kept).
    std::size_t cutoff = 0;
};

struct GeyerEstimate {
    double tau;
    std::size_t cutoff;
};

inline constexpr double kTauFloor = 1e-6;

/// Biased (1/N) sample autocorrelations rho_0..rho_max_lag of the demeaned
/// series. Throws DegenerateSeriesError for a constant series.
std::vector<double> autocorrelation(std::span<const double> series, std::size_t max_lag);

/// Geyer initial monotone sequence estimate of tau from rho_0, rho_1, ...
/// Pair sums rho_{2m} + rho_{2m+1} are kept while positive and clipped to be
/// nonincreasing; tau = -1 + 2 * sum, floored at kTauFloor.
GeyerEstimate geyer_tau(std::span<const double> acf);

/// RESS of a scalar chain. The ACF is computed lag by lag and stops at the
/// Geyer truncation point (at most N / 2 lags).
EssResult ress(std::span<const double> series);

struct CircularMoments {
    double mean_cos = 0.0;
    double mean_sin = 0.0;
    /// Standard errors inflated by sqrt(tau) of the respective series.
    double se_cos = 0.0;
    double se_sin = 0.0;
};

CircularMoments circular_moments(std::span<const double> samples);

struct ChiSquareResult {
    double statistic;
    int dof;
};

/// Pearson goodness-of-fit against the von Mises bin probabilities on
/// equal-width bins over [-pi, pi). Throws ConfigError when bins < 10 or the
/// mean expected count per bin is below 5.
ChiSquareResult chisq_gof(std::span<const double> samples, const VonMisesParams& params,
                          int bins);

/// Upper quantile of the chi-square distribution: P(X > value) = alpha.
double chisq_critical_value(int dof, double alpha);

} // namespace vmhmc
