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
#include <optional>
#include <utility>
#include <vector>

#include "vmhmc/random.hpp"
#include "vmhmc/special_math.hpp"

namespace vmhmc {

/// How each HMC trajectory is computed. Both are exact; segment_loop visits
/// every turning point and so its cost grows with T.
enum class TrajectoryMode { closed_form, segment_loop };

struct ChainConfig {
    VonMisesParams params{1.0};
    double travel_time = 0.0;
    std::int64_t n = 1;
    std::int64_t burn_in = 1000;
    std::uint64_t seed = 0;
    /// Defaults to nu.
    std::optional<double> x_init;
    TrajectoryMode mode = TrajectoryMode::closed_form;
};

struct ChainOutput {
    std::vector<double> samples;
    double acceptance_rate = 1.0;
    double wall_seconds = 0.0;
};

/// Inverse-CDF map from u in (0, 1) to the unit Laplace distribution.
double laplace_from_uniform(double u);
double sample_laplace_momentum(RandomStream& rng);

/// One HMC transition with the momentum supplied by the caller.
double hmc_step(double x, double momentum, const VonMisesParams& params, double travel_time,
                TrajectoryMode mode = TrajectoryMode::closed_form);
double hmc_step(double x, RandomStream& rng, const VonMisesParams& params, double travel_time,
                TrajectoryMode mode = TrajectoryMode::closed_form);

/// Throws ConfigError on n < 1, negative burn-in, or a bad travel time.
void validate_chain_config(const ChainConfig& config);

ChainOutput run_hmc_chain(const ChainConfig& config);

/// Envelope constants of the Best-Fisher wrapped-Cauchy rejection sampler.
struct BestFisherEnvelope {
    double kappa;
    double r;

    explicit BestFisherEnvelope(double kappa);
};

struct BestFisherDraw {
    double angle;
    std::int64_t proposals;
};

BestFisherDraw best_fisher_sample(RandomStream& rng, const VonMisesParams& params);
BestFisherDraw best_fisher_sample(RandomStream& rng, const BestFisherEnvelope& envelope,
                                  double nu);

/// n i.i.d. draws; travel_time, burn_in and x_init are ignored.
ChainOutput run_best_fisher_chain(const ChainConfig& config);

} // namespace vmhmc
