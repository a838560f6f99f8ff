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

#include "vmhmc/samplers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "vmhmc/dynamics.hpp"
#include "vmhmc/error.hpp"

namespace vmhmc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

double laplace_from_uniform(double u)
{
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("laplace_from_uniform: u must lie in (0, 1)");
    const double d = u - 0.5;
    if (d == 0.0)
        return 0.0;
    const double magnitude = -std::log1p(-2.0 * std::abs(d));
    return d > 0.0 ? magnitude : -magnitude;
}

double sample_laplace_momentum(RandomStream& rng)
{
    return laplace_from_uniform(uniform_open01(rng));
}

double hmc_step(double x, double momentum, const VonMisesParams& params, double travel_time,
                TrajectoryMode mode)
{
    const PhasePoint start{x - params.nu(), momentum};
    const PhasePoint end = mode == TrajectoryMode::closed_form
                               ? evolve_endpoint(start, params.kappa(), travel_time)
                               : evolve(start, params.kappa(), travel_time).end;
    return wrap_angle(end.x + params.nu());
}

double hmc_step(double x, RandomStream& rng, const VonMisesParams& params, double travel_time,
                TrajectoryMode mode)
{
    return hmc_step(x, sample_laplace_momentum(rng), params, travel_time, mode);
}

void validate_chain_config(const ChainConfig& config)
{
    if (config.n < 1)
        throw ConfigError("chain length n must be >= 1");
    if (config.burn_in < 0)
        throw ConfigError("burn_in must be >= 0");
    if (!std::isfinite(config.travel_time) || config.travel_time < 0.0)
        throw ConfigError("travel time must be finite and >= 0");
    if (config.x_init && !std::isfinite(*config.x_init))
        throw ConfigError("x_init must be finite");
}

ChainOutput run_hmc_chain(const ChainConfig& config)
{
    validate_chain_config(config);
    RandomStream rng(config.seed);
    const VonMisesParams& params = config.params;
    const double T = config.travel_time;

    ChainOutput out;
    out.samples.resize(static_cast<std::size_t>(config.n));
    double x = wrap_angle(config.x_init.value_or(params.nu()));

    const auto start = Clock::now();
    for (std::int64_t i = 0; i < config.burn_in; ++i)
        x = hmc_step(x, rng, params, T, config.mode);
    for (double& sample : out.samples) {
        x = hmc_step(x, rng, params, T, config.mode);
        sample = x;
    }
    out.wall_seconds = seconds_since(start);
    out.acceptance_rate = 1.0;
    return out;
}

BestFisherEnvelope::BestFisherEnvelope(double kappa_) : kappa(kappa_)
{
    if (!std::isfinite(kappa_) || kappa_ <= 0.0)
        throw DomainError("Best-Fisher envelope needs kappa > 0");
    if (kappa_ < 1e-5) {
        // rho underflows to zero here; second-order expansion of r
        r = 1.0 / kappa_ + kappa_;
    } else {
        const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa_ * kappa_);
        const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa_);
        r = (1.0 + rho * rho) / (2.0 * rho);
    }
}

BestFisherDraw best_fisher_sample(RandomStream& rng, const VonMisesParams& params)
{
    return best_fisher_sample(rng, BestFisherEnvelope(params.kappa()), params.nu());
}

BestFisherDraw best_fisher_sample(RandomStream& rng, const BestFisherEnvelope& envelope,
                                  double nu)
{
    const double r = envelope.r;
    std::int64_t proposals = 0;
    double f = 0.0;
    for (;;) {
        ++proposals;
        const double z = std::cos(kPi * uniform_open01(rng));
        f = (1.0 + r * z) / (r + z);
        const double c = envelope.kappa * (r - f);
        const double u2 = uniform_open01(rng);
        if (c * (2.0 - c) - u2 > 0.0)
            break;
        if (std::log(c / u2) + 1.0 - c >= 0.0)
            break;
    }
    const double u3 = uniform_open01(rng);
    const double theta = std::acos(std::clamp(f, -1.0, 1.0));
    return {wrap_angle((u3 > 0.5 ? theta : -theta) + nu), proposals};
}

ChainOutput run_best_fisher_chain(const ChainConfig& config)
{
    validate_chain_config(config);
    RandomStream rng(config.seed);
    const BestFisherEnvelope envelope(config.params.kappa());

    ChainOutput out;
    out.samples.resize(static_cast<std::size_t>(config.n));
    std::int64_t proposals = 0;
    const auto start = Clock::now();
    for (double& sample : out.samples) {
        const BestFisherDraw draw = best_fisher_sample(rng, envelope, config.params.nu());
        sample = draw.angle;
        proposals += draw.proposals;
    }
    out.wall_seconds = seconds_since(start);
    out.acceptance_rate = static_cast<double>(config.n) / static_cast<double>(proposals);
    return out;
}

} // namespace vmhmc
