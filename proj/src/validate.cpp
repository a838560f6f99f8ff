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

#include "vmhmc/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "vmhmc/diagnostics.hpp"
#include "vmhmc/error.hpp"
#include "vmhmc/samplers.hpp"
#include "vmhmc/special_math.hpp"

namespace vmhmc {

namespace {

std::string label(const char* what, double kappa)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s kappa=%g", what, kappa);
    return buf;
}

double state_error(PhasePoint a, PhasePoint b)
{
    return std::max(std::abs(a.x - b.x), std::abs(a.p - b.p));
}

} // namespace

bool ValidationReport::all_passed() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

DynamicsTuple draw_dynamics_tuple(RandomStream& rng)
{
    DynamicsTuple t{};
    t.start.x = -kPi + kTwoPi * uniform_open01(rng);
    t.start.p = sample_laplace_momentum(rng);
    t.kappa = 0.1 * std::exp(std::log(200.0) * uniform_open01(rng));
    t.T = 2.5 * kPi * uniform_open01(rng);
    return t;
}

void validate_validation_config(const ValidationConfig& config)
{
    if (config.kappas.empty())
        throw ConfigError("validate: at least one kappa is required");
    for (double k : config.kappas)
        if (!std::isfinite(k) || k <= 0.0)
            throw ConfigError("validate: kappa values must be > 0");
    if (config.bins < 10)
        throw ConfigError("validate: need at least 10 bins");
    if (config.n < 5 * static_cast<std::int64_t>(config.bins))
        throw ConfigError("validate: n = " + std::to_string(config.n) +
                          " is too small for a " + std::to_string(config.bins) +
                          "-bin goodness-of-fit test (need n >= " +
                          std::to_string(5 * config.bins) + ")");
    if (!std::isfinite(config.travel_time) || config.travel_time <= 0.0)
        throw ConfigError("validate: travel time must be > 0");
    if (config.dynamics_tuples < 1 || config.oracle_tuples < 0)
        throw ConfigError("validate: tuple counts must be positive");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw ConfigError("validate: alpha must lie in (0, 1)");
}

ValidationReport run_validation(const ValidationConfig& config)
{
    validate_validation_config(config);
    ValidationReport report;

    const double critical = chisq_critical_value(config.bins - 1, config.alpha);
    for (std::size_t i = 0; i < config.kappas.size(); ++i) {
        const double kappa = config.kappas[i];
        ChainConfig chain;
        chain.params = VonMisesParams(kappa, 0.0);
        chain.travel_time = config.travel_time;
        chain.n = config.n;
        chain.seed = derive_seed(config.seed, i);
        const ChainOutput out = run_hmc_chain(chain);

        const ChiSquareResult gof = chisq_gof(out.samples, chain.params, config.bins);
        report.checks.push_back(
            {label("chi-square", kappa), gof.statistic < critical, gof.statistic, critical});

        const CircularMoments m = circular_moments(out.samples);
        const double target = mean_resultant_length(kappa);
        report.checks.push_back({label("E[cos x]", kappa),
                                 std::abs(m.mean_cos - target) <= 3.0 * m.se_cos,
                                 std::abs(m.mean_cos - target), 3.0 * m.se_cos});
        report.checks.push_back({label("E[sin x]", kappa), std::abs(m.mean_sin) <= 3.0 * m.se_sin,
                                 std::abs(m.mean_sin), 3.0 * m.se_sin});
    }

    const detail::DynamicsFault fault{config.inject_fault};
    RandomStream rng(derive_seed(config.seed, 0xD15EA5E));
    double worst_energy = 0.0;
    double worst_involution = 0.0;
    double worst_oracle = 0.0;
    for (int k = 0; k < config.dynamics_tuples; ++k) {
        const DynamicsTuple t = draw_dynamics_tuple(rng);
        const TrajectoryResult fwd = detail::evolve_fast(t.start, t.kappa, t.T, fault, false);
        worst_energy = std::max(worst_energy, std::abs(fwd.h_end - fwd.h_start) /
                                                  (1.0 + std::abs(fwd.h_start)));
        const TrajectoryResult back = detail::evolve_fast({fwd.end.x, -fwd.end.p}, t.kappa, t.T,
                                                          fault, false);
        worst_involution = std::max(
            worst_involution, state_error(back.end, {t.start.x, -t.start.p}));
        if (k < config.oracle_tuples) {
            const PhasePoint reference =
                oracle_integrate(t.start, t.kappa, t.T, config.oracle_step);
            worst_oracle = std::max(worst_oracle, state_error(fwd.end, reference));
        }
    }
    report.checks.push_back({"energy conservation", worst_energy <= 1e-9, worst_energy, 1e-9});
    report.checks.push_back({"involution", worst_involution <= 1e-9, worst_involution, 1e-9});
    if (config.oracle_tuples > 0)
        report.checks.push_back({"oracle agreement", worst_oracle <= 1e-6, worst_oracle, 1e-6});
    return report;
}

} // namespace vmhmc
