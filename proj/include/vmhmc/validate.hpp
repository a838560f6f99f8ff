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
#include <string>
#include <vector>

#include "vmhmc/dynamics.hpp"
#include "vmhmc/random.hpp"

namespace vmhmc {

struct ValidationConfig {
    std::vector<double> kappas{0.5, 4.0, 20.0};
    std::int64_t n = 100'000;
    std::uint64_t seed = 0;
    double travel_time = 2.32;
    int bins = 50;
    double alpha = 0.001;
    int dynamics_tuples = 1000;
    int oracle_tuples = 100;
    double oracle_step = 1e-5;
    /// Corrupts the momentum update so that the dynamics checks must fail.
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double threshold = 0.0;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Random trajectory problem: x ~ U[-pi, pi), p ~ Laplace(1),
/// kappa ~ logU[0.1, 20], T ~ U[0, 2.5 pi].
struct DynamicsTuple {
    PhasePoint start;
    double kappa;
    double T;
};

DynamicsTuple draw_dynamics_tuple(RandomStream& rng);

/// Throws ConfigError when the configuration cannot support the checks.
void validate_validation_config(const ValidationConfig& config);

/// Stationarity, moments, energy conservation, involution and agreement with
/// the brute-force integrator.
ValidationReport run_validation(const ValidationConfig& config);

} // namespace vmhmc
