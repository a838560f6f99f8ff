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

#include <doctest.h>

#include <cmath>
#include <string>

#include "vmhmc/error.hpp"
#include "vmhmc/special_math.hpp"
#include "vmhmc/validate.hpp"

using namespace vmhmc;

namespace {

ValidationConfig quick()
{
    ValidationConfig c;
    c.kappas = {4.0};
    c.n = 20'000;
    c.seed = 5;
    c.dynamics_tuples = 200;
    c.oracle_tuples = 5;
    return c;
}

} // namespace

TEST_CASE("draw_dynamics_tuple ranges")
{
    RandomStream rng(1);
    for (int i = 0; i < 10000; ++i) {
        const DynamicsTuple t = draw_dynamics_tuple(rng);
        REQUIRE(t.start.x >= -kPi);
        REQUIRE(t.start.x < kPi);
        REQUIRE(std::isfinite(t.start.p));
        REQUIRE(t.kappa >= 0.1);
        REQUIRE(t.kappa <= 20.0);
        REQUIRE(t.T >= 0.0);
        REQUIRE(t.T <= 2.5 * kPi);
    }
}

TEST_CASE("validation configuration")
{
    CHECK_NOTHROW(validate_validation_config(ValidationConfig{}));
    ValidationConfig c = quick();
    c.n = 100;
    CHECK_THROWS_AS(validate_validation_config(c), ConfigError);
    c = quick();
    c.kappas = {};
    CHECK_THROWS_AS(run_validation(c), ConfigError);
    c = quick();
    c.alpha = 0.0;
    CHECK_THROWS_AS(run_validation(c), ConfigError);
}

TEST_CASE("a healthy build validates")
{
    const ValidationReport report = run_validation(quick());
    CHECK(report.all_passed());
    CHECK(report.checks.size() >= 6);
    for (const CheckResult& c : report.checks) {
        INFO(c.name << " value=" << c.value << " threshold=" << c.threshold);
        CHECK(c.passed);
    }
}

TEST_CASE("a corrupted integrator is caught")
{
    ValidationConfig c = quick();
    c.inject_fault = true;
    const ValidationReport report = run_validation(c);
    CHECK_FALSE(report.all_passed());
    bool energy_failed = false;
    for (const CheckResult& r : report.checks)
        if (r.name.find("energy") != std::string::npos)
            energy_failed = energy_failed || !r.passed;
    CHECK(energy_failed);
}
