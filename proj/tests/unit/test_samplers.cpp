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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "vmhmc/diagnostics.hpp"
#include "vmhmc/dynamics.hpp"
#include "vmhmc/error.hpp"
#include "vmhmc/samplers.hpp"
#include "vmhmc/special_math.hpp"

using namespace vmhmc;

namespace {

ChainConfig chain(double kappa, double T, std::int64_t n, std::uint64_t seed)
{
    ChainConfig c;
    c.params = VonMisesParams(kappa);
    c.travel_time = T;
    c.n = n;
    c.seed = seed;
    return c;
}

std::vector<double> apply(const std::vector<double>& xs, double (*f)(double))
{
    std::vector<double> out(xs.size());
    std::transform(xs.begin(), xs.end(), out.begin(), f);
    return out;
}

double sin_of(double x) { return std::sin(x); }
double cos_of(double x) { return std::cos(x); }

} // namespace

TEST_CASE("laplace_from_uniform")
{
    CHECK(laplace_from_uniform(0.5) == 0.0);
    CHECK(laplace_from_uniform(0.75) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(laplace_from_uniform(0.25) == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
    CHECK(laplace_from_uniform(1e-300) < -600.0);
    CHECK(std::isfinite(laplace_from_uniform(1.0 - 1e-16)));
    CHECK_THROWS_AS(laplace_from_uniform(0.0), DomainError);
    CHECK_THROWS_AS(laplace_from_uniform(1.0), DomainError);
}

TEST_CASE("sample_laplace_momentum moments")
{
    RandomStream rng(2024);
    const int n = 1'000'000;
    double abs_sum = 0.0, sum = 0.0, sq = 0.0;
    int positive = 0;
    for (int i = 0; i < n; ++i) {
        const double p = sample_laplace_momentum(rng);
        abs_sum += std::abs(p);
        sum += p;
        sq += p * p;
        positive += p > 0;
    }
    CHECK(abs_sum / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sq / n == doctest::Approx(2.0).epsilon(0.02));
    CHECK(positive / double(n) == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("hmc_step examples")
{
    const VonMisesParams p(1.0);
    CHECK(hmc_step(0.0, 1.0, p, kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(hmc_step(0.0, 3.0, p, kPi) == doctest::Approx(-kPi).epsilon(1e-14));
    CHECK(hmc_step(0.7, 0.3, p, 0.0) == 0.7);
    // the segment loop agrees with the closed form
    RandomStream rng(5);
    for (int i = 0; i < 500; ++i) {
        const double x = 2 * kPi * uniform_open01(rng) - kPi;
        const double m = sample_laplace_momentum(rng);
        const double T = 2.5 * kPi * uniform_open01(rng);
        const double a = hmc_step(x, m, VonMisesParams(4.0), T);
        const double b = hmc_step(x, m, VonMisesParams(4.0), T, TrajectoryMode::segment_loop);
        REQUIRE(oracle::angular_distance(a, b) < 1e-9);
    }
}

TEST_CASE("hmc_step is equivariant in the location")
{
    RandomStream rng(6);
    for (int i = 0; i < 500; ++i) {
        const double x = 2 * kPi * uniform_open01(rng) - kPi;
        const double m = sample_laplace_momentum(rng);
        const double nu = 2 * kPi * uniform_open01(rng) - kPi;
        const double T = 2.5 * kPi * uniform_open01(rng);
        const double base = hmc_step(x, m, VonMisesParams(3.0), T);
        const double shifted = hmc_step(wrap_angle(x + nu), m, VonMisesParams(3.0, nu), T);
        REQUIRE(oracle::angular_distance(shifted, wrap_angle(base + nu)) < 1e-9);
        REQUIRE(shifted >= -kPi);
        REQUIRE(shifted < kPi);
    }
}

TEST_CASE("chain configuration is validated")
{
    CHECK_NOTHROW(validate_chain_config(chain(4.0, 2.32, 10, 1)));
    CHECK_THROWS_AS(validate_chain_config(chain(4.0, 2.32, 0, 1)), ConfigError);
    CHECK_THROWS_AS(validate_chain_config(chain(4.0, -1.0, 10, 1)), ConfigError);
    ChainConfig c = chain(4.0, 2.32, 10, 1);
    c.burn_in = -1;
    CHECK_THROWS_AS(run_hmc_chain(c), ConfigError);
    CHECK_THROWS_AS(VonMisesParams(-1.0), DomainError);
}

TEST_CASE("run_hmc_chain is deterministic and wrapped")
{
    const ChainOutput a = run_hmc_chain(chain(4.0, 2.32, 5000, 7));
    const ChainOutput b = run_hmc_chain(chain(4.0, 2.32, 5000, 7));
    const ChainOutput c = run_hmc_chain(chain(4.0, 2.32, 5000, 8));
    REQUIRE(a.samples.size() == 5000);
    CHECK(a.samples == b.samples);
    CHECK(a.samples != c.samples);
    CHECK(a.acceptance_rate == 1.0);
    CHECK(a.wall_seconds >= 0.0);
    for (double x : a.samples) {
        REQUIRE(x >= -kPi);
        REQUIRE(x < kPi);
    }
}

TEST_CASE("a zero travel time chain stays put")
{
    ChainConfig c = chain(2.0, 0.0, 100, 1);
    c.x_init = 0.25;
    for (double x : run_hmc_chain(c).samples)
        REQUIRE(x == 0.25);
}

TEST_CASE("run_hmc_chain targets the von Mises law")
{
    for (double kappa : {0.5, 4.0, 20.0}) {
        const ChainOutput out = run_hmc_chain(chain(kappa, 2.32, 100'000, 11));
        const CircularMoments m = circular_moments(out.samples);
        INFO("kappa=" << kappa);
        CHECK(std::abs(m.mean_cos - mean_resultant_length(kappa)) < 3 * m.se_cos);
        CHECK(std::abs(m.mean_sin) < 3 * m.se_sin);
        CHECK(chisq_gof(out.samples, VonMisesParams(kappa), 50).statistic <
              oracle::chisq_upper_quantile(49, 0.001));
    }
}

TEST_CASE("non-zero location is honoured")
{
    const double nu = 1.2;
    ChainConfig c = chain(4.0, 2.32, 50'000, 3);
    c.params = VonMisesParams(4.0, nu);
    const ChainOutput out = run_hmc_chain(c);
    double sc = 0.0, ss = 0.0;
    for (double x : out.samples) {
        sc += std::cos(x);
        ss += std::sin(x);
    }
    CHECK(std::atan2(ss, sc) == doctest::Approx(nu).epsilon(0.02));
    CHECK(chisq_gof(out.samples, c.params, 50).statistic < oracle::chisq_upper_quantile(49, 0.001));
}

TEST_CASE("sin chain is antithetic at the reference travel time")
{
    const ChainOutput out = run_hmc_chain(chain(4.0, 2.32, 100'000, 7));
    const std::vector<double> acf = autocorrelation(apply(out.samples, sin_of), 3);
    CHECK(acf[1] < 0.0);
    CHECK(acf[3] < 0.0);
    CHECK(acf[2] > 0.0);
    CHECK(ress(apply(out.samples, cos_of)).ress < 1.0);
}

TEST_CASE("different seeds give uncorrelated chains")
{
    const ChainOutput a = run_hmc_chain(chain(4.0, 2.32, 20'000, 100));
    const ChainOutput b = run_hmc_chain(chain(4.0, 2.32, 20'000, 101));
    const std::vector<double> sa = apply(a.samples, sin_of), sb = apply(b.samples, sin_of);
    const double ma = std::accumulate(sa.begin(), sa.end(), 0.0) / sa.size();
    const double mb = std::accumulate(sb.begin(), sb.end(), 0.0) / sb.size();
    double cov = 0, va = 0, vb = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        cov += (sa[i] - ma) * (sb[i] - mb);
        va += (sa[i] - ma) * (sa[i] - ma);
        vb += (sb[i] - mb) * (sb[i] - mb);
    }
    CHECK(std::abs(cov / std::sqrt(va * vb)) < 0.03);
}

TEST_CASE("Best-Fisher envelope")
{
    const BestFisherEnvelope e(4.0);
    const double tau = 1 + std::sqrt(1 + 4 * 16.0);
    const double rho = (tau - std::sqrt(2 * tau)) / 8.0;
    CHECK(e.r == doctest::Approx((1 + rho * rho) / (2 * rho)).epsilon(1e-14));
    CHECK(BestFisherEnvelope(1e-7).r == doctest::Approx(1e7).epsilon(1e-12));
    CHECK(std::isfinite(BestFisherEnvelope(1e-300).r));
}

TEST_CASE("Best-Fisher sampler")
{
    SUBCASE("acceptance decreases towards 0.65")
    {
        ChainConfig c = chain(20.0, 0.0, 100'000, 9);
        const ChainOutput hi = run_best_fisher_chain(c);
        c.params = VonMisesParams(0.1);
        const ChainOutput lo = run_best_fisher_chain(c);
        CHECK(hi.acceptance_rate >= 0.60);
        CHECK(hi.acceptance_rate <= 0.72);
        CHECK(hi.acceptance_rate < lo.acceptance_rate);
        CHECK(lo.acceptance_rate > 0.95);
    }
    SUBCASE("draws are i.i.d. von Mises")
    {
        for (double kappa : {0.5, 4.0, 20.0}) {
            ChainConfig c = chain(kappa, 0.0, 100'000, 13);
            c.params = VonMisesParams(kappa, -2.0);
            const ChainOutput out = run_best_fisher_chain(c);
            INFO("kappa=" << kappa);
            CHECK(chisq_gof(out.samples, c.params, 50).statistic <
                  oracle::chisq_upper_quantile(49, 0.001));
            CHECK(ress(apply(out.samples, sin_of)).ress == doctest::Approx(1.0).epsilon(0.05));
        }
    }
    SUBCASE("proposal counts")
    {
        RandomStream rng(1);
        std::int64_t total = 0;
        for (int i = 0; i < 1000; ++i) {
            const BestFisherDraw d = best_fisher_sample(rng, VonMisesParams(20.0));
            REQUIRE(d.proposals >= 1);
            REQUIRE(d.angle >= -kPi);
            REQUIRE(d.angle < kPi);
            total += d.proposals;
        }
        CHECK(total > 1000);
    }
}

TEST_CASE("HMC and Best-Fisher draws share one distribution")
{
    const double kappa = 4.0;
    const ChainOutput h = run_hmc_chain(chain(kappa, 2.32, 100'000, 21));
    const ChainOutput b = run_best_fisher_chain(chain(kappa, 0.0, 100'000, 22));
    // two-sample chi-square homogeneity on 50 bins; the HMC chain is thinned
    // by 10 to make its draws nearly independent
    const int bins = 50;
    std::vector<double> ch(bins, 0.0), cb(bins, 0.0);
    auto bin = [&](double x) {
        return std::min(bins - 1, static_cast<int>((x + kPi) / (2 * kPi) * bins));
    };
    for (std::size_t i = 0; i < h.samples.size(); i += 10)
        ch[bin(h.samples[i])] += 1;
    for (std::size_t i = 0; i < 10'000; ++i)
        cb[bin(b.samples[i])] += 1;
    double stat = 0.0;
    int used = 0;
    for (int k = 0; k < bins; ++k) {
        const double total = ch[k] + cb[k];
        if (total < 10) // sparse tail bins carry no information
            continue;
        const double e = total / 2.0;
        stat += (ch[k] - e) * (ch[k] - e) / e + (cb[k] - e) * (cb[k] - e) / e;
        ++used;
    }
    CHECK(stat < oracle::chisq_upper_quantile(used - 1, 0.001));
}
