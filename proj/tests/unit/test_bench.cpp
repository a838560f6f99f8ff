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
#include <sstream>
#include <vector>

#include "vmhmc/bench.hpp"
#include "vmhmc/error.hpp"
#include "vmhmc/io.hpp"

using namespace vmhmc;

namespace {

SweepConfig small_sweep()
{
    SweepConfig c;
    c.kappa_grid = {0.5, 4.0, 20.0};
    c.T_grid = linear_grid(0.0, 2.5 * kPi, 8);
    c.n = 5000;
    c.burn_in = 100;
    c.master_seed = 42;
    return c;
}

std::string csv(const std::vector<SweepRecord>& records)
{
    std::ostringstream out;
    write_sweep_csv(records, out);
    return out.str();
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<double> ranks(const std::vector<double>& v)
{
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        r[idx[k]] = static_cast<double>(k);
    return r;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b)
{
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / a.size();
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / b.size();
    double c = 0, va = 0, vb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        c += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    return c / std::sqrt(va * vb);
}

} // namespace

TEST_CASE("grids")
{
    const std::vector<double> k = default_kappa_grid();
    REQUIRE(k.size() == 24);
    CHECK(k.front() == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(k.back() == doctest::Approx(20.0).epsilon(1e-14));
    for (std::size_t i = 2; i < k.size(); ++i)
        CHECK(k[i] / k[i - 1] == doctest::Approx(k[1] / k[0]).epsilon(1e-12));

    const std::vector<double> t = default_T_grid();
    REQUIRE(t.size() == 64);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == doctest::Approx(2.5 * kPi).epsilon(1e-14));
    CHECK(t[1] - t[0] == doctest::Approx(2.5 * kPi / 63));

    CHECK(linear_grid(1.0, 1.0, 1) == std::vector<double>{1.0});
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), ConfigError);
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 4), ConfigError);
}

TEST_CASE("sweep configuration is validated")
{
    SweepConfig c = small_sweep();
    CHECK_NOTHROW(validate_sweep_config(c));
    c.kappa_grid = {};
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c = small_sweep();
    c.kappa_grid = {4.0, 1.0};
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c = small_sweep();
    c.T_grid = {-1.0, 1.0};
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c = small_sweep();
    c.threads = 0;
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c = small_sweep();
    c.n = 0;
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
}

TEST_CASE("run_sweep covers the grid deterministically")
{
    const SweepConfig c = small_sweep();
    const std::vector<SweepRecord> a = run_sweep(c);
    REQUIRE(a.size() == c.kappa_grid.size() * c.T_grid.size());
    for (std::size_t i = 0; i < c.kappa_grid.size(); ++i) {
        for (std::size_t j = 0; j < c.T_grid.size(); ++j) {
            const SweepRecord& r = a[i * c.T_grid.size() + j];
            CHECK(r.kappa == c.kappa_grid[i]);
            CHECK(r.T == c.T_grid[j]);
            CHECK(r.seed == derive_seed(c.master_seed, i, j));
            CHECK(r.n == c.n);
            CHECK(r.ress_sin == 1.0 / r.tau_sin);
            CHECK(r.ress_cos == 1.0 / r.tau_cos);
            CHECK(r.wall_seconds == 0.0);
        }
    }
    CHECK(csv(run_sweep(c)) == csv(a));

    SweepConfig threaded = c;
    threaded.threads = 4;
    CHECK(csv(run_sweep(threaded)) == csv(a));

    SweepConfig other = c;
    other.master_seed = 43;
    CHECK(csv(run_sweep(other)) != csv(a));
}

TEST_CASE("sweep shows super-efficiency for sin and not for cos")
{
    SweepConfig c;
    c.kappa_grid = {0.5, 1.0, 4.0, 10.0, 20.0};
    c.T_grid = linear_grid(0.0, 2.5 * kPi, 24);
    c.n = 20'000;
    c.master_seed = 3;
    const std::vector<SweepRecord> records = run_sweep(c);
    int cos_below = 0;
    for (std::size_t i = 0; i < c.kappa_grid.size(); ++i) {
        double best = 0.0;
        for (std::size_t j = 0; j < c.T_grid.size(); ++j) {
            const SweepRecord& r = records[i * c.T_grid.size() + j];
            best = std::max(best, r.ress_sin);
            cos_below += r.ress_cos <= 1.0;
        }
        INFO("kappa=" << c.kappa_grid[i]);
        CHECK(best > 1.0);
    }
    CHECK(cos_below > static_cast<int>(records.size()) / 2);
}

TEST_CASE("T = 0 cells are frozen chains")
{
    SweepConfig c = small_sweep();
    c.T_grid = {0.0};
    for (const SweepRecord& r : run_sweep(c)) {
        CHECK(r.tau_sin == static_cast<double>(c.n));
        CHECK(r.ress_sin == 1.0 / static_cast<double>(c.n));
    }
}

TEST_CASE("parabola_vertex")
{
    CHECK(parabola_vertex(0, 0, 1, 1, 2, 0) == doctest::Approx(1.0));
    CHECK(parabola_vertex(0, 0, 1, 2, 2, 1) == doctest::Approx(1.1666666666666667));
    // not concave: fall back to the middle point
    CHECK(parabola_vertex(0, 1, 1, 0, 2, 1) == 1.0);
    CHECK(parabola_vertex(0, 1, 1, 1, 2, 1) == 1.0);
    // clamped to the bracket
    const double v = parabola_vertex(0, 0, 1, 1e-12, 2, -10);
    CHECK(v >= 0.0);
    CHECK(v <= 2.0);
}

TEST_CASE("find_optimal_T")
{
    const std::vector<double> grid = default_T_grid();
    for (double kappa : {1.0, 4.0, 10.0}) {
        const OptimalTravelTime opt = find_optimal_T(kappa, grid, 100'000, 2024);
        INFO("kappa=" << kappa << " T*=" << opt.T_star);
        REQUIRE(opt.ress_sin.size() == grid.size());
        CHECK(opt.ress_at_star >= 2.0);
        CHECK(opt.ress_at_star == *std::max_element(opt.ress_sin.begin(), opt.ress_sin.end()));
        CHECK(std::abs(opt.T_star - opt.best_grid_T) <= grid[1] - grid[0]);
        if (kappa == 4.0) {
            // the grid point nearest 0.1 is the second one
            CHECK(opt.ress_at_star > opt.ress_sin[1]);
            // a brute-force integrator puts the optimum near 2.0
            CHECK(opt.T_star > 1.8);
            CHECK(opt.T_star < 2.2);
        }
    }
}

TEST_CASE("baseline_efficiency")
{
    const std::vector<double> grid{0.1, 1.0, 5.0, 20.0};
    const std::vector<BaselinePoint> a = baseline_efficiency(grid, 100'000, 1);
    REQUIRE(a.size() == grid.size());
    for (std::size_t i = 1; i < a.size(); ++i)
        CHECK(a[i].acceptance_rate < a[i - 1].acceptance_rate);
    CHECK(a.back().acceptance_rate >= 0.60);
    CHECK(a.back().acceptance_rate <= 0.72);
    for (const BaselinePoint& p : a)
        CHECK(p.ress_sin == doctest::Approx(1.0).epsilon(0.05));
    const std::vector<BaselinePoint> b = baseline_efficiency(grid, 100'000, 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].acceptance_rate == b[i].acceptance_rate);
        CHECK(a[i].ress_sin == b[i].ress_sin);
    }
}

TEST_CASE("time_sweep")
{
    SweepConfig c;
    c.kappa_grid = {1.0, 4.0, 20.0};
    c.T_grid = linear_grid(0.0, 2.5 * kPi, 16);
    c.n = 4000;
    c.burn_in = 0;
    c.mode = TrajectoryMode::segment_loop;
    const std::vector<TimingRecord> first = time_sweep(c);
    REQUIRE(first.size() == 48);
    for (const TimingRecord& r : first)
        CHECK(r.wall_seconds > 0.0);

    std::vector<double> short_T, long_T;
    for (const TimingRecord& r : first) {
        if (r.kappa != 4.0)
            continue;
        if (r.T <= 1.0)
            short_T.push_back(r.wall_seconds);
        if (r.T >= 6.0)
            long_T.push_back(r.wall_seconds);
    }
    REQUIRE_FALSE(short_T.empty());
    REQUIRE_FALSE(long_T.empty());
    CHECK(median(long_T) >= median(short_T));

    const std::vector<TimingRecord> second = time_sweep(c);
    std::vector<double> a, b;
    for (std::size_t k = 0; k < first.size(); ++k) {
        a.push_back(first[k].wall_seconds);
        b.push_back(second[k].wall_seconds);
    }
    CHECK(pearson(ranks(a), ranks(b)) > 0.9);
}
