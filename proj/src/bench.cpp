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

#include "vmhmc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "vmhmc/diagnostics.hpp"
#include "vmhmc/error.hpp"
#include "vmhmc/random.hpp"

namespace vmhmc {

namespace {

void check_grid(const std::vector<double>& grid, const char* name, bool allow_zero)
{
    if (grid.empty())
        throw ConfigError(std::string(name) + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = grid[i];
        if (!std::isfinite(v) || v < 0.0 || (!allow_zero && v == 0.0))
            throw ConfigError(std::string(name) + " grid has an invalid value");
        if (i > 0 && !(v > grid[i - 1]))
            throw ConfigError(std::string(name) + " grid must be strictly increasing");
    }
}

EssResult ress_or_frozen(const std::vector<double>& series)
{
    try {
        return ress(series);
    } catch (const DegenerateSeriesError&) {
        EssResult frozen;
        frozen.acf = {1.0};
        frozen.tau = static_cast<double>(series.size());
        frozen.ress = 1.0 / frozen.tau;
        return frozen;
    }
}

ChainConfig cell_chain(const SweepConfig& config, std::size_t i, std::size_t j)
{
    ChainConfig chain;
    chain.params = VonMisesParams(config.kappa_grid[i], 0.0);
    chain.travel_time = config.T_grid[j];
    chain.n = config.n;
    chain.burn_in = config.burn_in;
    chain.seed = derive_seed(config.master_seed, i, j);
    chain.mode = config.mode;
    return chain;
}

// Runs job(k) for k in [0, count) on up to `threads` workers.
template <typename Job>
void parallel_for(std::size_t count, int threads, Job job)
{
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            job(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < count; k = next++) {
                    try {
                        job(k);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

std::vector<double> log_grid(double lo, double hi, int count)
{
    if (count < 1 || !(lo > 0.0) || !(hi >= lo))
        throw ConfigError("log_grid: need count >= 1 and 0 < lo <= hi");
    if (count == 1)
        return {lo};
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i)
        grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    grid.back() = hi;
    return grid;
}

std::vector<double> linear_grid(double lo, double hi, int count)
{
    if (count < 1 || !(hi >= lo))
        throw ConfigError("linear_grid: need count >= 1 and lo <= hi");
    if (count == 1)
        return {lo};
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i)
        grid[static_cast<std::size_t>(i)] = lo + step * i;
    grid.back() = hi;
    return grid;
}

std::vector<double> default_kappa_grid() { return log_grid(0.1, 20.0, 24); }
std::vector<double> default_T_grid() { return linear_grid(0.0, 2.5 * kPi, 64); }

void validate_sweep_config(const SweepConfig& config)
{
    check_grid(config.kappa_grid, "kappa", false);
    check_grid(config.T_grid, "T", true);
    if (config.n < 4)
        throw ConfigError("sweep chains need n >= 4 for the RESS estimate");
    if (config.burn_in < 0)
        throw ConfigError("burn_in must be >= 0");
    if (config.threads < 1)
        throw ConfigError("threads must be >= 1");
}

SweepRecord summarize_chain(const std::vector<double>& samples)
{
    std::vector<double> sines(samples.size());
    std::vector<double> cosines(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        sines[i] = std::sin(samples[i]);
        cosines[i] = std::cos(samples[i]);
    }
    const EssResult s = ress_or_frozen(sines);
    const EssResult c = ress_or_frozen(cosines);
    SweepRecord record;
    record.n = static_cast<std::int64_t>(samples.size());
    record.ress_sin = s.ress;
    record.tau_sin = s.tau;
    record.ress_cos = c.ress;
    record.tau_cos = c.tau;
    return record;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config)
{
    validate_sweep_config(config);
    const std::size_t cols = config.T_grid.size();
    std::vector<SweepRecord> records(config.kappa_grid.size() * cols);

    // timing runs share no cores with other cells
    const int threads = config.record_timing ? 1 : config.threads;
    parallel_for(records.size(), threads, [&](std::size_t k) {
        const std::size_t i = k / cols;
        const std::size_t j = k % cols;
        const ChainConfig chain = cell_chain(config, i, j);
        const ChainOutput out = run_hmc_chain(chain);
        SweepRecord record = summarize_chain(out.samples);
        record.kappa = config.kappa_grid[i];
        record.T = config.T_grid[j];
        record.seed = chain.seed;
        record.wall_seconds = config.record_timing ? out.wall_seconds : 0.0;
        records[k] = record;
    });
    return records;
}

double parabola_vertex(double x0, double y0, double x1, double y1, double x2, double y2)
{
    const double a = (x1 - x0) * (y1 - y2);
    const double b = (x1 - x2) * (y1 - y0);
    const double denom = a - b;
    const bool concave = y1 >= y0 && y1 >= y2 && (y1 > y0 || y1 > y2);
    if (!concave || denom == 0.0)
        return x1;
    const double vertex = x1 - 0.5 * ((x1 - x0) * a - (x1 - x2) * b) / denom;
    return std::clamp(vertex, x0, x2);
}

OptimalTravelTime find_optimal_T(double kappa, const std::vector<double>& T_grid, std::int64_t n,
                                 std::uint64_t seed, std::int64_t burn_in, int threads)
{
    SweepConfig config;
    config.kappa_grid = {kappa};
    config.T_grid = T_grid;
    config.n = n;
    config.burn_in = burn_in;
    config.master_seed = seed;
    config.threads = threads;
    const std::vector<SweepRecord> records = run_sweep(config);

    OptimalTravelTime result;
    result.ress_sin.reserve(records.size());
    for (const SweepRecord& r : records)
        result.ress_sin.push_back(r.ress_sin);
    const auto best = static_cast<std::size_t>(
        std::max_element(result.ress_sin.begin(), result.ress_sin.end()) -
        result.ress_sin.begin());
    result.best_grid_T = T_grid[best];
    result.ress_at_star = result.ress_sin[best];
    result.T_star = result.best_grid_T;
    if (best > 0 && best + 1 < T_grid.size()) {
        result.T_star =
            parabola_vertex(T_grid[best - 1], result.ress_sin[best - 1], T_grid[best],
                            result.ress_sin[best], T_grid[best + 1], result.ress_sin[best + 1]);
    }
    return result;
}

std::vector<BaselinePoint> baseline_efficiency(const std::vector<double>& kappa_grid,
                                               std::int64_t n, std::uint64_t seed)
{
    check_grid(kappa_grid, "kappa", false);
    std::vector<BaselinePoint> points;
    points.reserve(kappa_grid.size());
    for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
        ChainConfig chain;
        chain.params = VonMisesParams(kappa_grid[i], 0.0);
        chain.n = n;
        chain.seed = derive_seed(seed, i);
        const ChainOutput out = run_best_fisher_chain(chain);
        BaselinePoint point;
        point.kappa = kappa_grid[i];
        point.acceptance_rate = out.acceptance_rate;
        point.ress_sin = n >= 4 ? summarize_chain(out.samples).ress_sin : 1.0;
        points.push_back(point);
    }
    return points;
}

std::vector<TimingRecord> time_sweep(const SweepConfig& config)
{
    validate_sweep_config(config);
    std::vector<TimingRecord> timings;
    timings.reserve(config.kappa_grid.size() * config.T_grid.size());
    for (std::size_t i = 0; i < config.kappa_grid.size(); ++i) {
        for (std::size_t j = 0; j < config.T_grid.size(); ++j) {
            const ChainOutput out = run_hmc_chain(cell_chain(config, i, j));
            timings.push_back({config.kappa_grid[i], config.T_grid[j], out.wall_seconds});
        }
    }
    return timings;
}

} // namespace vmhmc
