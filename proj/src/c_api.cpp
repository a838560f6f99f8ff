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

#include "vmhmc/vmhmc.h"

#include <algorithm>
#include <exception>
#include <iostream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "vmhmc/bench.hpp"
#include "vmhmc/diagnostics.hpp"
#include "vmhmc/dynamics.hpp"
#include "vmhmc/error.hpp"
#include "vmhmc/io.hpp"
#include "vmhmc/samplers.hpp"
#include "vmhmc/special_math.hpp"
#include "vmhmc/validate.hpp"

struct vmhmc_samples {
    vmhmc::ChainOutput output;
};

struct vmhmc_sweep {
    std::vector<vmhmc::SweepRecord> records;
};

struct vmhmc_report {
    vmhmc::ValidationReport report;
};

namespace {

thread_local std::string g_last_error;

vmhmc_status status_of(vmhmc::ErrorKind kind)
{
    switch (kind) {
    case vmhmc::ErrorKind::domain:
        return VMHMC_ERR_DOMAIN;
    case vmhmc::ErrorKind::precondition:
        return VMHMC_ERR_PRECONDITION;
    case vmhmc::ErrorKind::invariant:
        return VMHMC_ERR_INVARIANT;
    case vmhmc::ErrorKind::degenerate:
        return VMHMC_ERR_DEGENERATE;
    case vmhmc::ErrorKind::config:
        return VMHMC_ERR_CONFIG;
    case vmhmc::ErrorKind::io:
        return VMHMC_ERR_IO;
    }
    return VMHMC_ERR_INTERNAL;
}

vmhmc_status fail(vmhmc_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

// Runs body() and converts any exception into a status code.
template <typename Body>
vmhmc_status guarded(Body body)
{
    try {
        body();
        g_last_error.clear();
        return VMHMC_OK;
    } catch (const vmhmc::Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(VMHMC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(VMHMC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(VMHMC_ERR_INTERNAL, "unknown exception");
    }
}

#define VMHMC_REQUIRE(ptr)                                                                     \
    do {                                                                                       \
        if ((ptr) == nullptr)                                                                  \
            return fail(VMHMC_ERR_NULL_ARGUMENT, #ptr " must not be null");                    \
    } while (0)

bool is_stdout(const char* path) { return path == nullptr || std::string(path) == "-"; }

template <typename Writer>
void write_to(const char* path, Writer writer)
{
    if (is_stdout(path)) {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout)
            throw vmhmc::IoError("failed writing to stdout");
    } else {
        writer(std::string(path));
    }
}

vmhmc::TrajectoryMode to_mode(vmhmc_trajectory_mode mode)
{
    return mode == VMHMC_TRAJECTORY_SEGMENT_LOOP ? vmhmc::TrajectoryMode::segment_loop
                                                 : vmhmc::TrajectoryMode::closed_form;
}

std::vector<double> to_vector(const double* values, size_t count)
{
    if (values == nullptr && count > 0)
        throw vmhmc::ConfigError("grid pointer is null");
    return std::vector<double>(values, values + count);
}

const std::vector<double>& static_kappa_grid()
{
    static const std::vector<double> grid = vmhmc::default_kappa_grid();
    return grid;
}

const std::vector<double>& static_t_grid()
{
    static const std::vector<double> grid = vmhmc::default_T_grid();
    return grid;
}

} // namespace

extern "C" {

const char* vmhmc_version(void) { return "1.0.0"; }

const char* vmhmc_status_string(vmhmc_status status)
{
    switch (status) {
    case VMHMC_OK:
        return "ok";
    case VMHMC_ERR_DOMAIN:
        return "domain error";
    case VMHMC_ERR_PRECONDITION:
        return "precondition violated";
    case VMHMC_ERR_INVARIANT:
        return "internal invariant violated";
    case VMHMC_ERR_DEGENERATE:
        return "degenerate series";
    case VMHMC_ERR_CONFIG:
        return "invalid configuration";
    case VMHMC_ERR_IO:
        return "i/o error";
    case VMHMC_ERR_NULL_ARGUMENT:
        return "null argument";
    case VMHMC_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* vmhmc_last_error(void) { return g_last_error.c_str(); }

vmhmc_status vmhmc_bessel_i0(double x, double* out)
{
    VMHMC_REQUIRE(out);
    return guarded([&] { *out = vmhmc::bessel_i0(x); });
}

vmhmc_status vmhmc_mean_resultant_length(double kappa, double* out)
{
    VMHMC_REQUIRE(out);
    return guarded([&] { *out = vmhmc::mean_resultant_length(kappa); });
}

vmhmc_status vmhmc_log_density(double x, double kappa, double nu, double* out)
{
    VMHMC_REQUIRE(out);
    return guarded([&] { *out = vmhmc::vm_log_density(x, vmhmc::VonMisesParams(kappa, nu)); });
}

vmhmc_status vmhmc_wrap_angle(double x, double* out)
{
    VMHMC_REQUIRE(out);
    return guarded([&] { *out = vmhmc::wrap_angle(x); });
}

vmhmc_status vmhmc_evolve(double x, double p, double kappa, double t, vmhmc_trajectory* out)
{
    VMHMC_REQUIRE(out);
    return guarded([&] {
        const vmhmc::TrajectoryResult r = vmhmc::evolve_fast({x, p}, kappa, t);
        *out = {r.end.x, r.end.p, r.q, r.h_start, r.h_end};
    });
}

void vmhmc_chain_config_init(vmhmc_chain_config* config)
{
    if (config == nullptr)
        return;
    *config = {};
    config->kappa = 1.0;
    config->n = 1;
    config->burn_in = 1000;
    config->method = VMHMC_METHOD_HMC;
    config->mode = VMHMC_TRAJECTORY_CLOSED_FORM;
}

vmhmc_status vmhmc_run_chain(const vmhmc_chain_config* config, vmhmc_samples** out)
{
    VMHMC_REQUIRE(config);
    VMHMC_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        vmhmc::ChainConfig chain;
        chain.params = vmhmc::VonMisesParams(config->kappa, config->nu);
        chain.travel_time = config->travel_time;
        chain.n = config->n;
        chain.burn_in = config->burn_in;
        chain.seed = config->seed;
        if (config->has_x_init)
            chain.x_init = config->x_init;
        chain.mode = to_mode(config->mode);

        auto handle = std::make_unique<vmhmc_samples>();
        switch (config->method) {
        case VMHMC_METHOD_HMC:
            handle->output = vmhmc::run_hmc_chain(chain);
            break;
        case VMHMC_METHOD_BEST_FISHER:
            handle->output = vmhmc::run_best_fisher_chain(chain);
            break;
        default:
            throw vmhmc::ConfigError("unknown sampling method");
        }
        *out = handle.release();
    });
}

size_t vmhmc_samples_size(const vmhmc_samples* samples)
{
    return samples ? samples->output.samples.size() : 0;
}

const double* vmhmc_samples_data(const vmhmc_samples* samples)
{
    return samples ? samples->output.samples.data() : nullptr;
}

double vmhmc_samples_acceptance_rate(const vmhmc_samples* samples)
{
    return samples ? samples->output.acceptance_rate : 0.0;
}

double vmhmc_samples_wall_seconds(const vmhmc_samples* samples)
{
    return samples ? samples->output.wall_seconds : 0.0;
}

vmhmc_status vmhmc_samples_write(const vmhmc_samples* samples, const char* path)
{
    VMHMC_REQUIRE(samples);
    return guarded([&] {
        write_to(path, [&](auto&& target) {
            vmhmc::write_samples(samples->output.samples, target);
        });
    });
}

void vmhmc_samples_free(vmhmc_samples* samples) { delete samples; }

vmhmc_status vmhmc_ress(const double* series, size_t length, vmhmc_ess* out)
{
    VMHMC_REQUIRE(series);
    VMHMC_REQUIRE(out);
    return guarded([&] {
        const vmhmc::EssResult r = vmhmc::ress(std::span<const double>(series, length));
        *out = {r.tau, r.ress, r.cutoff};
    });
}

void vmhmc_sweep_config_init(vmhmc_sweep_config* config)
{
    if (config == nullptr)
        return;
    *config = {};
    config->kappa_grid = static_kappa_grid().data();
    config->kappa_count = static_kappa_grid().size();
    config->t_grid = static_t_grid().data();
    config->t_count = static_t_grid().size();
    config->n = 100000;
    config->burn_in = 1000;
    config->threads = 1;
    config->mode = VMHMC_TRAJECTORY_CLOSED_FORM;
}

vmhmc_status vmhmc_run_sweep(const vmhmc_sweep_config* config, vmhmc_sweep** out)
{
    VMHMC_REQUIRE(config);
    VMHMC_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        vmhmc::SweepConfig sweep;
        sweep.kappa_grid = to_vector(config->kappa_grid, config->kappa_count);
        sweep.T_grid = to_vector(config->t_grid, config->t_count);
        sweep.n = config->n;
        sweep.burn_in = config->burn_in;
        sweep.master_seed = config->master_seed;
        sweep.threads = config->threads;
        sweep.record_timing = config->record_timing != 0;
        sweep.mode = to_mode(config->mode);
        auto handle = std::make_unique<vmhmc_sweep>();
        handle->records = vmhmc::run_sweep(sweep);
        *out = handle.release();
    });
}

size_t vmhmc_sweep_size(const vmhmc_sweep* sweep) { return sweep ? sweep->records.size() : 0; }

vmhmc_status vmhmc_sweep_record_at(const vmhmc_sweep* sweep, size_t index,
                                   vmhmc_sweep_record* out)
{
    VMHMC_REQUIRE(sweep);
    VMHMC_REQUIRE(out);
    if (index >= sweep->records.size())
        return fail(VMHMC_ERR_PRECONDITION, "sweep record index out of range");
    const vmhmc::SweepRecord& r = sweep->records[index];
    *out = {r.kappa, r.T, r.n, r.seed, r.ress_sin, r.tau_sin, r.ress_cos, r.tau_cos,
            r.wall_seconds};
    return VMHMC_OK;
}

vmhmc_status vmhmc_sweep_write_csv(const vmhmc_sweep* sweep, const char* path)
{
    VMHMC_REQUIRE(sweep);
    return guarded([&] {
        write_to(path, [&](auto&& target) { vmhmc::write_sweep_csv(sweep->records, target); });
    });
}

vmhmc_status vmhmc_sweep_write_json(const vmhmc_sweep* sweep, const char* path)
{
    VMHMC_REQUIRE(sweep);
    return guarded([&] {
        write_to(path, [&](auto&& target) { vmhmc::write_sweep_json(sweep->records, target); });
    });
}

void vmhmc_sweep_free(vmhmc_sweep* sweep) { delete sweep; }

vmhmc_status vmhmc_linear_grid(double lo, double hi, int count, double* out)
{
    VMHMC_REQUIRE(out);
    return guarded([&] {
        const std::vector<double> grid = vmhmc::linear_grid(lo, hi, count);
        std::copy(grid.begin(), grid.end(), out);
    });
}

vmhmc_status vmhmc_log_grid(double lo, double hi, int count, double* out)
{
    VMHMC_REQUIRE(out);
    return guarded([&] {
        const std::vector<double> grid = vmhmc::log_grid(lo, hi, count);
        std::copy(grid.begin(), grid.end(), out);
    });
}

vmhmc_status vmhmc_find_optimal_t(double kappa, const double* t_grid, size_t t_count, int64_t n,
                                  int64_t burn_in, uint64_t seed, int threads,
                                  vmhmc_optimal_t* out, double* ress_curve)
{
    VMHMC_REQUIRE(t_grid);
    VMHMC_REQUIRE(out);
    return guarded([&] {
        const vmhmc::OptimalTravelTime r = vmhmc::find_optimal_T(
            kappa, to_vector(t_grid, t_count), n, seed, burn_in, threads);
        *out = {r.T_star, r.ress_at_star, r.best_grid_T};
        if (ress_curve != nullptr)
            std::copy(r.ress_sin.begin(), r.ress_sin.end(), ress_curve);
    });
}

vmhmc_status vmhmc_baseline_efficiency(const double* kappa_grid, size_t kappa_count, int64_t n,
                                       uint64_t seed, double* acceptance_rates, double* ress_sin)
{
    VMHMC_REQUIRE(kappa_grid);
    return guarded([&] {
        const auto points =
            vmhmc::baseline_efficiency(to_vector(kappa_grid, kappa_count), n, seed);
        for (size_t i = 0; i < points.size(); ++i) {
            if (acceptance_rates != nullptr)
                acceptance_rates[i] = points[i].acceptance_rate;
            if (ress_sin != nullptr)
                ress_sin[i] = points[i].ress_sin;
        }
    });
}

void vmhmc_validate_config_init(vmhmc_validate_config* config)
{
    if (config == nullptr)
        return;
    static const double kDefaultKappas[] = {0.5, 4.0, 20.0};
    const vmhmc::ValidationConfig defaults;
    *config = {};
    config->kappas = kDefaultKappas;
    config->kappa_count = 3;
    config->n = defaults.n;
    config->travel_time = defaults.travel_time;
    config->dynamics_tuples = defaults.dynamics_tuples;
    config->oracle_tuples = defaults.oracle_tuples;
}

vmhmc_status vmhmc_validate(const vmhmc_validate_config* config, vmhmc_report** out)
{
    VMHMC_REQUIRE(config);
    VMHMC_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        vmhmc::ValidationConfig validation;
        validation.kappas = to_vector(config->kappas, config->kappa_count);
        validation.n = config->n;
        validation.seed = config->seed;
        validation.travel_time = config->travel_time;
        validation.dynamics_tuples = config->dynamics_tuples;
        validation.oracle_tuples = config->oracle_tuples;
        validation.inject_fault = config->inject_fault != 0;
        auto handle = std::make_unique<vmhmc_report>();
        handle->report = vmhmc::run_validation(validation);
        *out = handle.release();
    });
}

size_t vmhmc_report_size(const vmhmc_report* report)
{
    return report ? report->report.checks.size() : 0;
}

vmhmc_status vmhmc_report_check(const vmhmc_report* report, size_t index, const char** name,
                                int* passed, double* value, double* threshold)
{
    VMHMC_REQUIRE(report);
    if (index >= report->report.checks.size())
        return fail(VMHMC_ERR_PRECONDITION, "report index out of range");
    const vmhmc::CheckResult& c = report->report.checks[index];
    if (name)
        *name = c.name.c_str();
    if (passed)
        *passed = c.passed ? 1 : 0;
    if (value)
        *value = c.value;
    if (threshold)
        *threshold = c.threshold;
    return VMHMC_OK;
}

int vmhmc_report_all_passed(const vmhmc_report* report)
{
    return report && report->report.all_passed() ? 1 : 0;
}

void vmhmc_report_free(vmhmc_report* report) { delete report; }

} // extern "C"
