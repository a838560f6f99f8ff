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

#ifndef VMHMC_VMHMC_H
#define VMHMC_VMHMC_H

/* C interface to the vmhmc library. Every call returns a vmhmc_status; on
 * failure vmhmc_last_error() holds a message for the calling thread. Result
 * objects are opaque handles released with the matching *_free call. */

#include <stddef.h>
#include <stdint.h>

#ifndef VMHMC_EXPORT
#define VMHMC_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vmhmc_status {
    VMHMC_OK = 0,
    VMHMC_ERR_DOMAIN = 1,
    VMHMC_ERR_PRECONDITION = 2,
    VMHMC_ERR_INVARIANT = 3,
    VMHMC_ERR_DEGENERATE = 4,
    VMHMC_ERR_CONFIG = 5,
    VMHMC_ERR_IO = 6,
    VMHMC_ERR_NULL_ARGUMENT = 7,
    VMHMC_ERR_INTERNAL = 8
} vmhmc_status;

typedef enum vmhmc_method { VMHMC_METHOD_HMC = 0, VMHMC_METHOD_BEST_FISHER = 1 } vmhmc_method;

typedef enum vmhmc_trajectory_mode {
    VMHMC_TRAJECTORY_CLOSED_FORM = 0,
    VMHMC_TRAJECTORY_SEGMENT_LOOP = 1
} vmhmc_trajectory_mode;

typedef struct vmhmc_samples vmhmc_samples;
typedef struct vmhmc_sweep vmhmc_sweep;
typedef struct vmhmc_report vmhmc_report;

VMHMC_EXPORT const char* vmhmc_version(void);
VMHMC_EXPORT const char* vmhmc_status_string(vmhmc_status status);
/* Message of the most recent failure on this thread ("" if none). */
VMHMC_EXPORT const char* vmhmc_last_error(void);

/* ---- special functions ---- */
VMHMC_EXPORT vmhmc_status vmhmc_bessel_i0(double x, double* out);
VMHMC_EXPORT vmhmc_status vmhmc_mean_resultant_length(double kappa, double* out);
VMHMC_EXPORT vmhmc_status vmhmc_log_density(double x, double kappa, double nu, double* out);
VMHMC_EXPORT vmhmc_status vmhmc_wrap_angle(double x, double* out);

/* ---- dynamics ---- */
typedef struct vmhmc_trajectory {
    double x;
    double p;
    int64_t crossings;
    double h_start;
    double h_end;
} vmhmc_trajectory;

/* Exact endpoint after travel time t from (x, p); closed-form fast path. */
VMHMC_EXPORT vmhmc_status vmhmc_evolve(double x, double p, double kappa, double t,
                                       vmhmc_trajectory* out);

/* ---- chains ---- */
typedef struct vmhmc_chain_config {
    double kappa;
    double nu;
    double travel_time; /* ignored by Best-Fisher */
    int64_t n;
    int64_t burn_in;
    uint64_t seed;
    int has_x_init; /* nonzero: start at x_init instead of nu */
    double x_init;
    vmhmc_method method;
    vmhmc_trajectory_mode mode;
} vmhmc_chain_config;

/* kappa 1, nu 0, T 0, n 1, burn-in 1000, seed 0, HMC, closed form. */
VMHMC_EXPORT void vmhmc_chain_config_init(vmhmc_chain_config* config);
VMHMC_EXPORT vmhmc_status vmhmc_run_chain(const vmhmc_chain_config* config,
                                          vmhmc_samples** out);
VMHMC_EXPORT size_t vmhmc_samples_size(const vmhmc_samples* samples);
VMHMC_EXPORT const double* vmhmc_samples_data(const vmhmc_samples* samples);
VMHMC_EXPORT double vmhmc_samples_acceptance_rate(const vmhmc_samples* samples);
VMHMC_EXPORT double vmhmc_samples_wall_seconds(const vmhmc_samples* samples);
/* One angle per line, 17 significant digits. path NULL or "-" means stdout. */
VMHMC_EXPORT vmhmc_status vmhmc_samples_write(const vmhmc_samples* samples, const char* path);
VMHMC_EXPORT void vmhmc_samples_free(vmhmc_samples* samples);

/* ---- diagnostics ---- */
typedef struct vmhmc_ess {
    double tau;
    double ress;
    size_t cutoff;
} vmhmc_ess;

VMHMC_EXPORT vmhmc_status vmhmc_ress(const double* series, size_t length, vmhmc_ess* out);

/* ---- sweeps ---- */
typedef struct vmhmc_sweep_config {
    const double* kappa_grid;
    size_t kappa_count;
    const double* t_grid;
    size_t t_count;
    int64_t n;
    int64_t burn_in;
    uint64_t master_seed;
    int threads;
    int record_timing; /* nonzero: fill wall_seconds (forces one thread) */
    vmhmc_trajectory_mode mode;
} vmhmc_sweep_config;

typedef struct vmhmc_sweep_record {
    double kappa;
    double t;
    int64_t n;
    uint64_t seed;
    double ress_sin;
    double tau_sin;
    double ress_cos;
    double tau_cos;
    double wall_seconds;
} vmhmc_sweep_record;

/* Default grids (24 kappa, 64 T), n 1e5, burn-in 1000, one thread. The grid
 * pointers refer to static storage owned by the library. */
VMHMC_EXPORT void vmhmc_sweep_config_init(vmhmc_sweep_config* config);
VMHMC_EXPORT vmhmc_status vmhmc_run_sweep(const vmhmc_sweep_config* config, vmhmc_sweep** out);
VMHMC_EXPORT size_t vmhmc_sweep_size(const vmhmc_sweep* sweep);
VMHMC_EXPORT vmhmc_status vmhmc_sweep_record_at(const vmhmc_sweep* sweep, size_t index,
                                                vmhmc_sweep_record* out);
/* path NULL or "-" means stdout. */
VMHMC_EXPORT vmhmc_status vmhmc_sweep_write_csv(const vmhmc_sweep* sweep, const char* path);
VMHMC_EXPORT vmhmc_status vmhmc_sweep_write_json(const vmhmc_sweep* sweep, const char* path);
VMHMC_EXPORT void vmhmc_sweep_free(vmhmc_sweep* sweep);

/* Fills `count` evenly spaced (linear) or log-spaced values into out. */
VMHMC_EXPORT vmhmc_status vmhmc_linear_grid(double lo, double hi, int count, double* out);
VMHMC_EXPORT vmhmc_status vmhmc_log_grid(double lo, double hi, int count, double* out);

typedef struct vmhmc_optimal_t {
    double t_star;
    double ress_at_star;
    double best_grid_t;
} vmhmc_optimal_t;

/* ress_curve may be NULL; otherwise it receives t_count values. */
VMHMC_EXPORT vmhmc_status vmhmc_find_optimal_t(double kappa, const double* t_grid,
                                               size_t t_count, int64_t n, int64_t burn_in,
                                               uint64_t seed, int threads, vmhmc_optimal_t* out,
                                               double* ress_curve);

/* acceptance_rates and ress_sin (either may be NULL) receive kappa_count values. */
VMHMC_EXPORT vmhmc_status vmhmc_baseline_efficiency(const double* kappa_grid,
                                                    size_t kappa_count, int64_t n,
                                                    uint64_t seed, double* acceptance_rates,
                                                    double* ress_sin);

/* ---- validation ---- */
typedef struct vmhmc_validate_config {
    const double* kappas;
    size_t kappa_count;
    int64_t n;
    uint64_t seed;
    double travel_time;
    int dynamics_tuples;
    int oracle_tuples;
    int inject_fault;
} vmhmc_validate_config;

/* kappas {0.5, 4, 20}, n 1e5, T 2.32, 1000 dynamics tuples, 100 oracle tuples. */
VMHMC_EXPORT void vmhmc_validate_config_init(vmhmc_validate_config* config);
VMHMC_EXPORT vmhmc_status vmhmc_validate(const vmhmc_validate_config* config,
                                         vmhmc_report** out);
VMHMC_EXPORT size_t vmhmc_report_size(const vmhmc_report* report);
/* Pointers stay valid until vmhmc_report_free. */
VMHMC_EXPORT vmhmc_status vmhmc_report_check(const vmhmc_report* report, size_t index,
                                             const char** name, int* passed, double* value,
                                             double* threshold);
VMHMC_EXPORT int vmhmc_report_all_passed(const vmhmc_report* report);
VMHMC_EXPORT void vmhmc_report_free(vmhmc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VMHMC_VMHMC_H */
