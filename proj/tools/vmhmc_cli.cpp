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

// Command-line front end. Talks to the library only through vmhmc/vmhmc.h.
//
// Exit codes: 0 ok, 1 I/O or internal failure, 2 usage, 3 validation failed.

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vmhmc/vmhmc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

constexpr const char* kSeedEnv = "VMHMC_SEED";

int exit_code_for(vmhmc_status status)
{
    switch (status) {
    case VMHMC_OK:
        return kExitOk;
    case VMHMC_ERR_DOMAIN:
    case VMHMC_ERR_CONFIG:
    case VMHMC_ERR_PRECONDITION:
        return kExitUsage;
    default:
        return kExitIo;
    }
}

int report_failure(vmhmc_status status)
{
    std::fprintf(stderr, "vmhmc: %s: %s\n", vmhmc_status_string(status), vmhmc_last_error());
    return exit_code_for(status);
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using SamplesPtr = std::unique_ptr<vmhmc_samples, Deleter<vmhmc_samples, vmhmc_samples_free>>;
using SweepPtr = std::unique_ptr<vmhmc_sweep, Deleter<vmhmc_sweep, vmhmc_sweep_free>>;
using ReportPtr = std::unique_ptr<vmhmc_report, Deleter<vmhmc_report, vmhmc_report_free>>;

struct Output {
    std::FILE* file = stdout;
    bool owned = false;

    explicit Output(const std::string& path)
    {
        if (!path.empty() && path != "-") {
            file = std::fopen(path.c_str(), "wb");
            owned = file != nullptr;
        }
    }
    ~Output()
    {
        if (owned)
            std::fclose(file);
    }
    Output(const Output&) = delete;
    Output& operator=(const Output&) = delete;

    bool ok() const { return file != nullptr; }
};

struct GridFlags {
    double lo;
    double hi;
    int count;
};

void add_grid_flags(CLI::App* cmd, const std::string& name, GridFlags& grid)
{
    cmd->add_option("--" + name + "-min", grid.lo, "Smallest " + name + " in the grid")
        ->capture_default_str();
    cmd->add_option("--" + name + "-max", grid.hi, "Largest " + name + " in the grid")
        ->capture_default_str();
    cmd->add_option("--" + name + "-count", grid.count, "Number of " + name + " grid points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

vmhmc_status build_grid(const GridFlags& flags, bool logarithmic, std::vector<double>& out)
{
    out.assign(static_cast<std::size_t>(flags.count), 0.0);
    return logarithmic ? vmhmc_log_grid(flags.lo, flags.hi, flags.count, out.data())
                       : vmhmc_linear_grid(flags.lo, flags.hi, flags.count, out.data());
}

vmhmc_trajectory_mode parse_mode(const std::string& name)
{
    return name == "segments" ? VMHMC_TRAJECTORY_SEGMENT_LOOP : VMHMC_TRAJECTORY_CLOSED_FORM;
}

// ---- sample ----

struct SampleFlags {
    double kappa = 0.0;
    double nu = 0.0;
    double travel_time = -1.0;
    std::int64_t n = 100000;
    std::int64_t burn_in = 1000;
    std::uint64_t seed = 0;
    std::string method = "hmc";
    std::string trajectory = "closed-form";
    std::string out;
};

int run_sample(const SampleFlags& f)
{
    vmhmc_chain_config config;
    vmhmc_chain_config_init(&config);
    config.kappa = f.kappa;
    config.nu = f.nu;
    config.n = f.n;
    config.burn_in = f.burn_in;
    config.seed = f.seed;
    config.mode = parse_mode(f.trajectory);
    if (f.method == "hmc") {
        if (f.travel_time < 0.0) {
            std::fprintf(stderr, "vmhmc sample: --T is required with --method hmc\n");
            return kExitUsage;
        }
        config.method = VMHMC_METHOD_HMC;
        config.travel_time = f.travel_time;
    } else {
        config.method = VMHMC_METHOD_BEST_FISHER;
    }

    vmhmc_samples* raw = nullptr;
    if (const vmhmc_status st = vmhmc_run_chain(&config, &raw); st != VMHMC_OK)
        return report_failure(st);
    const SamplesPtr samples(raw);
    if (const vmhmc_status st = vmhmc_samples_write(samples.get(), f.out.empty() ? nullptr
                                                                               : f.out.c_str());
        st != VMHMC_OK)
        return report_failure(st);
    if (config.method == VMHMC_METHOD_BEST_FISHER)
        std::fprintf(stderr, "acceptance rate %.6f\n", vmhmc_samples_acceptance_rate(samples.get()));
    return kExitOk;
}

// ---- sweep ----

struct SweepFlags {
    GridFlags kappa{0.1, 20.0, 24};
    GridFlags t{0.0, 2.5 * std::numbers::pi, 64};
    std::int64_t n = 100000;
    std::int64_t burn_in = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    bool timing = false;
    std::string trajectory = "closed-form";
    std::string out;
    std::string json;
};

int run_sweep(const SweepFlags& f)
{
    std::vector<double> kappas;
    std::vector<double> times;
    if (const vmhmc_status st = build_grid(f.kappa, true, kappas); st != VMHMC_OK)
        return report_failure(st);
    if (const vmhmc_status st = build_grid(f.t, false, times); st != VMHMC_OK)
        return report_failure(st);

    vmhmc_sweep_config config;
    vmhmc_sweep_config_init(&config);
    config.kappa_grid = kappas.data();
    config.kappa_count = kappas.size();
    config.t_grid = times.data();
    config.t_count = times.size();
    config.n = f.n;
    config.burn_in = f.burn_in;
    config.master_seed = f.seed;
    config.threads = f.threads;
    config.record_timing = f.timing ? 1 : 0;
    config.mode = parse_mode(f.trajectory);

    vmhmc_sweep* raw = nullptr;
    if (const vmhmc_status st = vmhmc_run_sweep(&config, &raw); st != VMHMC_OK)
        return report_failure(st);
    const SweepPtr sweep(raw);
    if (const vmhmc_status st =
            vmhmc_sweep_write_csv(sweep.get(), f.out.empty() ? nullptr : f.out.c_str());
        st != VMHMC_OK)
        return report_failure(st);
    if (!f.json.empty()) {
        if (const vmhmc_status st = vmhmc_sweep_write_json(sweep.get(), f.json.c_str());
            st != VMHMC_OK)
            return report_failure(st);
    }
    return kExitOk;
}

// ---- optimal-t ----

struct OptimalFlags {
    std::vector<double> kappas{0.5, 1.0, 4.0, 10.0, 20.0};
    GridFlags t{0.0, 2.5 * std::numbers::pi, 64};
    std::int64_t n = 100000;
    std::int64_t burn_in = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out;
};

int run_optimal(const OptimalFlags& f)
{
    std::vector<double> times;
    if (const vmhmc_status st = build_grid(f.t, false, times); st != VMHMC_OK)
        return report_failure(st);
    Output out(f.out);
    if (!out.ok()) {
        std::fprintf(stderr, "vmhmc: cannot open '%s'\n", f.out.c_str());
        return kExitIo;
    }
    std::fprintf(out.file, "kappa,T_star,ress_at_star,best_grid_T\n");
    for (double kappa : f.kappas) {
        vmhmc_optimal_t best{};
        const vmhmc_status st = vmhmc_find_optimal_t(kappa, times.data(), times.size(), f.n,
                                                     f.burn_in, f.seed, f.threads, &best, nullptr);
        if (st != VMHMC_OK)
            return report_failure(st);
        std::fprintf(out.file, "%.17g,%.17g,%.17g,%.17g\n", kappa, best.t_star, best.ress_at_star,
                     best.best_grid_t);
    }
    return std::ferror(out.file) ? kExitIo : kExitOk;
}

// ---- baseline ----

struct BaselineFlags {
    GridFlags kappa{0.1, 20.0, 24};
    std::int64_t n = 100000;
    std::uint64_t seed = 0;
    std::string out;
};

int run_baseline(const BaselineFlags& f)
{
    std::vector<double> kappas;
    if (const vmhmc_status st = build_grid(f.kappa, true, kappas); st != VMHMC_OK)
        return report_failure(st);
    std::vector<double> rates(kappas.size());
    std::vector<double> ress(kappas.size());
    if (const vmhmc_status st = vmhmc_baseline_efficiency(kappas.data(), kappas.size(), f.n,
                                                          f.seed, rates.data(), ress.data());
        st != VMHMC_OK)
        return report_failure(st);
    Output out(f.out);
    if (!out.ok()) {
        std::fprintf(stderr, "vmhmc: cannot open '%s'\n", f.out.c_str());
        return kExitIo;
    }
    std::fprintf(out.file, "kappa,acceptance_rate,ress_sin\n");
    for (std::size_t i = 0; i < kappas.size(); ++i)
        std::fprintf(out.file, "%.17g,%.17g,%.17g\n", kappas[i], rates[i], ress[i]);
    return std::ferror(out.file) ? kExitIo : kExitOk;
}

// ---- validate ----

struct ValidateFlags {
    std::vector<double> kappas{0.5, 4.0, 20.0};
    std::int64_t n = 100000;
    std::uint64_t seed = 0;
    double travel_time = 2.32;
    int tuples = 1000;
    int oracle_tuples = 100;
    bool inject_fault = false;
};

int run_validate(const ValidateFlags& f)
{
    vmhmc_validate_config config;
    vmhmc_validate_config_init(&config);
    config.kappas = f.kappas.data();
    config.kappa_count = f.kappas.size();
    config.n = f.n;
    config.seed = f.seed;
    config.travel_time = f.travel_time;
    config.dynamics_tuples = f.tuples;
    config.oracle_tuples = f.oracle_tuples;
    config.inject_fault = f.inject_fault ? 1 : 0;

    vmhmc_report* raw = nullptr;
    if (const vmhmc_status st = vmhmc_validate(&config, &raw); st != VMHMC_OK)
        return report_failure(st);
    const ReportPtr report(raw);

    std::printf("%-28s %-6s %14s %14s\n", "check", "result", "value", "threshold");
    for (std::size_t i = 0; i < vmhmc_report_size(report.get()); ++i) {
        const char* name = nullptr;
        int passed = 0;
        double value = 0.0;
        double threshold = 0.0;
        vmhmc_report_check(report.get(), i, &name, &passed, &value, &threshold);
        std::printf("%-28s %-6s %14.6g %14.6g\n", name, passed ? "PASS" : "FAIL", value,
                    threshold);
    }
    const bool ok = vmhmc_report_all_passed(report.get()) != 0;
    std::printf("%s\n", ok ? "all checks passed" : "validation FAILED");
    return ok ? kExitOk : kExitValidation;
}

void add_seed(CLI::App* cmd, std::uint64_t& seed)
{
    cmd->add_option("--seed", seed, "Master seed (env " + std::string(kSeedEnv) + ")")
        ->envname(kSeedEnv)
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact HMC sampler for the von Mises distribution"};
    app.require_subcommand(1);
    app.set_version_flag("--version", vmhmc_version());

    SampleFlags sample;
    auto* cmd_sample = app.add_subcommand("sample", "Draw samples, one angle per line");
    cmd_sample->add_option("--kappa", sample.kappa, "Concentration (> 0)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sample->add_option("--nu", sample.nu, "Location")->capture_default_str();
    cmd_sample->add_option("--T", sample.travel_time, "HMC travel time (>= 0)")
        ->check(CLI::NonNegativeNumber);
    cmd_sample->add_option("--n", sample.n, "Number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_sample->add_option("--burn-in", sample.burn_in, "Discarded HMC steps")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_seed(cmd_sample, sample.seed);
    cmd_sample->add_option("--method", sample.method, "Sampler")
        ->check(CLI::IsMember({"hmc", "best-fisher"}))
        ->capture_default_str();
    cmd_sample->add_option("--trajectory", sample.trajectory, "Trajectory solver")
        ->check(CLI::IsMember({"closed-form", "segments"}))
        ->capture_default_str();
    cmd_sample->add_option("--out", sample.out, "Output file (default stdout)");

    SweepFlags sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "RESS over a (kappa, T) grid, CSV output");
    add_grid_flags(cmd_sweep, "kappa", sweep.kappa);
    add_grid_flags(cmd_sweep, "T", sweep.t);
    cmd_sweep->add_option("--n", sweep.n, "Samples per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_sweep->add_option("--burn-in", sweep.burn_in, "Discarded steps per cell")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_seed(cmd_sweep, sweep.seed);
    cmd_sweep->add_option("--threads", sweep.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_sweep->add_flag("--timing", sweep.timing,
                        "Record per-cell chain wall time (runs single-threaded)");
    cmd_sweep->add_option("--trajectory", sweep.trajectory, "Trajectory solver")
        ->check(CLI::IsMember({"closed-form", "segments"}))
        ->capture_default_str();
    cmd_sweep->add_option("--out", sweep.out, "CSV output file (default stdout)");
    cmd_sweep->add_option("--json", sweep.json, "Also write the records as a JSON array");

    OptimalFlags optimal;
    auto* cmd_optimal = app.add_subcommand("optimal-t", "Travel time maximizing RESS of sin(x)");
    cmd_optimal->add_option("--kappa", optimal.kappas, "Concentrations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_grid_flags(cmd_optimal, "T", optimal.t);
    cmd_optimal->add_option("--n", optimal.n, "Samples per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_optimal->add_option("--burn-in", optimal.burn_in, "Discarded steps")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_seed(cmd_optimal, optimal.seed);
    cmd_optimal->add_option("--threads", optimal.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_optimal->add_option("--out", optimal.out, "CSV output file (default stdout)");

    BaselineFlags baseline;
    auto* cmd_baseline =
        app.add_subcommand("baseline", "Best-Fisher acceptance rate over a kappa grid");
    add_grid_flags(cmd_baseline, "kappa", baseline.kappa);
    cmd_baseline->add_option("--n", baseline.n, "Draws per kappa")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_seed(cmd_baseline, baseline.seed);
    cmd_baseline->add_option("--out", baseline.out, "CSV output file (default stdout)");

    ValidateFlags validate;
    auto* cmd_validate = app.add_subcommand("validate", "Run the self-validation checks");
    cmd_validate->add_option("--kappa", validate.kappas, "Concentrations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_validate->add_option("--n", validate.n, "Chain length per kappa")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_seed(cmd_validate, validate.seed);
    cmd_validate->add_option("--T", validate.travel_time, "HMC travel time")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_validate->add_option("--tuples", validate.tuples, "Random trajectories for dynamics checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_validate->add_option("--oracle-tuples", validate.oracle_tuples,
                             "Trajectories checked against the brute-force integrator")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    // test hook: corrupts the momentum update so the checks must fail
    cmd_validate->add_flag("--inject-fault", validate.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*cmd_sample)
        return run_sample(sample);
    if (*cmd_sweep)
        return run_sweep(sweep);
    if (*cmd_optimal)
        return run_optimal(optimal);
    if (*cmd_baseline)
        return run_baseline(baseline);
    return run_validate(validate);
}
