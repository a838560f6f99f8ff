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

#include "vmhmc/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "vmhmc/error.hpp"

namespace vmhmc {

namespace {

template <typename Writer>
void write_file(const std::string& path, Writer writer)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    writer(out);
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

} // namespace

std::string format_real(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_samples(std::span<const double> samples, std::ostream& out)
{
    for (double x : samples)
        out << format_real(x) << '\n';
}

void write_samples(std::span<const double> samples, const std::string& path)
{
    write_file(path, [&](std::ostream& out) { write_samples(samples, out); });
}

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out)
{
    out << kSweepCsvHeader << '\n';
    for (const SweepRecord& r : records) {
        out << format_real(r.kappa) << ',' << format_real(r.T) << ',' << r.n << ',' << r.seed
            << ',' << format_real(r.ress_sin) << ',' << format_real(r.tau_sin) << ','
            << format_real(r.ress_cos) << ',' << format_real(r.tau_cos) << ','
            << format_real(r.wall_seconds) << '\n';
    }
}

void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path)
{
    write_file(path, [&](std::ostream& out) { write_sweep_csv(records, out); });
}

void write_sweep_json(const std::vector<SweepRecord>& records, std::ostream& out)
{
    auto doc = nlohmann::json::array();
    for (const SweepRecord& r : records) {
        doc.push_back({{"kappa", r.kappa},
                       {"T", r.T},
                       {"n", r.n},
                       {"seed", r.seed},
                       {"ress_sin", r.ress_sin},
                       {"tau_sin", r.tau_sin},
                       {"ress_cos", r.ress_cos},
                       {"tau_cos", r.tau_cos},
                       {"wall_seconds", r.wall_seconds}});
    }
    out << doc.dump(2) << '\n';
}

void write_sweep_json(const std::vector<SweepRecord>& records, const std::string& path)
{
    write_file(path, [&](std::ostream& out) { write_sweep_json(records, out); });
}

} // namespace vmhmc
