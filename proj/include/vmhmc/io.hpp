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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vmhmc/bench.hpp"

namespace vmhmc {

inline constexpr const char* kSweepCsvHeader =
    "kappa,T,n,seed,ress_sin,tau_sin,ress_cos,tau_cos,wall_seconds";

/// 17 significant digits; round-trips every double.
std::string format_real(double v);

/// One angle per line.
void write_samples(std::span<const double> samples, std::ostream& out);
void write_samples(std::span<const double> samples, const std::string& path);

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);
void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path);

/// JSON array mirroring the CSV columns.
void write_sweep_json(const std::vector<SweepRecord>& records, std::ostream& out);
void write_sweep_json(const std::vector<SweepRecord>& records, const std::string& path);

} // namespace vmhmc
