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
#include <vector>

namespace vmhmc {

/// Position/momentum pair. Positions are left unwrapped during evolution.
struct PhasePoint {
    double x = 0.0;
    double p = 0.0;
};

/// Travel direction of the particle; with Laplace momentum the speed is 1.
enum class Direction : int { backward = -1, forward = 1 };

constexpr double to_double(Direction s) noexcept { return static_cast<double>(s); }
constexpr Direction reversed(Direction s) noexcept
{
    return s == Direction::forward ? Direction::backward : Direction::forward;
}

struct TrajectoryResult {
    PhasePoint end;
    /// Number of momentum zero crossings (turning points) in (0, T].
    std::int64_t q = 0;
    /// Cumulative times of the turning points, increasing, within (0, T].
    /// evolve_fast stores at most kMaxRecordedCrossings of them; q is always
    /// the full count.
    std::vector<double> crossing_times;
    double h_start = 0.0;
    double h_end = 0.0;
};

inline constexpr std::int64_t kMaxSegments = 1'000'000;
inline constexpr std::size_t kMaxRecordedCrossings = 1u << 16;
/// |sin x| at or below this at a turning point freezes the particle.
inline constexpr double kEquilibriumTolerance = 1e-12;

/// -kappa cos(x) + |p| (additive constant dropped).
double hamiltonian(PhasePoint state, double kappa);

/// True iff cos(x0) - |p0| / kappa >= -1, i.e. the momentum reaches zero.
bool crossing_exists(double x0, double p0, double kappa);

/// Time until the momentum next vanishes when moving in direction s. For
/// p0 == 0 the particle sits at a turning point and the root at t = 0 is
/// excluded. Throws PreconditionError when no crossing exists.
double first_crossing_time(double x0, double p0, Direction s, double kappa);

/// Closed-form flow for time dt without crossing.
PhasePoint evolve_segment(PhasePoint state, Direction s, double dt, double kappa);

/// Exact trajectory for time T, one segment per turning point. Throws
/// InvariantError after kMaxSegments segments.
TrajectoryResult evolve(PhasePoint state, double kappa, double T);

/// Same contract as evolve, with the oscillation after the first turning
/// point resolved in closed form (constant cost in T).
TrajectoryResult evolve_fast(PhasePoint state, double kappa, double T);

/// Endpoint of evolve_fast without building a TrajectoryResult.
PhasePoint evolve_endpoint(PhasePoint state, double kappa, double T);

/// Brute-force reference: RK4 on dp/dt = -kappa sin(x) with x moving at unit
/// speed, bisection on sign changes of p. Independent of the closed forms.
PhasePoint oracle_integrate(PhasePoint state, double kappa, double T, double step);

namespace detail {

/// Test hook: with corrupt_momentum set, the segment update uses the wrong
/// sign on its final cosine term. Used to check that validation catches it.
struct DynamicsFault {
    bool corrupt_momentum = false;
};

TrajectoryResult evolve_fast(PhasePoint state, double kappa, double T, DynamicsFault fault,
                             bool record_crossings);
PhasePoint evolve_segment(PhasePoint state, Direction s, double dt, double kappa,
                          DynamicsFault fault);

} // namespace detail

} // namespace vmhmc
