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

#include "vmhmc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vmhmc/error.hpp"
#include "vmhmc/special_math.hpp"

namespace vmhmc {

namespace {

void check_kappa(double kappa)
{
    if (!std::isfinite(kappa) || kappa <= 0.0)
        throw DomainError("kappa must be finite and > 0, got " + std::to_string(kappa));
}

void check_travel_time(double T)
{
    if (!std::isfinite(T) || T < 0.0)
        throw PreconditionError("travel time must be finite and >= 0, got " + std::to_string(T));
}

void check_state(PhasePoint state)
{
    if (!std::isfinite(state.x) || !std::isfinite(state.p))
        throw PreconditionError("phase point must be finite");
}

Direction direction_of(double p) { return p > 0.0 ? Direction::forward : Direction::backward; }

// Direction of the force -kappa sin(x) at a turning point.
Direction force_direction(double x)
{
    return std::sin(x) > 0.0 ? Direction::backward : Direction::forward;
}

bool at_equilibrium(double x) { return std::abs(std::sin(x)) <= kEquilibriumTolerance; }

// Half width a in [0, pi] of the allowed band |wrap(x)| <= a, where
// cos(a) = cos(x0) - |p0| / kappa. The half-angle form stays accurate for
// small oscillations where arccos(c) loses digits.
double band_half_width(double x0, double p0, double kappa)
{
    const double half = std::sin(0.5 * x0);
    const double v = half * half + std::abs(p0) / (2.0 * kappa);
    return 2.0 * std::asin(std::sqrt(std::min(v, 1.0)));
}

// Initial direction, or nullopt-like false when the particle is frozen.
bool initial_direction(PhasePoint state, Direction& s)
{
    if (state.p != 0.0) {
        s = direction_of(state.p);
        return true;
    }
    if (at_equilibrium(state.x))
        return false;
    s = force_direction(state.x);
    return true;
}

Direction flip_at_turning_point(double x, Direction s)
{
    const Direction next = reversed(s);
    if (force_direction(x) != next)
        throw InvariantError("turning point at x = " + std::to_string(x) +
                             " does not reverse the direction of travel");
    return next;
}

// Crossings this close past T are rounding noise in t1 and still count, so a
// trajectory asked to stop exactly at a turning point reports it.
double crossing_slack(double T)
{
    return 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, T);
}

struct FastOutcome {
    PhasePoint end;
    std::int64_t q = 0;
    double first_crossing = 0.0;
    double half_period = 0.0;
};

FastOutcome advance_fast(PhasePoint state, double kappa, double T, detail::DynamicsFault fault)
{
    check_kappa(kappa);
    check_travel_time(T);
    check_state(state);

    FastOutcome out;
    out.end = state;
    Direction s{};
    if (T == 0.0 || !initial_direction(state, s))
        return out;

    if (!crossing_exists(state.x, state.p, kappa)) {
        out.end = detail::evolve_segment(state, s, T, kappa, fault);
        return out;
    }
    const double t1 = first_crossing_time(state.x, state.p, s, kappa);
    const double slack = crossing_slack(T);
    if (t1 > T + slack) {
        out.end = detail::evolve_segment(state, s, T, kappa, fault);
        return out;
    }

    const double xz = state.x + to_double(s) * t1;
    out.q = 1;
    out.first_crossing = t1;
    if (at_equilibrium(xz)) {
        out.end = {xz, 0.0};
        return out;
    }
    const Direction s1 = flip_at_turning_point(xz, s);

    // Between turning points at +-|wrap(xz)| the particle moves at unit speed.
    const double h = 2.0 * std::abs(wrap_angle(xz));
    out.half_period = h;
    const double rest = std::max(T - t1, 0.0);
    double residual = std::fmod(rest, h);
    auto extra = static_cast<std::int64_t>(std::llround((rest - residual) / h));
    if (h - residual <= slack) {
        residual = 0.0;
        ++extra;
    }
    out.q += extra;

    const bool even = extra % 2 == 0;
    const double turning_point = even ? xz : xz + to_double(s1) * h;
    const Direction last = even ? s1 : s;
    out.end = detail::evolve_segment({turning_point, 0.0}, last, residual, kappa, fault);
    return out;
}

} // namespace

double hamiltonian(PhasePoint state, double kappa)
{
    return -kappa * std::cos(state.x) + std::abs(state.p);
}

bool crossing_exists(double x0, double p0, double kappa)
{
    check_kappa(kappa);
    return std::cos(x0) - std::abs(p0) / kappa >= -1.0;
}

double first_crossing_time(double x0, double p0, Direction s, double kappa)
{
    if (!crossing_exists(x0, p0, kappa))
        throw PreconditionError("first_crossing_time: momentum never reaches zero");

    // Work in the frame y = s x so that travel is always in +y.
    const double w = wrap_angle(to_double(s) * x0);
    if (p0 == 0.0) {
        // Roots of cos(y) = cos(w) are +-w + 2 pi k; skip y = w itself.
        if (w < 0.0)
            return -2.0 * w;
        return kTwoPi - 2.0 * w;
    }
    const double a = band_half_width(x0, p0, kappa);
    return std::max(a - w, 0.0);
}

PhasePoint evolve_segment(PhasePoint state, Direction s, double dt, double kappa)
{
    return detail::evolve_segment(state, s, dt, kappa, {});
}

TrajectoryResult evolve(PhasePoint state, double kappa, double T)
{
    check_kappa(kappa);
    check_travel_time(T);
    check_state(state);

    TrajectoryResult result;
    result.h_start = hamiltonian(state, kappa);
    result.end = state;

    Direction s{};
    if (T > 0.0 && initial_direction(state, s)) {
        PhasePoint cur = state;
        double elapsed = 0.0;
        for (std::int64_t segment = 0;; ++segment) {
            if (segment >= kMaxSegments)
                throw InvariantError("evolve: segment cap exceeded before consuming T");
            const double remaining = std::max(T - elapsed, 0.0);
            if (!crossing_exists(cur.x, cur.p, kappa)) {
                cur = evolve_segment(cur, s, remaining, kappa);
                break;
            }
            const double tz = first_crossing_time(cur.x, cur.p, s, kappa);
            if (tz > remaining + crossing_slack(T)) {
                cur = evolve_segment(cur, s, remaining, kappa);
                break;
            }
            cur.x += to_double(s) * tz;
            cur.p = 0.0;
            elapsed += tz;
            result.crossing_times.push_back(elapsed);
            ++result.q;
            if (at_equilibrium(cur.x))
                break;
            s = flip_at_turning_point(cur.x, s);
        }
        result.end = cur;
    }
    result.h_end = hamiltonian(result.end, kappa);
    return result;
}

TrajectoryResult evolve_fast(PhasePoint state, double kappa, double T)
{
    return detail::evolve_fast(state, kappa, T, {}, true);
}

PhasePoint evolve_endpoint(PhasePoint state, double kappa, double T)
{
    return advance_fast(state, kappa, T, {}).end;
}

PhasePoint oracle_integrate(PhasePoint state, double kappa, double T, double step)
{
    check_kappa(kappa);
    check_travel_time(T);
    check_state(state);
    if (!std::isfinite(step) || step <= 0.0)
        throw PreconditionError("oracle_integrate: step must be > 0");

    Direction s{};
    if (T == 0.0 || !initial_direction(state, s))
        return state;

    auto force = [kappa](double x) { return -kappa * std::sin(x); };
    double x = state.x;
    double p = state.p;
    double t = 0.0;
    double f0 = force(x);
    while (t < T) {
        const double h = std::min(step, T - t);
        const double sd = to_double(s);
        // RK4 with a time-only right-hand side (x advances at unit speed).
        auto momentum_after = [&](double tau) {
            return p + tau / 6.0 * (f0 + 4.0 * force(x + sd * 0.5 * tau) + force(x + sd * tau));
        };
        const double p_next = momentum_after(h);
        if (sd * p_next < 0.0) {
            double lo = 0.0;
            double hi = h;
            for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                if (sd * momentum_after(mid) < 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            const double tau = hi;
            x += sd * tau;
            p = 0.0;
            t += tau;
            if (at_equilibrium(x))
                return {x, 0.0};
            s = reversed(s);
            f0 = force(x);
            continue;
        }
        x += sd * h;
        p = p_next;
        t += h;
        f0 = force(x);
    }
    return {x, p};
}

namespace detail {

PhasePoint evolve_segment(PhasePoint state, Direction s, double dt, double kappa,
                          DynamicsFault fault)
{
    const double sd = to_double(s);
    const double tail = fault.corrupt_momentum ? -1.0 : 1.0;
    const double x_next = state.x + sd * dt;
    return {x_next,
            state.p - kappa * sd * std::cos(state.x) + tail * kappa * sd * std::cos(x_next)};
}

TrajectoryResult evolve_fast(PhasePoint state, double kappa, double T, DynamicsFault fault,
                             bool record_crossings)
{
    const FastOutcome outcome = advance_fast(state, kappa, T, fault);
    TrajectoryResult result;
    result.end = outcome.end;
    result.q = outcome.q;
    result.h_start = hamiltonian(state, kappa);
    result.h_end = hamiltonian(outcome.end, kappa);
    if (record_crossings && outcome.q > 0) {
        const auto count =
            std::min<std::size_t>(static_cast<std::size_t>(outcome.q), kMaxRecordedCrossings);
        result.crossing_times.reserve(count);
        for (std::size_t k = 0; k < count; ++k)
            result.crossing_times.push_back(outcome.first_crossing +
                                            static_cast<double>(k) * outcome.half_period);
    }
    return result;
}

} // namespace detail

} // namespace vmhmc
