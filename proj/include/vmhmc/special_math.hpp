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

#include <numbers>

namespace vmhmc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Parameters of the von Mises distribution: concentration kappa > 0 and
/// location nu in [-pi, pi).
class VonMisesParams {
public:
    /// Throws DomainError unless kappa > 0 is finite and nu is finite. nu is
    /// canonicalized into [-pi, pi).
    VonMisesParams(double kappa, double nu = 0.0);

    double kappa() const noexcept { return kappa_; }
    double nu() const noexcept { return nu_; }

private:
    double kappa_;
    double nu_;
};

/// Modified Bessel function of the first kind, order 0. Power series below
/// x = 15, asymptotic expansion above.
double bessel_i0(double x);

/// Order-1 counterpart of bessel_i0, same branch layout.
double bessel_i1(double x);

/// log(I0(x)), evaluated without forming I0 for large x.
double log_bessel_i0(double x);

/// E[cos(x - nu)] = I1(kappa) / I0(kappa).
double mean_resultant_length(double kappa);

double vm_log_density(double x, const VonMisesParams& params);
double vm_density(double x, const VonMisesParams& params);

/// Maps x onto the half-open interval [-pi, pi).
double wrap_angle(double x);

/// Probability mass of [lo, hi] under the density, by composite Simpson.
/// Requires -pi <= lo < hi <= pi.
double bin_probability(double lo, double hi, const VonMisesParams& params);

namespace detail {

inline constexpr double kBesselCrossover = 15.0;

/// Power series for I_order(x), order in {0, 1}.
double bessel_i_series(int order, double x);

/// e^{-x} I_order(x) from the large-argument expansion, order in {0, 1}.
double bessel_i_asymptotic_scaled(int order, double x);

} // namespace detail

} // namespace vmhmc
