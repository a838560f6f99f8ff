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

#include "vmhmc/special_math.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vmhmc/error.hpp"

namespace vmhmc {

namespace {

void require_nonnegative_finite(double x, const char* what)
{
    if (!std::isfinite(x) || x < 0.0)
        throw DomainError(std::string(what) + ": argument must be finite and >= 0, got " +
                          std::to_string(x));
}

// Upper bound on the Simpson subinterval width; keeps every bin of any
// partition accurate to ~1e-13 for kappa up to 20.
constexpr double kMaxSimpsonStep = 5e-4;
constexpr int kMinSimpsonIntervals = 256;

} // namespace

VonMisesParams::VonMisesParams(double kappa, double nu)
{
    if (!std::isfinite(kappa) || kappa <= 0.0)
        throw DomainError("von Mises kappa must be finite and > 0, got " + std::to_string(kappa));
    if (!std::isfinite(nu))
        throw DomainError("von Mises nu must be finite");
    kappa_ = kappa;
    nu_ = wrap_angle(nu);
}

namespace detail {

double bessel_i_series(int order, double x)
{
    const double half = 0.5 * x;
    const double q = half * half;
    double term = order == 0 ? 1.0 : half;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum;
}

double bessel_i_asymptotic_scaled(int order, double x)
{
    const double mu = 4.0 * order * order;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = -term * (mu - odd * odd) / (8.0 * k * x);
        // asymptotic series: stop before the terms start growing
        if (std::abs(next) >= std::abs(term))
            break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
    }
    return sum / std::sqrt(kTwoPi * x);
}

} // namespace detail

double bessel_i0(double x)
{
    require_nonnegative_finite(x, "bessel_i0");
    if (x < detail::kBesselCrossover)
        return detail::bessel_i_series(0, x);
    return std::exp(x) * detail::bessel_i_asymptotic_scaled(0, x);
}

double bessel_i1(double x)
{
    require_nonnegative_finite(x, "bessel_i1");
    if (x < detail::kBesselCrossover)
        return detail::bessel_i_series(1, x);
    return std::exp(x) * detail::bessel_i_asymptotic_scaled(1, x);
}

double log_bessel_i0(double x)
{
    require_nonnegative_finite(x, "log_bessel_i0");
    if (x < detail::kBesselCrossover)
        return std::log(detail::bessel_i_series(0, x));
    return x + std::log(detail::bessel_i_asymptotic_scaled(0, x));
}

double mean_resultant_length(double kappa)
{
    if (!std::isfinite(kappa) || kappa <= 0.0)
        throw DomainError("mean_resultant_length: kappa must be finite and > 0");
    if (kappa < detail::kBesselCrossover)
        return detail::bessel_i_series(1, kappa) / detail::bessel_i_series(0, kappa);
    return detail::bessel_i_asymptotic_scaled(1, kappa) /
           detail::bessel_i_asymptotic_scaled(0, kappa);
}

double vm_log_density(double x, const VonMisesParams& params)
{
    const double kappa = params.kappa();
    return kappa * std::cos(x - params.nu()) - (std::log(kTwoPi) + log_bessel_i0(kappa));
}

double vm_density(double x, const VonMisesParams& params)
{
    return std::exp(vm_log_density(x, params));
}

double wrap_angle(double x)
{
    if (!std::isfinite(x))
        throw DomainError("wrap_angle: argument must be finite");
    if (x >= -kPi && x < kPi)
        return x;
    // remainder() is exact, so the result differs from x by a multiple of kTwoPi
    double r = std::remainder(x, kTwoPi);
    if (r >= kPi)
        r -= kTwoPi;
    return r;
}

double bin_probability(double lo, double hi, const VonMisesParams& params)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo < -kPi || hi > kPi || !(lo < hi))
        throw DomainError("bin_probability: need -pi <= lo < hi <= pi");

    const double kappa = params.kappa();
    const double nu = params.nu();
    const double log_norm = std::log(kTwoPi) + log_bessel_i0(kappa);
    auto density = [&](double x) { return std::exp(kappa * std::cos(x - nu) - log_norm); };

    const double width = hi - lo;
    const double step_cap = kMaxSimpsonStep * std::min(1.0, std::sqrt(20.0 / kappa));
    int n = std::max(kMinSimpsonIntervals, static_cast<int>(std::ceil(width / step_cap)));
    n += n % 2;
    const double h = width / n;

    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < n; ++i) {
        const double v = density(lo + i * h);
        if (i % 2 == 1)
            odd += v;
        else
            even += v;
    }
    const double integral = h / 3.0 * (density(lo) + density(hi) + 4.0 * odd + 2.0 * even);
    return std::clamp(integral, 0.0, 1.0);
}

} // namespace vmhmc
