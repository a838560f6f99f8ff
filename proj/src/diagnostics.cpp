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

#include "vmhmc/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "vmhmc/error.hpp"

namespace vmhmc {

namespace {

struct Centered {
    std::vector<double> values;
    double variance; // biased, lag-0 autocovariance
};

Centered center(std::span<const double> series)
{
    if (series.size() < 4)
        throw PreconditionError("autocorrelation needs at least 4 points");
    const double first = series.front();
    if (std::all_of(series.begin(), series.end(), [first](double v) { return v == first; }))
        throw DegenerateSeriesError("series is constant; autocorrelation undefined");

    const auto n = static_cast<double>(series.size());
    double mean = 0.0;
    for (double v : series)
        mean += v;
    mean /= n;

    Centered c{std::vector<double>(series.size()), 0.0};
    double ss = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        c.values[i] = series[i] - mean;
        ss += c.values[i] * c.values[i];
    }
    c.variance = ss / n;
    if (!(c.variance > 0.0))
        throw DegenerateSeriesError("series has zero variance");
    return c;
}

double autocorrelation_at(const Centered& c, std::size_t lag)
{
    const std::size_t n = c.values.size();
    const double* d = c.values.data();
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i)
        acc += d[i] * d[i + lag];
    return acc / static_cast<double>(n) / c.variance;
}

double scaled_standard_error(std::span<const double> values, double mean)
{
    const auto n = static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    const double variance = ss / n;
    if (variance == 0.0)
        return 0.0;
    double tau = 1.0;
    if (values.size() >= 4) {
        try {
            tau = ress(values).tau;
        } catch (const DegenerateSeriesError&) {
            return 0.0;
        }
    }
    return std::sqrt(variance / n * tau);
}

} // namespace

std::vector<double> autocorrelation(std::span<const double> series, std::size_t max_lag)
{
    if (max_lag == 0 || max_lag >= series.size())
        throw PreconditionError("autocorrelation: need 0 < max_lag < length");
    const Centered c = center(series);
    std::vector<double> acf(max_lag + 1);
    acf[0] = 1.0;
    for (std::size_t lag = 1; lag <= max_lag; ++lag)
        acf[lag] = autocorrelation_at(c, lag);
    return acf;
}

GeyerEstimate geyer_tau(std::span<const double> acf)
{
    if (acf.empty())
        throw PreconditionError("geyer_tau: empty autocorrelation sequence");
    double sum = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    std::size_t cutoff = 0;
    for (std::size_t m = 0; 2 * m + 1 < acf.size(); ++m) {
        double pair = acf[2 * m] + acf[2 * m + 1];
        if (pair <= 0.0)
            break;
        pair = std::min(pair, previous);
        sum += pair;
        previous = pair;
        cutoff = 2 * m + 1;
    }
    return {std::max(-1.0 + 2.0 * sum, kTauFloor), cutoff};
}

EssResult ress(std::span<const double> series)
{
    const Centered c = center(series);
    const std::size_t max_lag = series.size() / 2;

    EssResult result;
    result.acf.push_back(1.0);
    for (std::size_t m = 0; 2 * m + 1 <= max_lag; ++m) {
        if (2 * m > 0)
            result.acf.push_back(autocorrelation_at(c, 2 * m));
        result.acf.push_back(autocorrelation_at(c, 2 * m + 1));
        if (result.acf[2 * m] + result.acf[2 * m + 1] <= 0.0)
            break;
    }
    const GeyerEstimate g = geyer_tau(result.acf);
    result.tau = g.tau;
    result.ress = 1.0 / g.tau;
    result.cutoff = g.cutoff;
    return result;
}

CircularMoments circular_moments(std::span<const double> samples)
{
    if (samples.empty())
        throw PreconditionError("circular_moments: no samples");
    std::vector<double> cosines(samples.size());
    std::vector<double> sines(samples.size());
    double sum_cos = 0.0;
    double sum_sin = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        cosines[i] = std::cos(samples[i]);
        sines[i] = std::sin(samples[i]);
        sum_cos += cosines[i];
        sum_sin += sines[i];
    }
    const auto n = static_cast<double>(samples.size());
    CircularMoments m;
    m.mean_cos = sum_cos / n;
    m.mean_sin = sum_sin / n;
    m.se_cos = scaled_standard_error(cosines, m.mean_cos);
    m.se_sin = scaled_standard_error(sines, m.mean_sin);
    return m;
}

ChiSquareResult chisq_gof(std::span<const double> samples, const VonMisesParams& params,
                          int bins)
{
    if (bins < 10)
        throw ConfigError("chisq_gof: need at least 10 bins");
    const auto n = static_cast<double>(samples.size());
    if (n < 5.0 * bins)
        throw ConfigError("chisq_gof: " + std::to_string(samples.size()) +
                          " samples is too few for " + std::to_string(bins) +
                          " bins (need >= 5 per bin on average)");

    const double width = kTwoPi / bins;
    std::vector<double> observed(static_cast<std::size_t>(bins), 0.0);
    for (double x : samples) {
        const double u = (wrap_angle(x) + kPi) / width;
        const auto idx = std::clamp(static_cast<int>(std::floor(u)), 0, bins - 1);
        observed[static_cast<std::size_t>(idx)] += 1.0;
    }

    double statistic = 0.0;
    for (int i = 0; i < bins; ++i) {
        const double lo = -kPi + i * width;
        const double hi = i + 1 == bins ? kPi : -kPi + (i + 1) * width;
        const double expected = n * bin_probability(lo, hi, params);
        const double o = observed[static_cast<std::size_t>(i)];
        if (expected > 0.0)
            statistic += (o - expected) * (o - expected) / expected;
        else if (o > 0.0)
            statistic = std::numeric_limits<double>::infinity();
    }
    return {statistic, bins - 1};
}

double chisq_critical_value(int dof, double alpha)
{
    if (dof < 1 || !(alpha > 0.0 && alpha < 1.0))
        throw DomainError("chisq_critical_value: need dof >= 1 and alpha in (0, 1)");
    const boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::quantile(boost::math::complement(dist, alpha));
}

} // namespace vmhmc
