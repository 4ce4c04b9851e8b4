#include "fquant/asymptotics.hpp"

#include "fquant/evaluate.hpp"
#include "fquant/quantifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fquant {

SampledSignal::SampledSignal(double t0_in, double t1_in, std::vector<double> samples_in)
    : t0(t0_in), t1(t1_in), samples(std::move(samples_in)) {
    if (!(t0 < t1)) {
        throw std::invalid_argument("SampledSignal: requires t0 < t1");
    }
    if (samples.empty()) {
        throw std::invalid_argument("SampledSignal: needs at least one sample");
    }
    for (double v : samples) {
        if (std::isnan(v)) throw std::invalid_argument("SampledSignal: NaN sample");
    }
}

double SampledSignal::value_at(double t) const {
    if (samples.size() == 1) return samples.front();
    if (t <= t0) return samples.front();
    if (t >= t1) return samples.back();
    const double pos = (t - t0) / (t1 - t0) * static_cast<double>(samples.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    return samples[lo] * (1.0 - frac) + samples[lo + 1] * frac;
}

TemporalResult temporal_quantify(const SampledSignal& signal, const FuzzyNumber& label,
                                 const FuzzyNumber& quantifier, std::size_t grid_m) {
    if (grid_m == 0) {
        throw std::invalid_argument("temporal_quantify: empty grid");
    }
    // Left endpoints of grid_m equal subintervals of [t0, t1].
    const double h = (signal.t1 - signal.t0) / static_cast<double>(grid_m);
    std::vector<double> grades(grid_m);
    for (std::size_t i = 0; i < grid_m; ++i) {
        grades[i] = label(signal.value_at(signal.t0 + static_cast<double>(i) * h));
    }
    const Universe grid_universe(grid_m);
    const FuzzySet x(grid_universe, std::move(grades));
    const SemiFuzzyQuantifier q = make_unary_proportional("temporal", grid_universe, quantifier);

    TemporalResult result;
    result.grid = grid_m;
    if (grid_m <= kTemporalDpMaxGrid) {
        result.dp_value = eval_unary_dp(q, x);
    }
    result.limit_value = eval_limit(q, std::span<const FuzzySet>(&x, 1));
    return result;
}

PopulationResult population_quantify(std::span<const double> samples, const FuzzyNumber& label,
                                     const FuzzyNumber& quantifier) {
    if (samples.empty()) {
        throw std::invalid_argument("population_quantify: empty sample");
    }
    double acc = 0.0;
    for (double z : samples) acc += label(z);
    PopulationResult result;
    result.fuzzy_event_probability = acc / static_cast<double>(samples.size());
    result.limit_value = quantifier(result.fuzzy_event_probability);
    return result;
}

}  // namespace fquant
