#pragma once

#include "fquant/fuzzy_number.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fquant {

/// A signal sampled on a uniform grid over [t0, t1]. Raw sample values carry
/// no range constraint; they enter [0,1] only after a fuzzy label is applied.
struct SampledSignal {
    double t0;
    double t1;
    std::vector<double> samples;

    SampledSignal(double t0, double t1, std::vector<double> samples);

    /// Linear interpolation between the stored samples.
    double value_at(double t) const;
};

struct TemporalResult {
    std::optional<double> dp_value;  // absent when the grid exceeds DP feasibility
    double limit_value = 0.0;
    std::size_t grid = 0;
};

/// Largest grid the O(m^2) unary DP is run on; larger grids report the
/// limit value only.
inline constexpr std::size_t kTemporalDpMaxGrid = 20000;

/// Evaluate a temporal statement "Q of the time, the signal is <label>":
/// discretize [t0,t1] into `grid_m` left-endpoint samples, fuzzify them with
/// the label, and run both the unary DP and the O(m) limit approximation for
/// the proportional quantifier. As the grid grows the DP value converges to
/// the limit value, which itself approaches fn of the normalized integral of
/// the labeled signal.
TemporalResult temporal_quantify(const SampledSignal& signal, const FuzzyNumber& label,
                                 const FuzzyNumber& quantifier, std::size_t grid_m);

struct PopulationResult {
    double limit_value = 0.0;
    /// Mean of label(z_i): the probability of the fuzzy event under the
    /// sampled population.
    double fuzzy_event_probability = 0.0;
};

/// Evaluate a proportional statement over a population given by samples:
/// the limit value is fn(mean of label(z_i)). Sampling is the caller's
/// responsibility (no RNG policy here), so results are reproducible.
PopulationResult population_quantify(std::span<const double> samples, const FuzzyNumber& label,
                                     const FuzzyNumber& quantifier);

}  // namespace fquant
