#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fquant/asymptotics.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace fquant;

namespace {

const FuzzyNumber kIdentityLabel = FuzzyNumber::trapezoid(0.0, 1.0, 1.0, 1.0, false, true);

// Composite Simpson quadrature, test-side oracle.
template <class F>
double simpson(F&& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

double normal_pdf(double x, double mean, double sd) {
    const double z = (x - mean) / sd;
    return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * std::acos(-1.0)));
}

}  // namespace

TEST_CASE("sampled signal interpolation") {
    const SampledSignal ramp(0.0, 1.0, {0.0, 1.0});
    CHECK(ramp.value_at(0.0) == 0.0);
    CHECK(ramp.value_at(0.25) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(ramp.value_at(1.0) == 1.0);

    const SampledSignal flat(0.0, 2.0, {0.7});
    CHECK(flat.value_at(1.3) == 0.7);

    CHECK_THROWS_AS(SampledSignal(1.0, 0.0, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(SampledSignal(0.0, 1.0, {}), std::invalid_argument);
}

TEST_CASE("temporal quantification of the unit ramp") {
    const SampledSignal ramp(0.0, 1.0, {0.0, 1.0});
    const FuzzyNumber q = FuzzyNumber::smooth_step(0.3, 0.6);

    const TemporalResult r = temporal_quantify(ramp, kIdentityLabel, q, 1024);
    REQUIRE(r.dp_value.has_value());
    CHECK(std::abs(r.limit_value - 7.0 / 9.0) <= 0.03);
    CHECK(std::abs(*r.dp_value - r.limit_value) <= 0.03);
    CHECK(std::abs(*r.dp_value - 7.0 / 9.0) <= 0.03);
}

TEST_CASE("constant signals evaluate exactly at every grid size") {
    const FuzzyNumber q = FuzzyNumber::smooth_step(0.3, 0.6);

    SUBCASE("crisp label: the representative distribution degenerates") {
        // "above one half" labels the constant 0.8 signal as all-ones.
        const FuzzyNumber above_half = FuzzyNumber::trapezoid(0.5, 0.5, 2.0, 2.0, false, true);
        const SampledSignal high(0.0, 4.0, {0.8});
        const SampledSignal low(0.0, 4.0, {0.2});
        for (std::size_t grid : {1u, 7u, 64u, 513u}) {
            const TemporalResult r_high = temporal_quantify(high, above_half, q, grid);
            REQUIRE(r_high.dp_value.has_value());
            CHECK(*r_high.dp_value == q(1.0));
            CHECK(r_high.limit_value == q(1.0));
            const TemporalResult r_low = temporal_quantify(low, above_half, q, grid);
            CHECK(*r_low.dp_value == q(0.0));
            CHECK(r_low.limit_value == q(0.0));
        }
    }

    SUBCASE("fuzzy label: the limit value is exact, the DP value converges") {
        // All grades equal label(c), so the mean is label(c) at every grid;
        // the DP value averages the quantifier over a binomial spread and
        // tightens as the grid grows.
        const SampledSignal flat(0.0, 4.0, {0.5, 0.5, 0.5});
        double previous_gap = 1.0;
        for (std::size_t grid : {8u, 64u, 512u, 4096u}) {
            const TemporalResult r = temporal_quantify(flat, kIdentityLabel, q, grid);
            REQUIRE(r.dp_value.has_value());
            CHECK(r.limit_value == doctest::Approx(7.0 / 9.0).epsilon(1e-12));
            const double gap = std::abs(*r.dp_value - r.limit_value);
            CHECK(gap <= previous_gap + 1e-12);
            previous_gap = gap;
        }
        CHECK(previous_gap <= 0.01);
    }
}

TEST_CASE("the DP-to-limit gap shrinks as the grid doubles") {
    const SampledSignal ramp(0.0, 1.0, {0.0, 1.0});
    const FuzzyNumber q = FuzzyNumber::smooth_step(0.3, 0.6);
    double previous_gap = 1.0;
    for (std::size_t grid : {64u, 256u, 1024u, 4096u}) {
        const TemporalResult r = temporal_quantify(ramp, kIdentityLabel, q, grid);
        REQUIRE(r.dp_value.has_value());
        const double gap = std::abs(*r.dp_value - r.limit_value);
        CHECK(gap <= previous_gap + 1e-12);
        previous_gap = gap;
    }
}

TEST_CASE("grids beyond the DP bound report the limit value only") {
    const SampledSignal ramp(0.0, 1.0, {0.0, 1.0});
    const FuzzyNumber q = FuzzyNumber::smooth_step(0.3, 0.6);
    const TemporalResult r = temporal_quantify(ramp, kIdentityLabel, q, kTemporalDpMaxGrid + 1);
    CHECK_FALSE(r.dp_value.has_value());
    CHECK(r.limit_value > 0.0);
}

TEST_CASE("empty grid is rejected") {
    const SampledSignal ramp(0.0, 1.0, {0.0, 1.0});
    CHECK_THROWS_AS(temporal_quantify(ramp, kIdentityLabel, FuzzyNumber::smooth_step(0.3, 0.6), 0),
                    std::invalid_argument);
}

TEST_CASE("both temporal values stay in the unit interval on random signals") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const FuzzyNumber q = FuzzyNumber::smooth_step(0.2, 0.8);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> samples(16);
        for (double& v : samples) v = 10.0 * unit(rng) - 5.0;  // raw range, unconstrained
        const SampledSignal sig(0.0, 1.0, std::move(samples));
        const FuzzyNumber label = FuzzyNumber::smooth_step(-4.0, 4.0);
        const TemporalResult r = temporal_quantify(sig, label, q, 1 + rng() % 200);
        REQUIRE(r.dp_value.has_value());
        CHECK(*r.dp_value >= 0.0);
        CHECK(*r.dp_value <= 1.0);
        CHECK(r.limit_value >= 0.0);
        CHECK(r.limit_value <= 1.0);
    }
}

TEST_CASE("population quantification") {
    const FuzzyNumber q = FuzzyNumber::smooth_step(0.2, 0.5);

    SUBCASE("unanimous labels saturate") {
        const std::vector<double> samples{10.0, 11.0, 12.0};
        const FuzzyNumber always = FuzzyNumber::constant(1.0);
        const PopulationResult r = population_quantify(samples, always, q);
        CHECK(r.fuzzy_event_probability == 1.0);
        CHECK(r.limit_value == q(1.0));
    }

    SUBCASE("a crisp label reduces to the exceedance fraction") {
        const std::vector<double> samples{1.0, 2.0, 3.0, 4.0};
        // "above 2.5": zero-width ramp at 2.5
        const FuzzyNumber above = FuzzyNumber::trapezoid(2.5, 2.5, 5.0, 5.0, false, true);
        const PopulationResult r = population_quantify(samples, above, q);
        CHECK(r.fuzzy_event_probability == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("matches the quadrature of label against the population density") {
        // Heights ~ normal(175, 7), label "tall" rising from 180cm to 190cm.
        const double mean = 175.0, sd = 7.0;
        const FuzzyNumber tall = FuzzyNumber::smooth_step(180.0, 190.0);

        std::mt19937_64 rng(73);
        std::normal_distribution<double> heights(mean, sd);
        std::vector<double> samples(100000);
        for (double& z : samples) z = heights(rng);

        const PopulationResult r = population_quantify(samples, tall, q);
        const double integral = simpson(
            [&](double x) { return normal_pdf(x, mean, sd) * tall(x); }, 130.0, 220.0, 4000);
        CHECK(std::abs(r.fuzzy_event_probability - integral) <= 0.01);
        CHECK(r.limit_value == doctest::Approx(q(r.fuzzy_event_probability)).epsilon(1e-12));
    }

    SUBCASE("empty sample is rejected") {
        CHECK_THROWS_AS(population_quantify(std::vector<double>{}, q, q), std::invalid_argument);
    }
}
