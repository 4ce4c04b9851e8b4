#pragma once

#include <string>
#include <vector>

namespace fquant {

/// A membership function on the real line used to build quantifiers.
/// Shapes:
///   trapezoid(a,b,c,d)     0 for x<=a, ramp up on (a,b], 1 on (b,c],
///                          ramp down on (c,d], 0 for x>d. Either shoulder
///                          may be marked unbounded, which pins that side
///                          at 1 instead of ramping (the serialized form
///                          writes "-inf"/"inf"; internally a flag, so no
///                          IEEE infinities travel through arithmetic).
///   smooth_step(alpha,gamma)  0 below alpha, two quadratic arcs meeting at
///                          the midpoint, 1 above gamma.
///   crisp_exists           1 for x>0, else 0.
///   crisp_forall           1 for x=1, else 0.
///   constant(v)            v everywhere.
///   sampled(values)        piecewise-linear through uniform samples on [0,1].
class FuzzyNumber {
public:
    enum class Shape { Trapezoid, SmoothStep, CrispExists, CrispForall, Constant, Sampled };

    static FuzzyNumber trapezoid(double a, double b, double c, double d,
                                 bool unbounded_left = false, bool unbounded_right = false);
    static FuzzyNumber smooth_step(double alpha, double gamma);
    static FuzzyNumber crisp_exists();
    static FuzzyNumber crisp_forall();
    static FuzzyNumber constant(double v);
    static FuzzyNumber sampled(std::vector<double> values);

    /// Membership grade at x; always in [0,1]. NaN input is rejected.
    double operator()(double x) const;

    Shape shape() const { return shape_; }
    const std::vector<double>& params() const { return params_; }
    bool unbounded_left() const { return unbounded_left_; }
    bool unbounded_right() const { return unbounded_right_; }

    /// True when the membership function has no jump inside [0,1]. The
    /// limit evaluator requires this (its hypothesis is a continuous
    /// proportional fuzzy number); crisp steps are rejected there.
    bool continuous_on_unit_interval() const;

    std::string describe() const;

private:
    FuzzyNumber(Shape shape, std::vector<double> params, bool ul, bool ur)
        : shape_(shape), params_(std::move(params)), unbounded_left_(ul), unbounded_right_(ur) {}

    Shape shape_;
    std::vector<double> params_;
    bool unbounded_left_ = false;
    bool unbounded_right_ = false;
};

}  // namespace fquant
