#include "fquant/fuzzy_number.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fquant {

FuzzyNumber FuzzyNumber::trapezoid(double a, double b, double c, double d, bool unbounded_left,
                                   bool unbounded_right) {
    if (unbounded_left) a = b;  // the left ramp is gone; keep params finite
    if (unbounded_right) d = c;
    const bool finite = std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
                        std::isfinite(d);
    if (!finite) {
        throw std::invalid_argument(
            "FuzzyNumber::trapezoid: parameters must be finite; use the unbounded flags for "
            "open shoulders");
    }
    const bool ordered = (unbounded_left || (a <= b && b <= c)) &&
                         (unbounded_right || (c <= d)) && b <= c;
    if (!ordered) {
        throw std::invalid_argument("FuzzyNumber::trapezoid: requires a <= b <= c <= d");
    }
    return FuzzyNumber(Shape::Trapezoid, {a, b, c, d}, unbounded_left, unbounded_right);
}

FuzzyNumber FuzzyNumber::smooth_step(double alpha, double gamma) {
    if (!(alpha < gamma)) {
        throw std::invalid_argument("FuzzyNumber::smooth_step: requires alpha < gamma");
    }
    return FuzzyNumber(Shape::SmoothStep, {alpha, gamma}, false, false);
}

FuzzyNumber FuzzyNumber::crisp_exists() { return FuzzyNumber(Shape::CrispExists, {}, false, false); }

FuzzyNumber FuzzyNumber::crisp_forall() { return FuzzyNumber(Shape::CrispForall, {}, false, false); }

FuzzyNumber FuzzyNumber::constant(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("FuzzyNumber::constant: value outside [0,1]");
    }
    return FuzzyNumber(Shape::Constant, {v}, false, false);
}

FuzzyNumber FuzzyNumber::sampled(std::vector<double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("FuzzyNumber::sampled: needs at least two samples");
    }
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("FuzzyNumber::sampled: sample outside [0,1]");
        }
    }
    return FuzzyNumber(Shape::Sampled, std::move(values), false, false);
}

double FuzzyNumber::operator()(double x) const {
    if (std::isnan(x)) {
        throw std::domain_error("FuzzyNumber: NaN argument");
    }
    switch (shape_) {
        case Shape::Trapezoid: {
            const double a = params_[0], b = params_[1], c = params_[2], d = params_[3];
            if (!unbounded_left_) {
                if (x <= a) return 0.0;
                if (x <= b) return b > a ? (x - a) / (b - a) : 1.0;
            }
            if (x <= c) return 1.0;
            if (unbounded_right_) return 1.0;
            if (x <= d) return d > c ? 1.0 - (x - c) / (d - c) : 0.0;
            return 0.0;
        }
        case Shape::SmoothStep: {
            const double alpha = params_[0], gamma = params_[1];
            const double mid = 0.5 * (alpha + gamma);
            const double w = gamma - alpha;
            if (x <= alpha) return 0.0;
            if (x <= mid) {
                const double r = (x - alpha) / w;
                return 2.0 * r * r;
            }
            if (x <= gamma) {
                const double r = (x - gamma) / w;
                return 1.0 - 2.0 * r * r;
            }
            return 1.0;
        }
        case Shape::CrispExists:
            return x > 0.0 ? 1.0 : 0.0;
        case Shape::CrispForall:
            return x == 1.0 ? 1.0 : 0.0;
        case Shape::Constant:
            return params_[0];
        case Shape::Sampled: {
            if (x <= 0.0) return params_.front();
            if (x >= 1.0) return params_.back();
            const double pos = x * static_cast<double>(params_.size() - 1);
            const std::size_t lo = static_cast<std::size_t>(pos);
            const double frac = pos - static_cast<double>(lo);
            return params_[lo] * (1.0 - frac) + params_[lo + 1] * frac;
        }
    }
    throw std::logic_error("FuzzyNumber: unknown shape");
}

bool FuzzyNumber::continuous_on_unit_interval() const {
    switch (shape_) {
        case Shape::Trapezoid: {
            const double a = params_[0], b = params_[1], c = params_[2], d = params_[3];
            // A zero-width ramp is a jump; it only matters when the jump
            // point can be hit by a proportion. The right jump sits at c and
            // is invisible when c >= 1 (nothing of [0,1] lies above it).
            const bool left_jump = !unbounded_left_ && a == b && a >= 0.0 && a < 1.0;
            const bool right_jump = !unbounded_right_ && c == d && c >= 0.0 && c < 1.0;
            return !left_jump && !right_jump;
        }
        case Shape::SmoothStep:
        case Shape::Constant:
        case Shape::Sampled:
            return true;
        case Shape::CrispExists:
        case Shape::CrispForall:
            return false;
    }
    return false;
}

std::string FuzzyNumber::describe() const {
    std::ostringstream os;
    switch (shape_) {
        case Shape::Trapezoid:
            os << "T(" << (unbounded_left_ ? std::string("-inf") : std::to_string(params_[0]))
               << "," << params_[1] << "," << params_[2] << ","
               << (unbounded_right_ ? std::string("inf") : std::to_string(params_[3])) << ")";
            break;
        case Shape::SmoothStep:
            os << "S(" << params_[0] << "," << params_[1] << ")";
            break;
        case Shape::CrispExists:
            os << "exists";
            break;
        case Shape::CrispForall:
            os << "forall";
            break;
        case Shape::Constant:
            os << "const(" << params_[0] << ")";
            break;
        case Shape::Sampled:
            os << "sampled[" << params_.size() << "]";
            break;
    }
    return os.str();
}

}  // namespace fquant
