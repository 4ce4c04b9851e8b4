#pragma once

#include "fquant/crisp_set.hpp"
#include "fquant/universe.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fquant {

/// A fuzzy subset of a finite universe: one membership grade in [0,1] per
/// element. Grades are validated strictly at construction; out-of-range or
/// NaN grades are rejected rather than clamped, since a silent clamp would
/// mask caller bugs in a probability engine.
///
/// Reading of the grades: mu(e) is the probability that a voter asserts
/// "e has the property", so a crisp representative Y of the set occurs with
/// probability mass(X, Y) = prod_{e in Y} mu(e) * prod_{e not in Y} (1 - mu(e)).
class FuzzySet {
public:
    FuzzySet(Universe universe, std::vector<double> grades)
        : universe_(std::move(universe)), grades_(std::move(grades)) {
        if (grades_.size() != universe_.size()) {
            throw std::invalid_argument("FuzzySet: expected " + std::to_string(universe_.size()) +
                                        " grades, got " + std::to_string(grades_.size()));
        }
        for (std::size_t i = 0; i < grades_.size(); ++i) {
            const double g = grades_[i];
            if (!(g >= 0.0 && g <= 1.0)) {  // also rejects NaN
                throw std::invalid_argument("FuzzySet: grade [" + std::to_string(i) + "] = " +
                                            std::to_string(g) + " outside [0,1]");
            }
        }
    }

    static FuzzySet crisp(const CrispSet& y) {
        std::vector<double> g(y.universe_size());
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = y.contains(i) ? 1.0 : 0.0;
        return FuzzySet(y.universe(), std::move(g));
    }

    const Universe& universe() const { return universe_; }
    std::size_t size() const { return grades_.size(); }
    double grade(std::size_t i) const { return grades_.at(i); }
    std::span<const double> grades() const { return grades_; }

    bool is_crisp() const {
        for (double g : grades_) {
            if (g != 0.0 && g != 1.0) return false;
        }
        return true;
    }

    /// Sum of the grades (the scalar cardinality).
    double grade_sum() const {
        double s = 0.0;
        for (double g : grades_) s += g;
        return s;
    }

private:
    Universe universe_;
    std::vector<double> grades_;
};

/// Standard negation applied element-wise: mu'(e) = 1 - mu(e).
FuzzySet complement(const FuzzySet& x);

/// Product t-norm intersection: mu(e) = mu1(e) * mu2(e). This is the
/// intersection the model induces; min-based intersections break the
/// internal-joins law.
FuzzySet intersect_product(const FuzzySet& a, const FuzzySet& b);

/// Probabilistic-sum union: mu(e) = mu1 + mu2 - mu1*mu2 (dual of the product).
FuzzySet union_probabilistic(const FuzzySet& a, const FuzzySet& b);

/// Minimum intersection. NOT the induced t-norm; provided so the axiom
/// suite can demonstrate that the internal-joins check rejects it.
FuzzySet intersect_min(const FuzzySet& a, const FuzzySet& b);

/// Probability that the crisp set y is the representative of x:
///   prod_{e in y} mu(e) * prod_{e not in y} (1 - mu(e)).
/// The empty universe yields 1 (empty product).
double mass(const FuzzySet& x, const CrispSet& y);

/// Projection of x onto the listed element indices (in the given order).
/// The result lives on a fresh universe of size indices.size().
FuzzySet restrict(const FuzzySet& x, std::span<const std::size_t> indices);

}  // namespace fquant
