#include "fquant/cardinality.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fquant {

namespace {

constexpr double kMassBudget = 1e-9;

void require_unit_mass(double total, const char* where) {
    if (std::abs(total - 1.0) > kMassBudget) {
        throw std::logic_error(std::string(where) + ": total mass " + std::to_string(total) +
                               " deviates from 1 beyond budget");
    }
}

}  // namespace

CardinalityDistribution::CardinalityDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
    if (probabilities_.empty()) {
        throw std::invalid_argument("CardinalityDistribution: needs at least p[0]");
    }
    double total = 0.0;
    for (double p : probabilities_) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("CardinalityDistribution: negative probability");
        }
        total += p;
    }
    require_unit_mass(total, "CardinalityDistribution");
}

JointCardinalityDistribution::JointCardinalityDistribution(std::size_t universe_size,
                                                           std::vector<double> flat)
    : m_(universe_size), flat_(std::move(flat)) {
    const std::size_t side = m_ + 1;
    if (flat_.size() != side * side) {
        throw std::invalid_argument("JointCardinalityDistribution: expected " +
                                    std::to_string(side * side) + " entries");
    }
    double total = 0.0;
    for (std::size_t ci = 0; ci < side; ++ci) {
        for (std::size_t c1 = 0; c1 < side; ++c1) {
            const double p = flat_[ci * side + c1];
            if (!(p >= 0.0)) {
                throw std::invalid_argument("JointCardinalityDistribution: negative probability");
            }
            if (ci > c1 && p != 0.0) {
                throw std::invalid_argument(
                    "JointCardinalityDistribution: mass above the diagonal");
            }
            total += p;
        }
    }
    require_unit_mass(total, "JointCardinalityDistribution");
}

CardinalityDistribution JointCardinalityDistribution::first_marginal() const {
    const std::size_t side = m_ + 1;
    std::vector<double> p(side, 0.0);
    for (std::size_t ci = 0; ci < side; ++ci) {
        for (std::size_t c1 = 0; c1 < side; ++c1) p[c1] += flat_[ci * side + c1];
    }
    return CardinalityDistribution(std::move(p));
}

CardinalityDistribution JointCardinalityDistribution::intersection_marginal() const {
    const std::size_t side = m_ + 1;
    std::vector<double> p(side, 0.0);
    for (std::size_t ci = 0; ci < side; ++ci) {
        for (std::size_t c1 = 0; c1 < side; ++c1) p[ci] += flat_[ci * side + c1];
    }
    return CardinalityDistribution(std::move(p));
}

CardinalityDistribution cardinality_distribution(const FuzzySet& x) {
    const std::size_t m = x.size();
    std::vector<double> p(m + 1, 0.0);
    p[0] = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double mu = x.grade(k);
        // In-place, highest index first: each p[j] still holds the value for
        // the first k elements when it is read.
        for (std::size_t j = k + 1; j > 0; --j) {
            p[j] = p[j] * (1.0 - mu) + p[j - 1] * mu;
        }
        p[0] *= 1.0 - mu;
    }
    return CardinalityDistribution(std::move(p));
}

JointCardinalityDistribution joint_cardinality_distribution(const FuzzySet& x1,
                                                            const FuzzySet& x2) {
    require_same_universe(x1.universe(), x2.universe(), "joint_cardinality_distribution");
    const std::size_t m = x1.size();
    const std::size_t side = m + 1;
    std::vector<double> q(side * side, 0.0);
    std::vector<double> next(side * side, 0.0);
    q[0] = 1.0;  // (c_inter, c_first) = (0, 0)
    for (std::size_t k = 0; k < m; ++k) {
        const double g1 = x1.grade(k);
        const double g2 = x2.grade(k);
        const double p_both = g1 * g2;
        const double p_first_only = g1 * (1.0 - g2);
        const double p_out = 1.0 - g1;  // not in Y1, so neither counter moves
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t ci = 0; ci <= k; ++ci) {
            for (std::size_t c1 = ci; c1 <= k; ++c1) {
                const double v = q[ci * side + c1];
                if (v == 0.0) continue;
                next[(ci + 1) * side + (c1 + 1)] += v * p_both;
                next[ci * side + (c1 + 1)] += v * p_first_only;
                next[ci * side + c1] += v * p_out;
            }
        }
        q.swap(next);
    }
    return JointCardinalityDistribution(m, std::move(q));
}

}  // namespace fquant
