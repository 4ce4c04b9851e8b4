#pragma once

#include "fquant/fuzzy_set.hpp"

#include <cstddef>
#include <vector>

namespace fquant {

/// Law of the cardinality of a crisp representative of a fuzzy set:
/// p[j] = Pr(|representative| = j), j = 0..m. This is the Poisson-binomial
/// distribution of the membership grades.
class CardinalityDistribution {
public:
    explicit CardinalityDistribution(std::vector<double> probabilities);

    std::size_t max_cardinality() const { return probabilities_.size() - 1; }
    double operator[](std::size_t j) const { return probabilities_.at(j); }
    const std::vector<double>& probabilities() const { return probabilities_; }

private:
    std::vector<double> probabilities_;  // size m+1, nonnegative, sums to 1
};

/// Joint law of (|Y1 n Y2|, |Y1|) for independent representatives Y1 of X1
/// and Y2 of X2 on a shared universe. Stored dense as an (m+1)x(m+1) matrix;
/// entries with c_inter > c_first are structurally zero.
class JointCardinalityDistribution {
public:
    JointCardinalityDistribution(std::size_t universe_size, std::vector<double> flat);

    std::size_t universe_size() const { return m_; }
    double at(std::size_t c_inter, std::size_t c_first) const {
        return flat_.at(c_inter * (m_ + 1) + c_first);
    }

    /// Marginal over the intersection cardinality: the law of |Y1|.
    CardinalityDistribution first_marginal() const;
    /// Marginal over |Y1|: the law of |Y1 n Y2|.
    CardinalityDistribution intersection_marginal() const;

private:
    std::size_t m_;
    std::vector<double> flat_;  // (m+1)*(m+1), row = c_inter
};

/// Poisson-binomial law of |representative_X| by the incremental recurrence:
/// adding element e updates p'[j] = p[j]*(1-mu) + p[j-1]*mu (in-place,
/// highest index first). O(m^2) time, O(m) auxiliary space.
CardinalityDistribution cardinality_distribution(const FuzzySet& x);

/// Joint law of (|Y1 n Y2|, |Y1|). Per element the three relevant outcomes
/// are: in both (mu1*mu2), in Y1 only (mu1*(1-mu2)), not in Y1 (1-mu1).
/// O(m^3) time. Marginals agree with the two unary distributions.
JointCardinalityDistribution joint_cardinality_distribution(const FuzzySet& x1,
                                                            const FuzzySet& x2);

}  // namespace fquant
