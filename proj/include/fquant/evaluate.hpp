#pragma once

#include "fquant/fuzzy_set.hpp"
#include "fquant/quantifier.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fquant {

enum class Strategy { Auto, Exact, Dp, Limit };

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

/// Outcome of a dispatched evaluation.
struct EvalResult {
    double value = 0.0;
    Strategy evaluator_used = Strategy::Exact;  // never Auto
    double elapsed_seconds = 0.0;
    bool approximate = false;  // set when the limit evaluator was used
    bool degenerate = false;   // binary limit fell back to the empty case
};

/// Hard guard for the exact evaluator: arity * m <= 24, i.e. at most ~16.7M
/// kernel calls.
inline constexpr std::size_t kExactGuardBits = 24;

/// Exact evaluation by summing the kernel over every tuple of crisp
/// representatives, weighted by the product of their masses. Cost
/// 2^(arity*m) kernel calls; refuses instances beyond kExactGuardBits.
///
/// Enumeration is a depth-first walk over elements that extends a running
/// mass product by mu or (1-mu) at each element, so crisp grades prune
/// their zero-probability branch and no division ever occurs. The
/// summation order is fixed, so results are bit-reproducible.
double eval_exact(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args);
double eval_exact(const SemiFuzzyQuantifier& q, const FuzzySet& x);
double eval_exact(const SemiFuzzyQuantifier& q, const FuzzySet& x1, const FuzzySet& x2);

/// Polynomial evaluation of a unary quantitative quantifier:
/// sum_j p[j] * q(j) with p the cardinality distribution. O(m^2).
double eval_unary_dp(const SemiFuzzyQuantifier& q, const FuzzySet& x);

/// Polynomial evaluation of a binary proportional quantifier through the
/// joint law of (|Y1 n Y2|, |Y1|):
///   q(0,0)*empty_case + sum_{c1>=1} sum_{ci<=c1} q(ci,c1)*fn(ci/c1).
/// O(m^3). Agrees with eval_exact to within accumulation error.
double eval_binary_proportional_dp(const SemiFuzzyQuantifier& q, const FuzzySet& x1,
                                   const FuzzySet& x2);

/// O(m) limit approximation, valid for quantifiers built from a continuous
/// proportional fuzzy number:
///   unary:  fn(sum mu / m)
///   binary: fn(sum mu1*mu2 / sum mu1), falling back to the empty case
///           (with *degenerate set) when sum mu1 = 0.
/// No exactness contract; accuracy improves as m grows.
double eval_limit(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                  bool* degenerate = nullptr);

/// Strategy dispatch. Auto prefers the polynomial evaluators when the
/// kernel tag permits and the size is feasible, then exact within the
/// guard, then the limit approximation (flagged approximate). Binary
/// absolute kernels route through the unary DP on the product-t-norm
/// intersection of the arguments, which the internal-meets law makes
/// equivalent. Forced strategies bypass the feasibility bounds.
EvalResult evaluate(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                    Strategy strategy = Strategy::Auto);

/// The fuzzified quantifier: a callable over fuzzy argument tuples bound to
/// an evaluation strategy. On crisp arguments it returns the underlying
/// semi-fuzzy quantifier's value.
class FuzzyQuantifier {
public:
    explicit FuzzyQuantifier(SemiFuzzyQuantifier q, Strategy strategy = Strategy::Auto)
        : q_(std::move(q)), strategy_(strategy) {}

    double operator()(std::span<const FuzzySet> args) const {
        return evaluate(q_, args, strategy_).value;
    }
    double operator()(const FuzzySet& x) const;
    double operator()(const FuzzySet& x1, const FuzzySet& x2) const;

    EvalResult evaluate_with_record(std::span<const FuzzySet> args) const {
        return evaluate(q_, args, strategy_);
    }

    std::size_t arity() const { return q_.arity(); }
    const Universe& universe() const { return q_.universe(); }
    /// The underlying semi-fuzzy quantifier.
    const SemiFuzzyQuantifier& underlying() const { return q_; }

private:
    SemiFuzzyQuantifier q_;
    Strategy strategy_;
};

inline FuzzyQuantifier fuzzify(SemiFuzzyQuantifier q, Strategy strategy = Strategy::Auto) {
    return FuzzyQuantifier(std::move(q), strategy);
}

}  // namespace fquant
