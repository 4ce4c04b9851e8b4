#include "fquant/evaluate.hpp"

#include "fquant/cardinality.hpp"
#include "fquant/errors.hpp"

#include <array>
#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fquant {

namespace {

// Auto-strategy feasibility bounds for the polynomial evaluators.
constexpr std::size_t kUnaryDpMaxM = 20000;   // O(m^2)
constexpr std::size_t kBinaryDpMaxM = 512;    // O(m^3)

void validate_args(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                   const char* where) {
    if (args.size() != q.arity()) {
        throw std::invalid_argument(std::string(where) + ": quantifier \"" + q.name() +
                                    "\" expects " + std::to_string(q.arity()) +
                                    " arguments, got " + std::to_string(args.size()));
    }
    for (const FuzzySet& x : args) {
        require_same_universe(q.universe(), x.universe(), where);
    }
}

// Depth-first walk over all representative tuples. Walks elements of the
// current argument, extending the running mass product by mu or (1-mu);
// grades of exactly 0 or 1 contribute a single branch, so crisp inputs
// reduce to one kernel call with an exact product of ones.
struct ExactEnumerator {
    const SemiFuzzyQuantifier& q;
    std::span<const FuzzySet> xs;
    std::vector<CrispSet> args;
    std::size_t m;
    double acc = 0.0;

    ExactEnumerator(const SemiFuzzyQuantifier& quantifier, std::span<const FuzzySet> arguments)
        : q(quantifier), xs(arguments), args(arguments.size(), CrispSet(quantifier.universe())),
          m(quantifier.universe().size()) {}

    void descend(std::size_t a, std::size_t e, double prod) {
        if (a == args.size()) {
            acc += prod * q(args);
            return;
        }
        if (e == m) {
            descend(a + 1, 0, prod);
            return;
        }
        const double g = xs[a].grade(e);
        if (g < 1.0) {
            args[a].set(e, false);
            descend(a, e + 1, prod * (1.0 - g));
        }
        if (g > 0.0) {
            args[a].set(e, true);
            descend(a, e + 1, prod * g);
        }
    }
};

/// Unary DP over the product-t-norm intersection; equivalent to the binary
/// absolute quantifier by the internal-meets law.
double eval_binary_absolute_dp(const SemiFuzzyQuantifier& q, const FuzzySet& x1,
                               const FuzzySet& x2) {
    const auto* ba = q.binary_absolute();
    if (!ba) {
        throw EvaluatorMismatchError("eval_binary_absolute_dp: kernel of \"" + q.name() +
                                     "\" is not binary absolute");
    }
    const FuzzySet inter = intersect_product(x1, x2);
    const CardinalityDistribution p = cardinality_distribution(inter);
    double acc = 0.0;
    for (std::size_t j = 0; j <= p.max_cardinality(); ++j) {
        acc += p[j] * ba->fn(static_cast<double>(j));
    }
    return acc;
}

bool limit_applicable(const SemiFuzzyQuantifier& q) {
    if (const auto* uq = q.unary_quantitative()) {
        return uq->proportional && uq->proportional->continuous_on_unit_interval() &&
               q.universe().size() >= 1;
    }
    if (const auto* bp = q.binary_proportional()) {
        return bp->fn.continuous_on_unit_interval() && q.universe().size() >= 1;
    }
    return false;
}

}  // namespace

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Exact: return "exact";
        case Strategy::Dp: return "dp";
        case Strategy::Limit: return "limit";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "auto") return Strategy::Auto;
    if (s == "exact") return Strategy::Exact;
    if (s == "dp") return Strategy::Dp;
    if (s == "limit") return Strategy::Limit;
    throw std::invalid_argument("unknown strategy \"" + s + "\"");
}

double eval_exact(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args) {
    validate_args(q, args, "eval_exact");
    const std::size_t bits = q.arity() * q.universe().size();
    if (bits > kExactGuardBits) {
        throw SizeGuardError("eval_exact: arity*m = " + std::to_string(bits) + " exceeds " +
                             std::to_string(kExactGuardBits) + " (2^" + std::to_string(bits) +
                             " kernel calls)");
    }
    ExactEnumerator e(q, args);
    e.descend(0, 0, 1.0);
    return e.acc;
}

double eval_exact(const SemiFuzzyQuantifier& q, const FuzzySet& x) {
    return eval_exact(q, std::span<const FuzzySet>(&x, 1));
}

double eval_exact(const SemiFuzzyQuantifier& q, const FuzzySet& x1, const FuzzySet& x2) {
    const std::array<FuzzySet, 2> args{x1, x2};
    return eval_exact(q, std::span<const FuzzySet>(args.data(), args.size()));
}

double eval_unary_dp(const SemiFuzzyQuantifier& q, const FuzzySet& x) {
    const auto* uq = q.unary_quantitative();
    if (!uq) {
        throw EvaluatorMismatchError("eval_unary_dp: kernel of \"" + q.name() +
                                     "\" is not unary quantitative");
    }
    require_same_universe(q.universe(), x.universe(), "eval_unary_dp");
    const CardinalityDistribution p = cardinality_distribution(x);
    double acc = 0.0;
    for (std::size_t j = 0; j <= p.max_cardinality(); ++j) {
        acc += p[j] * uq->table[j];
    }
    return acc;
}

double eval_binary_proportional_dp(const SemiFuzzyQuantifier& q, const FuzzySet& x1,
                                   const FuzzySet& x2) {
    const auto* bp = q.binary_proportional();
    if (!bp) {
        throw EvaluatorMismatchError("eval_binary_proportional_dp: kernel of \"" + q.name() +
                                     "\" is not binary proportional");
    }
    require_same_universe(q.universe(), x1.universe(), "eval_binary_proportional_dp");
    require_same_universe(q.universe(), x2.universe(), "eval_binary_proportional_dp");
    const JointCardinalityDistribution joint = joint_cardinality_distribution(x1, x2);
    const std::size_t m = joint.universe_size();
    double acc = joint.at(0, 0) * bp->empty_case;
    for (std::size_t c1 = 1; c1 <= m; ++c1) {
        for (std::size_t ci = 0; ci <= c1; ++ci) {
            const double p = joint.at(ci, c1);
            if (p == 0.0) continue;
            acc += p * bp->fn(static_cast<double>(ci) / static_cast<double>(c1));
        }
    }
    return acc;
}

double eval_limit(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args, bool* degenerate) {
    validate_args(q, args, "eval_limit");
    if (degenerate) *degenerate = false;
    if (q.universe().size() == 0) {
        throw EvaluatorMismatchError("eval_limit: undefined on the empty universe");
    }
    if (const auto* uq = q.unary_quantitative()) {
        if (!uq->proportional) {
            throw EvaluatorMismatchError("eval_limit: \"" + q.name() +
                                         "\" carries no proportional fuzzy number");
        }
        if (!uq->proportional->continuous_on_unit_interval()) {
            throw EvaluatorMismatchError(
                "eval_limit: \"" + q.name() +
                "\" uses a crisp-step fuzzy number; the limit approximation requires a "
                "continuous one");
        }
        const double mean = args[0].grade_sum() / static_cast<double>(args[0].size());
        return (*uq->proportional)(mean);
    }
    if (const auto* bp = q.binary_proportional()) {
        if (!bp->fn.continuous_on_unit_interval()) {
            throw EvaluatorMismatchError(
                "eval_limit: \"" + q.name() +
                "\" uses a crisp-step fuzzy number; the limit approximation requires a "
                "continuous one");
        }
        const double denom = args[0].grade_sum();
        if (denom == 0.0) {
            if (degenerate) *degenerate = true;
            return bp->empty_case;
        }
        const double numer = intersect_product(args[0], args[1]).grade_sum();
        return bp->fn(numer / denom);
    }
    throw EvaluatorMismatchError("eval_limit: kernel of \"" + q.name() +
                                 "\" has no proportional form");
}

EvalResult evaluate(const SemiFuzzyQuantifier& q, std::span<const FuzzySet> args,
                    Strategy strategy) {
    validate_args(q, args, "evaluate");
    const std::size_t m = q.universe().size();
    const std::size_t bits = q.arity() * m;

    Strategy chosen = strategy;
    if (strategy == Strategy::Auto) {
        if (q.unary_quantitative() && m <= kUnaryDpMaxM) {
            chosen = Strategy::Dp;
        } else if (q.binary_proportional() && m <= kBinaryDpMaxM) {
            chosen = Strategy::Dp;
        } else if (q.binary_absolute() && m <= kUnaryDpMaxM) {
            chosen = Strategy::Dp;
        } else if (bits <= kExactGuardBits) {
            chosen = Strategy::Exact;
        } else if (limit_applicable(q)) {
            chosen = Strategy::Limit;
        } else {
            throw EvaluatorMismatchError("evaluate: no applicable evaluator for \"" + q.name() +
                                         "\" at arity*m = " + std::to_string(bits));
        }
    }

    EvalResult r;
    r.evaluator_used = chosen;
    const auto start = std::chrono::steady_clock::now();
    switch (chosen) {
        case Strategy::Exact:
            r.value = eval_exact(q, args);
            break;
        case Strategy::Dp:
            if (q.unary_quantitative()) {
                r.value = eval_unary_dp(q, args[0]);
            } else if (q.binary_proportional()) {
                r.value = eval_binary_proportional_dp(q, args[0], args[1]);
            } else if (q.binary_absolute()) {
                r.value = eval_binary_absolute_dp(q, args[0], args[1]);
            } else {
                throw EvaluatorMismatchError("evaluate: kernel of \"" + q.name() +
                                             "\" admits no polynomial evaluator");
            }
            break;
        case Strategy::Limit: {
            bool degenerate = false;
            r.value = eval_limit(q, args, &degenerate);
            r.approximate = true;
            r.degenerate = degenerate;
            break;
        }
        case Strategy::Auto:
            throw std::logic_error("evaluate: unresolved strategy");
    }
    const auto stop = std::chrono::steady_clock::now();
    r.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    return r;
}

double FuzzyQuantifier::operator()(const FuzzySet& x) const {
    return (*this)(std::span<const FuzzySet>(&x, 1));
}

double FuzzyQuantifier::operator()(const FuzzySet& x1, const FuzzySet& x2) const {
    const std::array<FuzzySet, 2> args{x1, x2};
    return (*this)(std::span<const FuzzySet>(args.data(), args.size()));
}

}  // namespace fquant
