#pragma once

#include "fquant/fuzzy_set.hpp"
#include "fquant/quantifier.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fquant {

/// A two-valued truth function f: {0,1}^n -> [0,1], stored as a table of
/// 2^n entries indexed by the argument bitmask (argument i is bit i).
struct TruthFunction {
    std::size_t arity;
    std::vector<double> table;

    TruthFunction(std::size_t arity, std::vector<double> table);

    double operator()(unsigned bits) const { return table.at(bits); }

    static TruthFunction negation();     // 1 - x
    static TruthFunction conjunction();  // binary and
    static TruthFunction disjunction();  // binary or
    static TruthFunction implication();  // binary ->
    static TruthFunction identity();     // unary id
};

// --- quantifier constructions the model's laws quantify over --------------

/// External negation: (not Q)(Y1..Yn) = 1 - Q(Y1..Yn).
SemiFuzzyQuantifier external_negation(const SemiFuzzyQuantifier& q);

/// Internal negation (the antonym): Qn(Y1..Yn) = Q(Y1,...,complement(Yn)).
/// Acts on the last argument; compose with transpose_args for other
/// positions. Requires arity >= 1.
SemiFuzzyQuantifier internal_negation(const SemiFuzzyQuantifier& q);

/// Dual: external negation of the antonym.
SemiFuzzyQuantifier dual(const SemiFuzzyQuantifier& q);

/// Union of the last two arguments, arity n -> n+1:
/// Qu(Y1..Yn,Yn+1) = Q(Y1,...,Yn u Yn+1).
SemiFuzzyQuantifier union_arg(const SemiFuzzyQuantifier& q);

/// Intersection of the last two arguments, arity n -> n+1.
SemiFuzzyQuantifier intersection_arg(const SemiFuzzyQuantifier& q);

/// Swap arguments i and i+1 (0-based).
SemiFuzzyQuantifier transpose_args(const SemiFuzzyQuantifier& q, std::size_t i);

/// Fix the last argument to the crisp set a, arity n -> n-1.
SemiFuzzyQuantifier crisp_arg_insertion(const SemiFuzzyQuantifier& q, const CrispSet& a);

/// Fix the last argument to the fuzzy set a, arity n+1 -> n. The resulting
/// kernel is the mass-weighted average over crisp stand-ins for a:
///   (Q <| a)(Y1..Yn) = sum_Z mass(a, Z) * Q(Y1..Yn, Z),
/// which costs O(2^m) per kernel call for a general Q. For crisp a the mass
/// is one-hot and this degrades exactly to crisp_arg_insertion.
SemiFuzzyQuantifier fuzzy_arg_insertion(const SemiFuzzyQuantifier& q, const FuzzySet& a);

/// The fuzzy truth function the model induces from f, obtained by
/// evaluating the table quantifier Q_f on the universe {1..n} at the
/// diagonal fuzzy set with grades (x1..xn). The induced connectives come
/// out as: identity, standard negation, product t-norm, probabilistic sum,
/// and the Reichenbach implication.
class InducedConnective {
public:
    explicit InducedConnective(TruthFunction f);

    double operator()(std::span<const double> xs) const;
    double operator()(double x) const;
    double operator()(double x1, double x2) const;

    std::size_t arity() const { return arity_; }

private:
    std::size_t arity_;
    SemiFuzzyQuantifier q_;  // table quantifier on a universe of size arity
};

InducedConnective induce_connective(TruthFunction f);

/// The extension principle the model induces for an index map f: E' -> E
/// (map[i] = image of element i). The image grade is the probabilistic OR
/// over the preimage:
///   mu(e) = 1 - prod_{e' in f^-1(e)} (1 - mu_X(e')),
/// and 0 where the preimage is empty. O(|E'|).
FuzzySet extension_principle(std::span<const std::size_t> map, const FuzzySet& x,
                             const Universe& target);

/// Image-set composition Q o (f1 x ... x fn): the quantifier on E' whose
/// kernel applies each index map to its argument set and then calls Q.
SemiFuzzyQuantifier compose_with_maps(const SemiFuzzyQuantifier& q,
                                      std::vector<std::vector<std::size_t>> maps,
                                      Universe domain);

}  // namespace fquant
