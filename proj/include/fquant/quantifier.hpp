#pragma once

#include "fquant/crisp_set.hpp"
#include "fquant/fuzzy_number.hpp"
#include "fquant/universe.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fquant {

/// An n-ary semi-fuzzy quantifier: a map from n-tuples of crisp subsets of
/// a universe to [0,1]. The kernel representation is tagged so evaluators
/// can pick the cheapest admissible algorithm:
///
///   UnaryQuantitative   value depends only on |Y|; table of m+1 entries.
///                       When the table was produced from a proportional
///                       fuzzy number fn (q(j) = fn(j/m)) that source is
///                       kept so the limit evaluator can use it.
///   BinaryProportional  fn(|Y1 n Y2| / |Y1|) with an explicit value for
///                       Y1 = {} (the empty case is mandatory: common
///                       conventions differ between 1 and 1/3, so no
///                       default is safe).
///   BinaryAbsolute      fn(|Y1 n Y2|).
///   Table               explicit value per argument tuple, indexed by the
///                       concatenated argument masks (arg 0 in the low m
///                       bits). Requires arity*m <= 20 bits.
///   General             arbitrary callback; not serializable.
class SemiFuzzyQuantifier {
public:
    using GeneralFn = std::function<double(std::span<const CrispSet>)>;

    struct UnaryQuantitative {
        std::vector<double> table;                // size m+1
        std::optional<FuzzyNumber> proportional;  // set when table = fn(j/m)
    };
    struct BinaryProportional {
        FuzzyNumber fn;
        double empty_case;
    };
    struct BinaryAbsolute {
        FuzzyNumber fn;
    };
    struct Table {
        std::vector<double> values;  // 2^(arity*m) entries
    };
    struct General {
        GeneralFn fn;
    };
    using Kernel = std::variant<General, Table, UnaryQuantitative, BinaryProportional, BinaryAbsolute>;

    SemiFuzzyQuantifier(std::string name, Universe universe, std::size_t arity, Kernel kernel);

    const std::string& name() const { return name_; }
    const Universe& universe() const { return universe_; }
    std::size_t arity() const { return arity_; }

    double operator()(std::span<const CrispSet> args) const;
    double operator()(const CrispSet& y) const;
    double operator()(const CrispSet& y1, const CrispSet& y2) const;

    const UnaryQuantitative* unary_quantitative() const {
        return std::get_if<UnaryQuantitative>(&kernel_);
    }
    const BinaryProportional* binary_proportional() const {
        return std::get_if<BinaryProportional>(&kernel_);
    }
    const BinaryAbsolute* binary_absolute() const { return std::get_if<BinaryAbsolute>(&kernel_); }
    const Table* table() const { return std::get_if<Table>(&kernel_); }
    bool is_general() const { return std::holds_alternative<General>(kernel_); }

private:
    std::string name_;
    Universe universe_;
    std::size_t arity_;
    Kernel kernel_;
};

// --- constructors ---------------------------------------------------------

/// exists(Y) = [Y != {}]; table q = [0,1,...,1].
SemiFuzzyQuantifier make_exists(Universe universe);

/// forall(Y) = [Y = E]; table q = [0,...,0,1].
SemiFuzzyQuantifier make_forall(Universe universe);

/// identity(Y) = |Y| / |E|. Rejects the empty universe.
SemiFuzzyQuantifier make_identity(Universe universe);

/// Unary quantitative quantifier from an explicit table of m+1 values.
SemiFuzzyQuantifier make_unary_quantitative(std::string name, Universe universe,
                                            std::vector<double> table);

/// Unary proportional quantifier q(j) = fn(j/m). Rejects the empty universe.
SemiFuzzyQuantifier make_unary_proportional(std::string name, Universe universe, FuzzyNumber fn);

/// Binary proportional quantifier fn(|Y1 n Y2|/|Y1|) with explicit value
/// for Y1 = {}.
SemiFuzzyQuantifier make_binary_proportional(std::string name, Universe universe, FuzzyNumber fn,
                                             double empty_case);

/// Binary absolute quantifier fn(|Y1 n Y2|).
SemiFuzzyQuantifier make_binary_absolute(std::string name, Universe universe, FuzzyNumber fn);

/// n-ary quantifier given by an explicit table over all argument tuples
/// (index: arg 0 in the low m bits). Requires arity*m <= 20 bits.
SemiFuzzyQuantifier make_table(std::string name, Universe universe, std::size_t arity,
                               std::vector<double> values);

/// n-ary quantifier from a callback. No structural tag; only the exact
/// evaluator applies.
SemiFuzzyQuantifier make_callback(std::string name, Universe universe, std::size_t arity,
                                  SemiFuzzyQuantifier::GeneralFn fn);

/// all(Y1,Y2) = [Y1 subset of Y2].
SemiFuzzyQuantifier make_all(Universe universe);
/// some(Y1,Y2) = [Y1 n Y2 != {}].
SemiFuzzyQuantifier make_some(Universe universe);
/// no(Y1,Y2) = [Y1 n Y2 = {}].
SemiFuzzyQuantifier make_no(Universe universe);
/// Projection quantifier pi_e(Y) = [e in Y].
SemiFuzzyQuantifier make_projection(Universe universe, std::size_t element);

/// The probabilistic Ruspini partition "at most about 20%" /
/// "about between 20% and 80%" / "at least about 80%", each with empty
/// case 1/3. Their values sum to 1 on every crisp argument pair.
std::vector<SemiFuzzyQuantifier> make_ruspini_partition(Universe universe);

/// Explicit table of a quantifier over all argument tuples (arity*m <= 20).
std::vector<double> materialize(const SemiFuzzyQuantifier& q);

}  // namespace fquant
