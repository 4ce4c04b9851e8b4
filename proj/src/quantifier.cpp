#include "fquant/quantifier.hpp"

#include "fquant/errors.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fquant {

namespace {

constexpr std::size_t kTableGuardBits = 20;

void require_unit_value(double v, const char* where) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(where) + ": kernel value " + std::to_string(v) +
                                    " outside [0,1]");
    }
}

}  // namespace

SemiFuzzyQuantifier::SemiFuzzyQuantifier(std::string name, Universe universe, std::size_t arity,
                                         Kernel kernel)
    : name_(std::move(name)), universe_(std::move(universe)), arity_(arity),
      kernel_(std::move(kernel)) {
    const std::size_t m = universe_.size();
    if (const auto* uq = std::get_if<UnaryQuantitative>(&kernel_)) {
        if (arity_ != 1) {
            throw std::invalid_argument(name_ + ": unary quantitative kernel with arity " +
                                        std::to_string(arity_));
        }
        if (uq->table.size() != m + 1) {
            throw std::invalid_argument(name_ + ": quantitative table needs " +
                                        std::to_string(m + 1) + " entries, got " +
                                        std::to_string(uq->table.size()));
        }
        for (double v : uq->table) require_unit_value(v, name_.c_str());
    } else if (const auto* bp = std::get_if<BinaryProportional>(&kernel_)) {
        if (arity_ != 2) {
            throw std::invalid_argument(name_ + ": binary proportional kernel with arity " +
                                        std::to_string(arity_));
        }
        require_unit_value(bp->empty_case, name_.c_str());
    } else if (std::holds_alternative<BinaryAbsolute>(kernel_)) {
        if (arity_ != 2) {
            throw std::invalid_argument(name_ + ": binary absolute kernel with arity " +
                                        std::to_string(arity_));
        }
    } else if (const auto* tb = std::get_if<Table>(&kernel_)) {
        if (arity_ * m > kTableGuardBits) {
            throw std::invalid_argument(name_ + ": table kernel limited to arity*m <= " +
                                        std::to_string(kTableGuardBits) + " bits");
        }
        const std::size_t want = std::size_t{1} << (arity_ * m);
        if (tb->values.size() != want) {
            throw std::invalid_argument(name_ + ": table needs " + std::to_string(want) +
                                        " entries, got " + std::to_string(tb->values.size()));
        }
        for (double v : tb->values) require_unit_value(v, name_.c_str());
    }
}

double SemiFuzzyQuantifier::operator()(std::span<const CrispSet> args) const {
    if (args.size() != arity_) {
        throw std::invalid_argument(name_ + ": expected " + std::to_string(arity_) +
                                    " arguments, got " + std::to_string(args.size()));
    }
    for (const CrispSet& y : args) {
        require_same_universe(universe_, y.universe(), name_.c_str());
    }
    struct Visitor {
        const SemiFuzzyQuantifier& q;
        std::span<const CrispSet> args;

        double operator()(const General& k) const { return k.fn(args); }
        double operator()(const Table& k) const {
            const std::size_t m = q.universe_.size();
            std::size_t index = 0;
            for (std::size_t a = 0; a < args.size(); ++a) {
                index |= static_cast<std::size_t>(args[a].to_mask()) << (a * m);
            }
            return k.values[index];
        }
        double operator()(const UnaryQuantitative& k) const { return k.table[args[0].count()]; }
        double operator()(const BinaryProportional& k) const {
            const std::size_t c1 = args[0].count();
            if (c1 == 0) return k.empty_case;
            const std::size_t ci = CrispSet::intersection_count(args[0], args[1]);
            return k.fn(static_cast<double>(ci) / static_cast<double>(c1));
        }
        double operator()(const BinaryAbsolute& k) const {
            return k.fn(static_cast<double>(CrispSet::intersection_count(args[0], args[1])));
        }
    };
    return std::visit(Visitor{*this, args}, kernel_);
}

double SemiFuzzyQuantifier::operator()(const CrispSet& y) const {
    return (*this)(std::span<const CrispSet>(&y, 1));
}

double SemiFuzzyQuantifier::operator()(const CrispSet& y1, const CrispSet& y2) const {
    const std::array<CrispSet, 2> args{y1, y2};
    return (*this)(std::span<const CrispSet>(args.data(), args.size()));
}

SemiFuzzyQuantifier make_exists(Universe universe) {
    std::vector<double> q(universe.size() + 1, 1.0);
    q[0] = 0.0;
    return make_unary_quantitative("exists", std::move(universe), std::move(q));
}

SemiFuzzyQuantifier make_forall(Universe universe) {
    std::vector<double> q(universe.size() + 1, 0.0);
    q.back() = 1.0;
    return make_unary_quantitative("forall", std::move(universe), std::move(q));
}

SemiFuzzyQuantifier make_identity(Universe universe) {
    const std::size_t m = universe.size();
    if (m == 0) {
        throw std::invalid_argument("make_identity: undefined on the empty universe");
    }
    std::vector<double> q(m + 1);
    for (std::size_t j = 0; j <= m; ++j) q[j] = static_cast<double>(j) / static_cast<double>(m);
    return make_unary_quantitative("identity", std::move(universe), std::move(q));
}

SemiFuzzyQuantifier make_unary_quantitative(std::string name, Universe universe,
                                            std::vector<double> table) {
    return SemiFuzzyQuantifier(
        std::move(name), universe, 1,
        SemiFuzzyQuantifier::UnaryQuantitative{std::move(table), std::nullopt});
}

SemiFuzzyQuantifier make_unary_proportional(std::string name, Universe universe, FuzzyNumber fn) {
    const std::size_t m = universe.size();
    if (m == 0) {
        throw std::invalid_argument("make_unary_proportional: undefined on the empty universe");
    }
    std::vector<double> table(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        table[j] = fn(static_cast<double>(j) / static_cast<double>(m));
    }
    return SemiFuzzyQuantifier(
        std::move(name), universe, 1,
        SemiFuzzyQuantifier::UnaryQuantitative{std::move(table), std::move(fn)});
}

SemiFuzzyQuantifier make_binary_proportional(std::string name, Universe universe, FuzzyNumber fn,
                                             double empty_case) {
    return SemiFuzzyQuantifier(std::move(name), std::move(universe), 2,
                               SemiFuzzyQuantifier::BinaryProportional{std::move(fn), empty_case});
}

SemiFuzzyQuantifier make_binary_absolute(std::string name, Universe universe, FuzzyNumber fn) {
    return SemiFuzzyQuantifier(std::move(name), std::move(universe), 2,
                               SemiFuzzyQuantifier::BinaryAbsolute{std::move(fn)});
}

SemiFuzzyQuantifier make_table(std::string name, Universe universe, std::size_t arity,
                               std::vector<double> values) {
    return SemiFuzzyQuantifier(std::move(name), std::move(universe), arity,
                               SemiFuzzyQuantifier::Table{std::move(values)});
}

SemiFuzzyQuantifier make_callback(std::string name, Universe universe, std::size_t arity,
                                  SemiFuzzyQuantifier::GeneralFn fn) {
    return SemiFuzzyQuantifier(std::move(name), std::move(universe), arity,
                               SemiFuzzyQuantifier::General{std::move(fn)});
}

SemiFuzzyQuantifier make_all(Universe universe) {
    return make_callback("all", std::move(universe), 2, [](std::span<const CrispSet> ys) {
        return ys[0].is_subset_of(ys[1]) ? 1.0 : 0.0;
    });
}

SemiFuzzyQuantifier make_some(Universe universe) {
    return make_callback("some", std::move(universe), 2, [](std::span<const CrispSet> ys) {
        return CrispSet::intersection_count(ys[0], ys[1]) > 0 ? 1.0 : 0.0;
    });
}

SemiFuzzyQuantifier make_no(Universe universe) {
    return make_callback("no", std::move(universe), 2, [](std::span<const CrispSet> ys) {
        return CrispSet::intersection_count(ys[0], ys[1]) == 0 ? 1.0 : 0.0;
    });
}

SemiFuzzyQuantifier make_projection(Universe universe, std::size_t element) {
    if (element >= universe.size()) {
        throw std::out_of_range("make_projection: element index out of range");
    }
    return make_callback("projection_" + std::to_string(element), std::move(universe), 1,
                         [element](std::span<const CrispSet> ys) {
                             return ys[0].contains(element) ? 1.0 : 0.0;
                         });
}

std::vector<SemiFuzzyQuantifier> make_ruspini_partition(Universe universe) {
    const double third = 1.0 / 3.0;
    std::vector<SemiFuzzyQuantifier> qs;
    qs.push_back(make_binary_proportional(
        "at_most_about_20pct", universe,
        FuzzyNumber::trapezoid(0.0, 0.0, 0.2, 0.4, /*unbounded_left=*/true), third));
    qs.push_back(make_binary_proportional("about_between_20pct_and_80pct", universe,
                                          FuzzyNumber::trapezoid(0.2, 0.4, 0.6, 0.8), third));
    qs.push_back(make_binary_proportional(
        "at_least_about_80pct", universe,
        FuzzyNumber::trapezoid(0.6, 0.8, 1.0, 1.0, false, /*unbounded_right=*/true), third));
    return qs;
}

std::vector<double> materialize(const SemiFuzzyQuantifier& q) {
    const std::size_t m = q.universe().size();
    const std::size_t bits = q.arity() * m;
    if (bits > kTableGuardBits) {
        throw std::invalid_argument("materialize: arity*m exceeds " +
                                    std::to_string(kTableGuardBits) + " bits");
    }
    std::vector<double> values(std::size_t{1} << bits);
    std::vector<CrispSet> args(q.arity(), CrispSet(q.universe()));
    const std::size_t arg_span = std::size_t{1} << m;
    for (std::size_t index = 0; index < values.size(); ++index) {
        std::size_t rest = index;
        for (std::size_t a = 0; a < q.arity(); ++a) {
            args[a] = CrispSet::from_mask(q.universe(), rest % arg_span);
            rest /= arg_span;
        }
        values[index] = q(args);
    }
    return values;
}

}  // namespace fquant
