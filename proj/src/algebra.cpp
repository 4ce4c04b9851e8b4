#include "fquant/algebra.hpp"

#include "fquant/errors.hpp"
#include "fquant/evaluate.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>

namespace fquant {

namespace {

using UQ = SemiFuzzyQuantifier::UnaryQuantitative;

/// Visits every crisp subset of a fuzzy set's universe together with its
/// representative mass, mutating `z` in place. Branches with mass zero are
/// pruned, so a crisp set visits exactly one subset with mass one.
template <class F>
void for_each_representative(const FuzzySet& a, CrispSet& z, std::size_t e, double prod, F&& f) {
    if (e == a.size()) {
        f(prod, z);
        return;
    }
    const double g = a.grade(e);
    if (g < 1.0) {
        z.set(e, false);
        for_each_representative(a, z, e + 1, prod * (1.0 - g), f);
    }
    if (g > 0.0) {
        z.set(e, true);
        for_each_representative(a, z, e + 1, prod * g, f);
    }
}

}  // namespace

TruthFunction::TruthFunction(std::size_t arity_in, std::vector<double> table_in)
    : arity(arity_in), table(std::move(table_in)) {
    if (arity > 20) {
        throw std::invalid_argument("TruthFunction: arity above the 20-bit table bound");
    }
    if (table.size() != (std::size_t{1} << arity)) {
        throw std::invalid_argument("TruthFunction: table needs 2^arity entries");
    }
    for (double v : table) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("TruthFunction: value outside [0,1]");
        }
    }
}

TruthFunction TruthFunction::negation() { return TruthFunction(1, {1.0, 0.0}); }
TruthFunction TruthFunction::identity() { return TruthFunction(1, {0.0, 1.0}); }
TruthFunction TruthFunction::conjunction() { return TruthFunction(2, {0.0, 0.0, 0.0, 1.0}); }
TruthFunction TruthFunction::disjunction() { return TruthFunction(2, {0.0, 1.0, 1.0, 1.0}); }
TruthFunction TruthFunction::implication() { return TruthFunction(2, {1.0, 0.0, 1.0, 1.0}); }

SemiFuzzyQuantifier external_negation(const SemiFuzzyQuantifier& q) {
    if (const auto* uq = q.unary_quantitative()) {
        std::vector<double> table(uq->table.size());
        for (std::size_t j = 0; j < table.size(); ++j) table[j] = 1.0 - uq->table[j];
        return make_unary_quantitative("not_" + q.name(), q.universe(), std::move(table));
    }
    return make_callback("not_" + q.name(), q.universe(), q.arity(),
                         [q](std::span<const CrispSet> ys) { return 1.0 - q(ys); });
}

SemiFuzzyQuantifier internal_negation(const SemiFuzzyQuantifier& q) {
    if (q.arity() == 0) {
        throw std::invalid_argument("internal_negation: needs at least one argument");
    }
    if (const auto* uq = q.unary_quantitative()) {
        // Complementing the argument flips the cardinality: q'(j) = q(m - j).
        std::vector<double> table(uq->table.rbegin(), uq->table.rend());
        return make_unary_quantitative(q.name() + "_antonym", q.universe(), std::move(table));
    }
    return make_callback(q.name() + "_antonym", q.universe(), q.arity(),
                         [q](std::span<const CrispSet> ys) {
                             std::vector<CrispSet> mod(ys.begin(), ys.end());
                             mod.back() = mod.back().complement();
                             return q(mod);
                         });
}

SemiFuzzyQuantifier dual(const SemiFuzzyQuantifier& q) {
    return external_negation(internal_negation(q));
}

SemiFuzzyQuantifier union_arg(const SemiFuzzyQuantifier& q) {
    if (q.arity() == 0) {
        throw std::invalid_argument("union_arg: needs at least one argument");
    }
    return make_callback(q.name() + "_union", q.universe(), q.arity() + 1,
                         [q](std::span<const CrispSet> ys) {
                             std::vector<CrispSet> mod(ys.begin(), ys.end() - 1);
                             mod.back() = mod.back() | ys.back();
                             return q(mod);
                         });
}

SemiFuzzyQuantifier intersection_arg(const SemiFuzzyQuantifier& q) {
    if (q.arity() == 0) {
        throw std::invalid_argument("intersection_arg: needs at least one argument");
    }
    return make_callback(q.name() + "_intersection", q.universe(), q.arity() + 1,
                         [q](std::span<const CrispSet> ys) {
                             std::vector<CrispSet> mod(ys.begin(), ys.end() - 1);
                             mod.back() = mod.back() & ys.back();
                             return q(mod);
                         });
}

SemiFuzzyQuantifier transpose_args(const SemiFuzzyQuantifier& q, std::size_t i) {
    if (i + 1 >= q.arity()) {
        throw std::invalid_argument("transpose_args: position " + std::to_string(i) +
                                    " out of range for arity " + std::to_string(q.arity()));
    }
    return make_callback(q.name() + "_transposed", q.universe(), q.arity(),
                         [q, i](std::span<const CrispSet> ys) {
                             std::vector<CrispSet> mod(ys.begin(), ys.end());
                             std::swap(mod[i], mod[i + 1]);
                             return q(mod);
                         });
}

SemiFuzzyQuantifier crisp_arg_insertion(const SemiFuzzyQuantifier& q, const CrispSet& a) {
    if (q.arity() == 0) {
        throw std::invalid_argument("crisp_arg_insertion: needs at least one argument");
    }
    require_same_universe(q.universe(), a.universe(), "crisp_arg_insertion");
    return make_callback(q.name() + "_fixed", q.universe(), q.arity() - 1,
                         [q, a](std::span<const CrispSet> ys) {
                             std::vector<CrispSet> mod(ys.begin(), ys.end());
                             mod.push_back(a);
                             return q(mod);
                         });
}

SemiFuzzyQuantifier fuzzy_arg_insertion(const SemiFuzzyQuantifier& q, const FuzzySet& a) {
    if (q.arity() == 0) {
        throw std::invalid_argument("fuzzy_arg_insertion: needs at least one argument");
    }
    require_same_universe(q.universe(), a.universe(), "fuzzy_arg_insertion");
    // Each kernel call averages Q over the 2^m crisp stand-ins for `a`.
    return make_callback(q.name() + "_fuzzy_fixed", q.universe(), q.arity() - 1,
                         [q, a](std::span<const CrispSet> ys) {
                             std::vector<CrispSet> mod(ys.begin(), ys.end());
                             mod.push_back(CrispSet(a.universe()));
                             double acc = 0.0;
                             for_each_representative(
                                 a, mod.back(), 0, 1.0,
                                 [&](double mass_z, const CrispSet&) { acc += mass_z * q(mod); });
                             return acc;
                         });
}

InducedConnective::InducedConnective(TruthFunction f)
    : arity_(f.arity),
      q_(make_table("induced", Universe(f.arity), 1, std::move(f.table))) {}

double InducedConnective::operator()(std::span<const double> xs) const {
    if (xs.size() != arity_) {
        throw std::invalid_argument("InducedConnective: expected " + std::to_string(arity_) +
                                    " inputs");
    }
    const FuzzySet diag(q_.universe(), std::vector<double>(xs.begin(), xs.end()));
    return eval_exact(q_, diag);
}

double InducedConnective::operator()(double x) const {
    return (*this)(std::span<const double>(&x, 1));
}

double InducedConnective::operator()(double x1, double x2) const {
    const double xs[2] = {x1, x2};
    return (*this)(std::span<const double>(xs, 2));
}

InducedConnective induce_connective(TruthFunction f) { return InducedConnective(std::move(f)); }

FuzzySet extension_principle(std::span<const std::size_t> map, const FuzzySet& x,
                             const Universe& target) {
    if (map.size() != x.size()) {
        throw std::invalid_argument("extension_principle: map covers " +
                                    std::to_string(map.size()) + " elements, set has " +
                                    std::to_string(x.size()));
    }
    // Image grade = probabilistic OR over the preimage, accumulated as the
    // complement product; empty preimages stay at grade 0.
    std::vector<double> miss(target.size(), 1.0);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] >= target.size()) {
            throw std::out_of_range("extension_principle: map[" + std::to_string(i) + "] = " +
                                    std::to_string(map[i]) + " outside the target universe");
        }
        miss[map[i]] *= 1.0 - x.grade(i);
    }
    std::vector<double> g(target.size());
    for (std::size_t e = 0; e < g.size(); ++e) g[e] = 1.0 - miss[e];
    return FuzzySet(target, std::move(g));
}

SemiFuzzyQuantifier compose_with_maps(const SemiFuzzyQuantifier& q,
                                      std::vector<std::vector<std::size_t>> maps,
                                      Universe domain) {
    if (maps.size() != q.arity()) {
        throw std::invalid_argument("compose_with_maps: expected " + std::to_string(q.arity()) +
                                    " maps, got " + std::to_string(maps.size()));
    }
    for (const auto& map : maps) {
        if (map.size() != domain.size()) {
            throw std::invalid_argument("compose_with_maps: map does not cover the domain");
        }
        for (std::size_t image : map) {
            if (image >= q.universe().size()) {
                throw std::out_of_range("compose_with_maps: image index outside the codomain");
            }
        }
    }
    auto shared_maps = std::make_shared<const std::vector<std::vector<std::size_t>>>(
        std::move(maps));
    return make_callback(
        q.name() + "_composed", std::move(domain), q.arity(),
        [q, shared_maps](std::span<const CrispSet> ys) {
            std::vector<CrispSet> images;
            images.reserve(ys.size());
            for (std::size_t a = 0; a < ys.size(); ++a) {
                CrispSet img(q.universe());
                const auto& map = (*shared_maps)[a];
                for (std::size_t i = 0; i < map.size(); ++i) {
                    if (ys[a].contains(i)) img.set(map[i]);
                }
                images.push_back(std::move(img));
            }
            return q(images);
        });
}

}  // namespace fquant
