#include "fquant/fuzzy_set.hpp"

#include <cstddef>
#include <vector>

namespace fquant {

FuzzySet complement(const FuzzySet& x) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = 1.0 - x.grade(i);
    return FuzzySet(x.universe(), std::move(g));
}

FuzzySet intersect_product(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a.universe(), b.universe(), "intersect_product");
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = a.grade(i) * b.grade(i);
    return FuzzySet(a.universe(), std::move(g));
}

FuzzySet union_probabilistic(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a.universe(), b.universe(), "union_probabilistic");
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        // complement-product form: stays in [0,1] under rounding
        g[i] = 1.0 - (1.0 - a.grade(i)) * (1.0 - b.grade(i));
    }
    return FuzzySet(a.universe(), std::move(g));
}

FuzzySet intersect_min(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a.universe(), b.universe(), "intersect_min");
    std::vector<double> g(a.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = a.grade(i) < b.grade(i) ? a.grade(i) : b.grade(i);
    }
    return FuzzySet(a.universe(), std::move(g));
}

double mass(const FuzzySet& x, const CrispSet& y) {
    require_same_universe(x.universe(), y.universe(), "mass");
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        p *= y.contains(i) ? x.grade(i) : 1.0 - x.grade(i);
    }
    return p;
}

FuzzySet restrict(const FuzzySet& x, std::span<const std::size_t> indices) {
    std::vector<double> g;
    g.reserve(indices.size());
    std::vector<std::string> labels;
    if (x.universe().has_labels()) labels.reserve(indices.size());
    for (std::size_t idx : indices) {
        if (idx >= x.size()) {
            throw std::out_of_range("restrict: index " + std::to_string(idx) +
                                    " out of range for universe of size " +
                                    std::to_string(x.size()));
        }
        g.push_back(x.grade(idx));
        if (x.universe().has_labels()) labels.push_back(x.universe().label(idx));
    }
    Universe sub = x.universe().has_labels() ? Universe(indices.size(), std::move(labels))
                                             : Universe(indices.size());
    return FuzzySet(std::move(sub), std::move(g));
}

}  // namespace fquant
