#pragma once

#include "fquant/asymptotics.hpp"
#include "fquant/evaluate.hpp"
#include "fquant/fuzzy_number.hpp"
#include "fquant/fuzzy_set.hpp"
#include "fquant/quantifier.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fquant {

/// A declarative evaluation problem:
///   { "universe":   {"size": int, "labels": [str]?},
///     "sets":       {"name": [grades...]},
///     "quantifier": {"kind": "unary_quantitative" | "binary_proportional" |
///                            "binary_absolute" | "table",
///                    "fuzzy_number": {"shape": "T"|"S"|"exists"|"forall"|"constant",
///                                     "params": [...]}?,
///                    "empty_case": real?,
///                    "table": {...}?},
///     "arguments":  [set names...],
///     "strategy":   "auto"|"exact"|"dp"|"limit" }
///
/// Trapezoid shoulders may be the strings "-inf"/"inf" instead of numbers;
/// they parse to the unbounded-shoulder flags.
struct Problem {
    Universe universe;
    std::vector<std::pair<std::string, FuzzySet>> sets;  // declaration order kept
    SemiFuzzyQuantifier quantifier;
    std::vector<std::string> arguments;
    Strategy strategy = Strategy::Auto;

    /// Argument sets in order, looked up by name.
    std::vector<FuzzySet> resolve_arguments() const;
};

Problem parse_problem(const nlohmann::json& doc);
Problem load_problem(const std::string& path);
nlohmann::json serialize_problem(const Problem& p);

/// Temporal statement file:
///   { "signal": {"t0": real, "t1": real, "samples": [...]},
///     "label":  fuzzy_number, "grid": int,
///     "quantifier": {"kind": "unary_quantitative", "fuzzy_number": ...} }
struct TemporalProblem {
    SampledSignal signal;
    FuzzyNumber label;
    FuzzyNumber quantifier;
    std::size_t grid;
};

TemporalProblem parse_temporal(const nlohmann::json& doc);
TemporalProblem load_temporal(const std::string& path);

/// Population statement file:
///   { "samples": [...], "label": fuzzy_number,
///     "quantifier": {"kind": "unary_quantitative", "fuzzy_number": ...} }
struct PopulationProblem {
    std::vector<double> samples;
    FuzzyNumber label;
    FuzzyNumber quantifier;
};

PopulationProblem parse_population(const nlohmann::json& doc);
PopulationProblem load_population(const std::string& path);

FuzzyNumber fuzzy_number_from_json(const nlohmann::json& node, const std::string& path);
nlohmann::json fuzzy_number_to_json(const FuzzyNumber& fn);

}  // namespace fquant
