#include "fquant/problem_io.hpp"

#include "fquant/errors.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <utility>

namespace fquant {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path.empty() ? what : path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

const json* optional_field(const json& obj, const char* key) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double number(const json& node, const std::string& path) {
    if (!node.is_number()) fail(path, "expected a number");
    return node.get<double>();
}

double unit_number(const json& node, const std::string& path) {
    const double v = number(node, path);
    if (!(v >= 0.0 && v <= 1.0)) {
        fail(path, "value " + std::to_string(v) + " outside [0,1]");
    }
    return v;
}

std::size_t non_negative_integer(const json& node, const std::string& path) {
    if (node.is_number_unsigned()) return node.get<std::size_t>();
    if (node.is_number_integer() && node.get<long long>() >= 0) {
        return static_cast<std::size_t>(node.get<long long>());
    }
    fail(path, "expected a non-negative integer");
}

std::vector<double> grade_vector(const json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected an array of grades");
    std::vector<double> g;
    g.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        const double v = number(node[i], at);
        if (!(v >= 0.0 && v <= 1.0)) {
            fail(at, "grade " + std::to_string(v) + " outside [0,1]");
        }
        g.push_back(v);
    }
    return g;
}

// Shoulder parameters accept the strings "-inf"/"inf" as portable stand-ins
// for unbounded trapezoid shoulders.
struct ShoulderParam {
    double value = 0.0;
    bool unbounded = false;
};

ShoulderParam shoulder(const json& node, const std::string& path) {
    if (node.is_string()) {
        const auto s = node.get<std::string>();
        if (s == "-inf" || s == "inf") return {0.0, true};
        fail(path, "expected a number or \"-inf\"/\"inf\", got \"" + s + "\"");
    }
    return {number(node, path), false};
}

json read_document(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file + ": cannot open");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError(file + ": " + e.what());
    }
    return doc;
}

SemiFuzzyQuantifier quantifier_from_json(const json& node, const Universe& universe,
                                         const std::string& path) {
    const json& kind_node = field(node, "kind", path);
    if (!kind_node.is_string()) fail(path + ".kind", "expected a string");
    const std::string kind = kind_node.get<std::string>();
    std::string name = kind;
    if (const json* n = optional_field(node, "name")) {
        if (!n->is_string()) fail(path + ".name", "expected a string");
        name = n->get<std::string>();
    }

    if (kind == "unary_quantitative") {
        const json* table = optional_field(node, "table");
        const json* fn = optional_field(node, "fuzzy_number");
        if ((table != nullptr) == (fn != nullptr)) {
            fail(path, "unary_quantitative needs exactly one of \"table\" or \"fuzzy_number\"");
        }
        if (table) {
            if (!table->is_array()) fail(path + ".table", "expected an array");
            std::vector<double> values;
            for (std::size_t i = 0; i < table->size(); ++i) {
                values.push_back(
                    unit_number((*table)[i], path + ".table[" + std::to_string(i) + "]"));
            }
            if (values.size() != universe.size() + 1) {
                fail(path + ".table", "needs " + std::to_string(universe.size() + 1) +
                                          " entries (one per cardinality)");
            }
            return make_unary_quantitative(std::move(name), universe, std::move(values));
        }
        return make_unary_proportional(std::move(name), universe,
                                       fuzzy_number_from_json(*fn, path + ".fuzzy_number"));
    }
    if (kind == "binary_proportional") {
        const FuzzyNumber fn =
            fuzzy_number_from_json(field(node, "fuzzy_number", path), path + ".fuzzy_number");
        const double empty_case = unit_number(field(node, "empty_case", path), path + ".empty_case");
        return make_binary_proportional(std::move(name), universe, fn, empty_case);
    }
    if (kind == "binary_absolute") {
        const FuzzyNumber fn =
            fuzzy_number_from_json(field(node, "fuzzy_number", path), path + ".fuzzy_number");
        return make_binary_absolute(std::move(name), universe, fn);
    }
    if (kind == "table") {
        const json& spec = field(node, "table", path);
        const std::size_t arity =
            non_negative_integer(field(spec, "arity", path + ".table"), path + ".table.arity");
        const json& values_node = field(spec, "values", path + ".table");
        if (!values_node.is_array()) fail(path + ".table.values", "expected an array");
        std::vector<double> values;
        for (std::size_t i = 0; i < values_node.size(); ++i) {
            values.push_back(
                unit_number(values_node[i], path + ".table.values[" + std::to_string(i) + "]"));
        }
        try {
            return make_table(std::move(name), universe, arity, std::move(values));
        } catch (const std::invalid_argument& e) {
            fail(path + ".table", e.what());
        }
    }
    fail(path + ".kind", "unknown kind \"" + kind + "\"");
}

json quantifier_to_json(const SemiFuzzyQuantifier& q) {
    json node;
    node["name"] = q.name();
    if (const auto* uq = q.unary_quantitative()) {
        node["kind"] = "unary_quantitative";
        if (uq->proportional) {
            node["fuzzy_number"] = fuzzy_number_to_json(*uq->proportional);
        } else {
            node["table"] = uq->table;
        }
        return node;
    }
    if (const auto* bp = q.binary_proportional()) {
        node["kind"] = "binary_proportional";
        node["fuzzy_number"] = fuzzy_number_to_json(bp->fn);
        node["empty_case"] = bp->empty_case;
        return node;
    }
    if (const auto* ba = q.binary_absolute()) {
        node["kind"] = "binary_absolute";
        node["fuzzy_number"] = fuzzy_number_to_json(ba->fn);
        return node;
    }
    if (const auto* tb = q.table()) {
        node["kind"] = "table";
        node["table"] = json{{"arity", q.arity()}, {"values", tb->values}};
        return node;
    }
    throw std::logic_error("quantifier_to_json: callback kernels are not serializable");
}

}  // namespace

FuzzyNumber fuzzy_number_from_json(const json& node, const std::string& path) {
    const json& shape_node = field(node, "shape", path);
    if (!shape_node.is_string()) fail(path + ".shape", "expected a string");
    const std::string shape = shape_node.get<std::string>();
    const json* params = optional_field(node, "params");
    auto param_at = [&](std::size_t i) -> const json& {
        if (!params || !params->is_array() || i >= params->size()) {
            fail(path + ".params", "shape \"" + shape + "\" needs parameter " + std::to_string(i));
        }
        return (*params)[i];
    };

    if (shape == "T") {
        const ShoulderParam a = shoulder(param_at(0), path + ".params[0]");
        const double b = number(param_at(1), path + ".params[1]");
        const double c = number(param_at(2), path + ".params[2]");
        const ShoulderParam d = shoulder(param_at(3), path + ".params[3]");
        if (a.unbounded && param_at(0).get<std::string>() != "-inf") {
            fail(path + ".params[0]", "left shoulder must be a number or \"-inf\"");
        }
        if (d.unbounded && param_at(3).get<std::string>() != "inf") {
            fail(path + ".params[3]", "right shoulder must be a number or \"inf\"");
        }
        try {
            return FuzzyNumber::trapezoid(a.unbounded ? b : a.value, b, c,
                                          d.unbounded ? c : d.value, a.unbounded, d.unbounded);
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
        }
    }
    if (shape == "S") {
        const double alpha = number(param_at(0), path + ".params[0]");
        const double gamma = number(param_at(1), path + ".params[1]");
        try {
            return FuzzyNumber::smooth_step(alpha, gamma);
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
        }
    }
    if (shape == "exists") return FuzzyNumber::crisp_exists();
    if (shape == "forall") return FuzzyNumber::crisp_forall();
    if (shape == "constant") {
        const double v = unit_number(param_at(0), path + ".params[0]");
        return FuzzyNumber::constant(v);
    }
    fail(path + ".shape", "unknown shape \"" + shape + "\"");
}

json fuzzy_number_to_json(const FuzzyNumber& fn) {
    json node;
    switch (fn.shape()) {
        case FuzzyNumber::Shape::Trapezoid: {
            node["shape"] = "T";
            json params = json::array();
            if (fn.unbounded_left()) {
                params.push_back("-inf");
            } else {
                params.push_back(fn.params()[0]);
            }
            params.push_back(fn.params()[1]);
            params.push_back(fn.params()[2]);
            if (fn.unbounded_right()) {
                params.push_back("inf");
            } else {
                params.push_back(fn.params()[3]);
            }
            node["params"] = std::move(params);
            return node;
        }
        case FuzzyNumber::Shape::SmoothStep:
            node["shape"] = "S";
            node["params"] = fn.params();
            return node;
        case FuzzyNumber::Shape::CrispExists:
            node["shape"] = "exists";
            node["params"] = json::array();
            return node;
        case FuzzyNumber::Shape::CrispForall:
            node["shape"] = "forall";
            node["params"] = json::array();
            return node;
        case FuzzyNumber::Shape::Constant:
            node["shape"] = "constant";
            node["params"] = fn.params();
            return node;
        case FuzzyNumber::Shape::Sampled:
            throw std::logic_error("fuzzy_number_to_json: sampled shapes are not serializable");
    }
    throw std::logic_error("fuzzy_number_to_json: unknown shape");
}

std::vector<FuzzySet> Problem::resolve_arguments() const {
    std::vector<FuzzySet> xs;
    xs.reserve(arguments.size());
    for (const std::string& name : arguments) {
        const FuzzySet* found = nullptr;
        for (const auto& [set_name, set] : sets) {
            if (set_name == name) {
                found = &set;
                break;
            }
        }
        if (!found) throw ParseError("arguments: unknown set \"" + name + "\"");
        xs.push_back(*found);
    }
    return xs;
}

Problem parse_problem(const json& doc) {
    const json& universe_node = field(doc, "universe", "");
    const std::size_t size =
        non_negative_integer(field(universe_node, "size", "universe"), "universe.size");
    Universe universe(size);
    if (const json* labels_node = optional_field(universe_node, "labels")) {
        if (!labels_node->is_array()) fail("universe.labels", "expected an array");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < labels_node->size(); ++i) {
            const json& l = (*labels_node)[i];
            if (!l.is_string()) fail("universe.labels[" + std::to_string(i) + "]", "expected a string");
            labels.push_back(l.get<std::string>());
        }
        try {
            universe = Universe(size, std::move(labels));
        } catch (const std::invalid_argument& e) {
            fail("universe.labels", e.what());
        }
    }

    std::vector<std::pair<std::string, FuzzySet>> sets;
    const json& sets_node = field(doc, "sets", "");
    if (!sets_node.is_object()) fail("sets", "expected an object of name -> grades");
    for (const auto& [name, grades_node] : sets_node.items()) {
        std::vector<double> grades = grade_vector(grades_node, "sets." + name);
        if (grades.size() != size) {
            fail("sets." + name, "expected " + std::to_string(size) + " grades, got " +
                                     std::to_string(grades.size()));
        }
        sets.emplace_back(name, FuzzySet(universe, std::move(grades)));
    }

    SemiFuzzyQuantifier quantifier =
        quantifier_from_json(field(doc, "quantifier", ""), universe, "quantifier");

    std::vector<std::string> arguments;
    const json& args_node = field(doc, "arguments", "");
    if (!args_node.is_array()) fail("arguments", "expected an array of set names");
    for (const auto& a : args_node) {
        if (!a.is_string()) fail("arguments", "expected set names");
        arguments.push_back(a.get<std::string>());
    }
    if (arguments.size() != quantifier.arity()) {
        fail("arguments", "quantifier arity " + std::to_string(quantifier.arity()) + " but " +
                              std::to_string(arguments.size()) + " arguments listed");
    }

    Strategy strategy = Strategy::Auto;
    if (const json* s = optional_field(doc, "strategy")) {
        if (!s->is_string()) fail("strategy", "expected a string");
        try {
            strategy = strategy_from_string(s->get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail("strategy", e.what());
        }
    }

    Problem p{std::move(universe), std::move(sets), std::move(quantifier), std::move(arguments),
              strategy};
    p.resolve_arguments();  // validate the references now
    return p;
}

Problem load_problem(const std::string& path) { return parse_problem(read_document(path)); }

json serialize_problem(const Problem& p) {
    json doc;
    doc["universe"]["size"] = p.universe.size();
    if (p.universe.has_labels()) {
        doc["universe"]["labels"] = *p.universe.labels();
    }
    json sets = json::object();
    for (const auto& [name, set] : p.sets) {
        sets[name] = std::vector<double>(set.grades().begin(), set.grades().end());
    }
    doc["sets"] = std::move(sets);
    doc["quantifier"] = quantifier_to_json(p.quantifier);
    doc["arguments"] = p.arguments;
    doc["strategy"] = to_string(p.strategy);
    return doc;
}

TemporalProblem parse_temporal(const json& doc) {
    const json& signal_node = field(doc, "signal", "");
    const double t0 = number(field(signal_node, "t0", "signal"), "signal.t0");
    const double t1 = number(field(signal_node, "t1", "signal"), "signal.t1");
    const json& samples_node = field(signal_node, "samples", "signal");
    if (!samples_node.is_array() || samples_node.empty()) {
        fail("signal.samples", "expected a non-empty array");
    }
    std::vector<double> samples;
    for (std::size_t i = 0; i < samples_node.size(); ++i) {
        samples.push_back(number(samples_node[i], "signal.samples[" + std::to_string(i) + "]"));
    }
    const FuzzyNumber label = fuzzy_number_from_json(field(doc, "label", ""), "label");
    const std::size_t grid = non_negative_integer(field(doc, "grid", ""), "grid");
    if (grid == 0) fail("grid", "must be at least 1");

    const json& q_node = field(doc, "quantifier", "");
    const json& kind = field(q_node, "kind", "quantifier");
    if (!kind.is_string() || kind.get<std::string>() != "unary_quantitative") {
        fail("quantifier.kind", "temporal evaluation needs a unary_quantitative quantifier");
    }
    const json* fn_node = optional_field(q_node, "fuzzy_number");
    if (!fn_node) {
        fail("quantifier", "temporal evaluation needs a proportional fuzzy_number");
    }
    const FuzzyNumber fn = fuzzy_number_from_json(*fn_node, "quantifier.fuzzy_number");

    try {
        return TemporalProblem{SampledSignal(t0, t1, std::move(samples)), label, fn, grid};
    } catch (const std::invalid_argument& e) {
        fail("signal", e.what());
    }
}

TemporalProblem load_temporal(const std::string& path) {
    return parse_temporal(read_document(path));
}

PopulationProblem parse_population(const json& doc) {
    const json& samples_node = field(doc, "samples", "");
    if (!samples_node.is_array() || samples_node.empty()) {
        fail("samples", "expected a non-empty array");
    }
    std::vector<double> samples;
    for (std::size_t i = 0; i < samples_node.size(); ++i) {
        samples.push_back(number(samples_node[i], "samples[" + std::to_string(i) + "]"));
    }
    const FuzzyNumber label = fuzzy_number_from_json(field(doc, "label", ""), "label");

    const json& q_node = field(doc, "quantifier", "");
    const json& kind = field(q_node, "kind", "quantifier");
    if (!kind.is_string() || kind.get<std::string>() != "unary_quantitative") {
        fail("quantifier.kind", "population evaluation needs a unary_quantitative quantifier");
    }
    const json* fn_node = optional_field(q_node, "fuzzy_number");
    if (!fn_node) {
        fail("quantifier", "population evaluation needs a proportional fuzzy_number");
    }
    const FuzzyNumber fn = fuzzy_number_from_json(*fn_node, "quantifier.fuzzy_number");
    return PopulationProblem{std::move(samples), label, fn};
}

PopulationProblem load_population(const std::string& path) {
    return parse_population(read_document(path));
}

}  // namespace fquant
