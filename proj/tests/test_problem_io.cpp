#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fquant/errors.hpp"
#include "fquant/evaluate.hpp"
#include "fquant/problem_io.hpp"

#include <cmath>
#include <string>

using namespace fquant;
using nlohmann::json;

namespace {

const char* kNearlyAll = R"({
  "universe": {"size": 4, "labels": ["e1", "e2", "e3", "e4"]},
  "sets": {
    "intelligent_workers": [0.8, 0.9, 1.0, 0.2],
    "well_paid": [1.0, 0.8, 0.3, 0.1]
  },
  "quantifier": {
    "name": "nearly_all",
    "kind": "binary_proportional",
    "fuzzy_number": {"shape": "T", "params": [0.5, 1.0, 1.0, 1.0]},
    "empty_case": 1.0
  },
  "arguments": ["intelligent_workers", "well_paid"],
  "strategy": "auto"
})";

}  // namespace

TEST_CASE("parsing and evaluating the nearly-all problem") {
    const Problem p = parse_problem(json::parse(kNearlyAll));
    CHECK(p.universe.size() == 4);
    CHECK(p.universe.label(2) == "e3");
    CHECK(p.quantifier.name() == "nearly_all");
    CHECK(p.strategy == Strategy::Auto);

    const auto args = p.resolve_arguments();
    REQUIRE(args.size() == 2);
    const EvalResult r = evaluate(p.quantifier, args, p.strategy);
    CHECK(r.evaluator_used == Strategy::Dp);
    CHECK(std::abs(r.value - 0.346) <= 5e-4);
    CHECK(r.value ==
          doctest::Approx(eval_exact(p.quantifier, args[0], args[1])).epsilon(1e-9));
}

TEST_CASE("parse errors carry the field path") {
    json doc = json::parse(kNearlyAll);

    SUBCASE("grade outside the unit interval") {
        doc["sets"]["well_paid"][2] = 1.2;
        try {
            parse_problem(doc);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("sets.well_paid[2]") != std::string::npos);
        }
    }

    SUBCASE("missing empty case on a proportional quantifier") {
        doc["quantifier"].erase("empty_case");
        CHECK_THROWS_WITH_AS(parse_problem(doc),
                             doctest::Contains("quantifier.empty_case"), ParseError);
    }

    SUBCASE("wrong grade count") {
        doc["sets"]["well_paid"] = {0.5, 0.5};
        CHECK_THROWS_WITH_AS(parse_problem(doc), doctest::Contains("sets.well_paid"), ParseError);
    }

    SUBCASE("unknown quantifier kind") {
        doc["quantifier"]["kind"] = "ternary";
        CHECK_THROWS_WITH_AS(parse_problem(doc), doctest::Contains("quantifier.kind"), ParseError);
    }

    SUBCASE("unknown argument set") {
        doc["arguments"][1] = "unpaid";
        CHECK_THROWS_WITH_AS(parse_problem(doc), doctest::Contains("unpaid"), ParseError);
    }

    SUBCASE("arity mismatch") {
        doc["arguments"] = {"well_paid"};
        CHECK_THROWS_WITH_AS(parse_problem(doc), doctest::Contains("arity"), ParseError);
    }

    SUBCASE("bad strategy") {
        doc["strategy"] = "psychic";
        CHECK_THROWS_WITH_AS(parse_problem(doc), doctest::Contains("strategy"), ParseError);
    }
}

TEST_CASE("round-trip keeps evaluation results bit-equal") {
    const Problem first = parse_problem(json::parse(kNearlyAll));
    const Problem second = parse_problem(serialize_problem(first));

    const double v1 = evaluate(first.quantifier, first.resolve_arguments(), first.strategy).value;
    const double v2 =
        evaluate(second.quantifier, second.resolve_arguments(), second.strategy).value;
    CHECK(v1 == v2);  // bit-equal doubles

    // And the serialized forms agree with each other.
    CHECK(serialize_problem(first) == serialize_problem(second));
}

TEST_CASE("unbounded trapezoid shoulders round-trip through strings") {
    json doc = json::parse(kNearlyAll);
    doc["quantifier"]["fuzzy_number"] = {{"shape", "T"}, {"params", {"-inf", 0.0, 0.2, 0.4}}};
    const Problem p = parse_problem(doc);
    REQUIRE(p.quantifier.binary_proportional() != nullptr);
    const FuzzyNumber& fn = p.quantifier.binary_proportional()->fn;
    CHECK(fn.unbounded_left());
    CHECK(fn(0.0) == 1.0);
    CHECK(fn(0.5) == 0.0);

    const json round = serialize_problem(p);
    CHECK(round["quantifier"]["fuzzy_number"]["params"][0] == "-inf");
    const Problem again = parse_problem(round);
    CHECK(again.quantifier.binary_proportional()->fn.unbounded_left());

    SUBCASE("garbage shoulder strings are rejected") {
        doc["quantifier"]["fuzzy_number"]["params"][0] = "wide";
        CHECK_THROWS_AS(parse_problem(doc), ParseError);
    }
}

TEST_CASE("quantifier kinds from files") {
    json doc = json::parse(kNearlyAll);

    SUBCASE("unary quantitative with an explicit table") {
        doc["quantifier"] = {{"kind", "unary_quantitative"}, {"table", {0.0, 0.25, 0.5, 0.75, 1.0}}};
        doc["arguments"] = {"well_paid"};
        const Problem p = parse_problem(doc);
        REQUIRE(p.quantifier.unary_quantitative() != nullptr);
        const EvalResult r = evaluate(p.quantifier, p.resolve_arguments(), Strategy::Auto);
        // identity table: the result is the mean of the grades
        CHECK(r.value == doctest::Approx((1.0 + 0.8 + 0.3 + 0.1) / 4.0).epsilon(1e-12));
    }

    SUBCASE("unary proportional through a fuzzy number") {
        doc["quantifier"] = {{"kind", "unary_quantitative"},
                             {"fuzzy_number", {{"shape", "S"}, {"params", {0.3, 0.6}}}}};
        doc["arguments"] = {"well_paid"};
        const Problem p = parse_problem(doc);
        REQUIRE(p.quantifier.unary_quantitative() != nullptr);
        CHECK(p.quantifier.unary_quantitative()->proportional.has_value());
    }

    SUBCASE("both table and fuzzy number is ambiguous") {
        doc["quantifier"] = {{"kind", "unary_quantitative"},
                             {"table", {0.0, 0.5, 1.0, 1.0, 1.0}},
                             {"fuzzy_number", {{"shape", "S"}, {"params", {0.3, 0.6}}}}};
        doc["arguments"] = {"well_paid"};
        CHECK_THROWS_AS(parse_problem(doc), ParseError);
    }

    SUBCASE("binary absolute") {
        doc["quantifier"] = {{"kind", "binary_absolute"},
                             {"fuzzy_number", {{"shape", "T"}, {"params", {0, 1, 2, 3}}}}};
        const Problem p = parse_problem(doc);
        CHECK(p.quantifier.binary_absolute() != nullptr);
        CHECK_NOTHROW(evaluate(p.quantifier, p.resolve_arguments(), Strategy::Auto));
    }

    SUBCASE("explicit n-ary table") {
        doc["universe"] = {{"size", 2}};
        doc["sets"] = {{"a", {0.5, 0.5}}, {"b", {1.0, 0.0}}};
        doc["arguments"] = {"a", "b"};
        json values = json::array();
        for (int i = 0; i < 16; ++i) values.push_back(i % 2 ? 1.0 : 0.0);
        doc["quantifier"] = {{"kind", "table"}, {"table", {{"arity", 2}, {"values", values}}}};
        const Problem p = parse_problem(doc);
        REQUIRE(p.quantifier.table() != nullptr);
        CHECK_NOTHROW(evaluate(p.quantifier, p.resolve_arguments(), Strategy::Exact));
    }

    SUBCASE("crisp steps through exists/forall shapes") {
        doc["quantifier"] = {{"kind", "unary_quantitative"},
                             {"fuzzy_number", {{"shape", "exists"}}}};
        doc["arguments"] = {"well_paid"};
        const Problem p = parse_problem(doc);
        const auto* uq = p.quantifier.unary_quantitative();
        REQUIRE(uq != nullptr);
        CHECK(uq->table == std::vector<double>{0, 1, 1, 1, 1});
    }
}

TEST_CASE("temporal and population files") {
    SUBCASE("temporal") {
        const json doc = json::parse(R"({
          "signal": {"t0": 0.0, "t1": 1.0, "samples": [0.0, 1.0]},
          "label": {"shape": "T", "params": [0.0, 1.0, 1.0, "inf"]},
          "grid": 128,
          "quantifier": {"kind": "unary_quantitative",
                         "fuzzy_number": {"shape": "S", "params": [0.3, 0.6]}}
        })");
        const TemporalProblem t = parse_temporal(doc);
        CHECK(t.grid == 128);
        CHECK(t.signal.samples.size() == 2);

        json broken = doc;
        broken["quantifier"]["kind"] = "binary_proportional";
        CHECK_THROWS_AS(parse_temporal(broken), ParseError);
    }

    SUBCASE("population") {
        const json doc = json::parse(R"({
          "samples": [170.0, 181.5, 192.0],
          "label": {"shape": "S", "params": [180, 190]},
          "quantifier": {"kind": "unary_quantitative",
                         "fuzzy_number": {"shape": "S", "params": [0.2, 0.5]}}
        })");
        const PopulationProblem p = parse_population(doc);
        CHECK(p.samples.size() == 3);

        json broken = doc;
        broken["samples"] = json::array();
        CHECK_THROWS_AS(parse_population(broken), ParseError);
    }
}
