#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fquant/algebra.hpp"
#include "fquant/evaluate.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace fquant;

namespace {

std::vector<CrispSet> tuple_from_index(const Universe& u, std::size_t arity, std::size_t index) {
    std::vector<CrispSet> ys;
    const std::size_t span = std::size_t{1} << u.size();
    for (std::size_t a = 0; a < arity; ++a) {
        ys.push_back(CrispSet::from_mask(u, index % span));
        index /= span;
    }
    return ys;
}

void check_kernel_equal(const SemiFuzzyQuantifier& a, const SemiFuzzyQuantifier& b,
                        double tol = 0.0) {
    REQUIRE(a.arity() == b.arity());
    REQUIRE(a.universe().size() == b.universe().size());
    const std::size_t tuples = std::size_t{1} << (a.arity() * a.universe().size());
    for (std::size_t index = 0; index < tuples; ++index) {
        const auto ys = tuple_from_index(a.universe(), a.arity(), index);
        if (tol == 0.0) {
            CHECK(a(ys) == b(ys));
        } else {
            CHECK(a(ys) == doctest::Approx(b(ys)).epsilon(tol));
        }
    }
}

FuzzySet random_fuzzy(std::mt19937_64& rng, const Universe& u) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> g(u.size());
    for (double& v : g) v = unit(rng);
    return FuzzySet(u, std::move(g));
}

}  // namespace

TEST_CASE("external negation") {
    const Universe u(3);

    SUBCASE("constant flips") {
        const auto c = make_unary_quantitative("c03", u, std::vector<double>(4, 0.3));
        const auto negated = external_negation(c);
        CHECK(negated(CrispSet::from_mask(u, 0b101)) == doctest::Approx(0.7).epsilon(1e-15));
    }

    SUBCASE("at-most is the negation of at-least") {
        const Universe u4(4);
        const auto at_least_3 = make_unary_quantitative("at_least_3", u4, {0, 0, 0, 1, 1});
        const auto at_most_2 = make_unary_quantitative("at_most_2", u4, {1, 1, 1, 0, 0});
        check_kernel_equal(external_negation(at_least_3), at_most_2);
    }

    SUBCASE("double negation restores the kernel") {
        const auto some = make_some(u);
        check_kernel_equal(external_negation(external_negation(some)), some);
    }
}

TEST_CASE("internal negation (antonym)") {
    const Universe u(3);

    SUBCASE("all with a complemented second argument is no") {
        for (std::size_t m = 1; m <= 4; ++m) {
            const Universe um(m);
            check_kernel_equal(internal_negation(make_all(um)), make_no(um));
        }
    }

    SUBCASE("the antonym is involutive") {
        const auto q = make_some(u);
        check_kernel_equal(internal_negation(internal_negation(q)), q);
    }

    SUBCASE("complement flips the cardinality in quantitative tables") {
        const auto ex = make_exists(u);
        const auto antonym = internal_negation(ex);
        REQUIRE(antonym.unary_quantitative() != nullptr);
        CHECK(antonym.unary_quantitative()->table == std::vector<double>{1, 1, 1, 0});
        // Same thing built through a callback, for the kernel semantics.
        const auto by_hand = make_callback("by_hand", u, 1, [ex](std::span<const CrispSet> ys) {
            return ex(ys[0].complement());
        });
        check_kernel_equal(antonym, by_hand);
    }

    SUBCASE("arity zero is rejected") {
        const auto nullary = make_callback("nullary", u, 0,
                                           [](std::span<const CrispSet>) { return 0.5; });
        CHECK_THROWS_AS(internal_negation(nullary), std::invalid_argument);
    }
}

TEST_CASE("dual quantifier") {
    SUBCASE("the dual of all is some") {
        for (std::size_t m = 1; m <= 4; ++m) {
            const Universe um(m);
            check_kernel_equal(dual(make_all(um)), make_some(um));
        }
    }

    SUBCASE("dualisation is involutive") {
        const Universe u(3);
        const auto q = make_all(u);
        check_kernel_equal(dual(dual(q)), q);
    }

    SUBCASE("dual of a constant is its complement") {
        const Universe u(2);
        const auto c = make_unary_quantitative("c", u, std::vector<double>(3, 0.2));
        const auto d = dual(c);
        CHECK(d(CrispSet::from_mask(u, 0b01)) == doctest::Approx(0.8).epsilon(1e-15));
    }
}

TEST_CASE("argument union and intersection") {
    SUBCASE("union applies to the last argument pair") {
        for (std::size_t m = 1; m <= 3; ++m) {
            const Universe u(m);
            const auto all = make_all(u);
            const auto lifted = union_arg(all);
            REQUIRE(lifted.arity() == 3);
            const std::size_t span = std::size_t{1} << m;
            for (std::size_t y1 = 0; y1 < span; ++y1) {
                for (std::size_t y2 = 0; y2 < span; ++y2) {
                    for (std::size_t y3 = 0; y3 < span; ++y3) {
                        const CrispSet s1 = CrispSet::from_mask(u, y1);
                        const CrispSet s2 = CrispSet::from_mask(u, y2);
                        const CrispSet s3 = CrispSet::from_mask(u, y3);
                        const std::vector<CrispSet> ys{s1, s2, s3};
                        CHECK(lifted(ys) == all(s1, s2 | s3));
                    }
                }
            }
        }
    }

    SUBCASE("intersecting the argument of exists gives some") {
        for (std::size_t m = 1; m <= 4; ++m) {
            const Universe u(m);
            check_kernel_equal(intersection_arg(make_exists(u)), make_some(u));
        }
    }

    SUBCASE("intersecting with the full universe is vacuous") {
        const Universe u(3);
        const auto ex = make_exists(u);
        const auto lifted = intersection_arg(ex);
        for (unsigned y = 0; y < 8; ++y) {
            const CrispSet s = CrispSet::from_mask(u, y);
            CHECK(lifted(s, CrispSet::full(u)) == ex(s));
        }
    }

    SUBCASE("the union construction factors through negations and a transposition") {
        // Q-union == Q antonym, intersect, antonym, transpose, antonym.
        for (std::size_t m = 1; m <= 3; ++m) {
            const Universe u(m);
            const auto q = make_all(u);
            const auto direct = union_arg(q);
            const auto derived = internal_negation(
                transpose_args(internal_negation(intersection_arg(internal_negation(q))), 1));
            check_kernel_equal(direct, derived);
        }
    }
}

TEST_CASE("argument transposition") {
    const Universe u(3);
    const auto all = make_all(u);

    SUBCASE("swapping twice is the identity") {
        check_kernel_equal(transpose_args(transpose_args(all, 0), 0), all);
    }

    SUBCASE("symmetric kernels are unchanged") {
        check_kernel_equal(transpose_args(make_some(u), 0), make_some(u));
    }

    SUBCASE("matches the table permutation") {
        const auto swapped = transpose_args(all, 0);
        // materialize() packs argument 0 into the low m bits
        const auto table = materialize(all);
        const std::size_t m = u.size();
        for (unsigned y1 = 0; y1 < 8; ++y1) {
            for (unsigned y2 = 0; y2 < 8; ++y2) {
                const double all_value = table[(static_cast<std::size_t>(y2) << m) | y1];
                CHECK(swapped(CrispSet::from_mask(u, y2), CrispSet::from_mask(u, y1)) ==
                      all_value);
            }
        }
    }

    SUBCASE("position bound is enforced") {
        CHECK_THROWS_AS(transpose_args(all, 1), std::invalid_argument);
    }
}

TEST_CASE("crisp argument insertion") {
    const Universe u(3);

    SUBCASE("fixing the superset argument of all to the universe is vacuously true") {
        const auto fixed = crisp_arg_insertion(make_all(u), CrispSet::full(u));
        REQUIRE(fixed.arity() == 1);
        for (unsigned y = 0; y < 8; ++y) {
            CHECK(fixed(CrispSet::from_mask(u, y)) == 1.0);
        }
    }

    SUBCASE("fixing the second argument of some to the empty set kills it") {
        const auto fixed = crisp_arg_insertion(make_some(u), CrispSet(u));
        for (unsigned y = 0; y < 8; ++y) {
            CHECK(fixed(CrispSet::from_mask(u, y)) == 0.0);
        }
    }

    SUBCASE("matches the sliced table") {
        const auto all = make_all(u);
        const CrispSet a = CrispSet::from_mask(u, 0b110);
        const auto fixed = crisp_arg_insertion(all, a);
        for (unsigned y = 0; y < 8; ++y) {
            const CrispSet s = CrispSet::from_mask(u, y);
            CHECK(fixed(s) == all(s, a));
        }
    }
}

TEST_CASE("fuzzy argument insertion") {
    SUBCASE("a crisp insert degrades to crisp insertion exactly") {
        for (std::size_t m = 1; m <= 3; ++m) {
            const Universe u(m);
            for (unsigned a_mask = 0; a_mask < (1u << m); ++a_mask) {
                const CrispSet a = CrispSet::from_mask(u, a_mask);
                check_kernel_equal(fuzzy_arg_insertion(make_some(u), FuzzySet::crisp(a)),
                                   crisp_arg_insertion(make_some(u), a));
            }
        }
    }

    SUBCASE("a half membership averages the two stand-ins") {
        const Universe u(1);
        const auto inserted = fuzzy_arg_insertion(make_some(u), FuzzySet(u, {0.5}));
        CHECK(inserted(CrispSet::from_mask(u, 1)) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(inserted(CrispSet::from_mask(u, 0)) == 0.0);
    }

    SUBCASE("agrees with fixing the fuzzy argument inside the fuzzified quantifier") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t m = 1 + rng() % 3;
            const Universe u(m);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            std::vector<double> table(std::size_t{1} << (2 * m));
            for (double& v : table) v = unit(rng);
            const auto q = make_table("random", u, 2, std::move(table));
            const FuzzySet a = random_fuzzy(rng, u);
            const auto inserted = fuzzy_arg_insertion(q, a);

            // Kernel route vs evaluating the fuzzified quantifier with the
            // last argument pinned to `a`.
            for (unsigned y = 0; y < (1u << m); ++y) {
                const CrispSet s = CrispSet::from_mask(u, y);
                const double via_kernel = inserted(s);
                const double via_eval = eval_exact(q, FuzzySet::crisp(s), a);
                CHECK(via_kernel == doctest::Approx(via_eval).epsilon(1e-12));
            }

            // And the full law: fuzzify(insert) == fuzzify then pin.
            const FuzzySet x = random_fuzzy(rng, u);
            CHECK(eval_exact(inserted, x) ==
                  doctest::Approx(eval_exact(q, x, a)).epsilon(1e-12));
        }
    }
}

TEST_CASE("induced connectives") {
    const InducedConnective f_and = induce_connective(TruthFunction::conjunction());
    const InducedConnective f_or = induce_connective(TruthFunction::disjunction());
    const InducedConnective f_imp = induce_connective(TruthFunction::implication());
    const InducedConnective f_not = induce_connective(TruthFunction::negation());
    const InducedConnective f_id = induce_connective(TruthFunction::identity());

    SUBCASE("desk values") {
        CHECK(f_or(0.7, 0.4) == doctest::Approx(0.82).epsilon(1e-12));
        CHECK(f_and(0.7, 0.4) == doctest::Approx(0.28).epsilon(1e-12));
        CHECK(f_imp(1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(f_imp(0.0, 0.3) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("closed forms on the decigrade grid") {
        for (int i = 0; i <= 10; ++i) {
            const double x = i / 10.0;
            CHECK(std::abs(f_not(x) - (1.0 - x)) <= 1e-12);
            CHECK(std::abs(f_id(x) - x) <= 1e-12);
            for (int j = 0; j <= 10; ++j) {
                const double y = j / 10.0;
                CHECK(std::abs(f_and(x, y) - x * y) <= 1e-12);
                CHECK(std::abs(f_or(x, y) - (x + y - x * y)) <= 1e-12);
                CHECK(std::abs(f_imp(x, y) - (1.0 - x + x * y)) <= 1e-12);
            }
        }
    }

    SUBCASE("the induced operators satisfy the t-norm and t-conorm laws") {
        const std::vector<double> grid{0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
        for (double x : grid) {
            CHECK(std::abs(f_and(x, 1.0) - x) <= 1e-12);   // unit
            CHECK(std::abs(f_or(x, 0.0) - x) <= 1e-12);    // unit
            CHECK(std::abs(f_not(f_not(x)) - x) <= 1e-12); // strong negation
            for (double y : grid) {
                CHECK(std::abs(f_and(x, y) - f_and(y, x)) <= 1e-12);  // commutative
                CHECK(std::abs(f_or(x, y) - (1.0 - f_and(1.0 - x, 1.0 - y))) <= 1e-12);  // dual
                for (double z : grid) {
                    CHECK(std::abs(f_and(f_and(x, y), z) - f_and(x, f_and(y, z))) <= 1e-12);
                    if (y <= z) CHECK(f_and(x, y) <= f_and(x, z) + 1e-12);  // monotone
                }
            }
        }
    }
}

TEST_CASE("m-ary probabilistic sum has the complement-product closed form") {
    const InducedConnective f_or = induce_connective(TruthFunction::disjunction());
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t m = 1; m <= 8; ++m) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> xs(m);
            for (double& v : xs) v = unit(rng);
            double folded = xs[0];
            double miss = 1.0 - xs[0];
            for (std::size_t i = 1; i < m; ++i) {
                folded = f_or(folded, xs[i]);
                miss *= 1.0 - xs[i];
            }
            CHECK(std::abs(folded - (1.0 - miss)) <= 1e-12);
        }
    }
}

TEST_CASE("induced extension principle") {
    SUBCASE("merging two halves gives three quarters") {
        const Universe source(2);
        const Universe target(1);
        const std::vector<std::size_t> to_same{0, 0};
        const FuzzySet x(source, {0.5, 0.5});
        const FuzzySet image = extension_principle(to_same, x, target);
        CHECK(image.grade(0) == doctest::Approx(0.75).epsilon(1e-12));
    }

    SUBCASE("injective maps relocate grades") {
        const Universe source(2);
        const Universe target(3);
        const std::vector<std::size_t> map{2, 0};
        const FuzzySet x(source, {0.4, 0.9});
        const FuzzySet image = extension_principle(map, x, target);
        CHECK(image.grade(0) == doctest::Approx(0.9).epsilon(1e-15));
        CHECK(image.grade(1) == 0.0);
        CHECK(image.grade(2) == doctest::Approx(0.4).epsilon(1e-15));
    }

    SUBCASE("a crisp set maps to its classical image") {
        const Universe source(3);
        const Universe target(2);
        const std::vector<std::size_t> map{0, 0, 1};
        const FuzzySet x = FuzzySet::crisp(CrispSet::from_mask(source, 0b011));
        const FuzzySet image = extension_principle(map, x, target);
        CHECK(image.grade(0) == 1.0);
        CHECK(image.grade(1) == 0.0);
    }

    SUBCASE("dangling indices are rejected") {
        const Universe source(1);
        const Universe target(1);
        CHECK_THROWS_AS(
            extension_principle(std::vector<std::size_t>{1}, FuzzySet(source, {0.5}), target),
            std::out_of_range);
    }
}

TEST_CASE("composition with index maps") {
    const Universe u(3);
    const auto some = make_some(u);
    std::vector<std::size_t> identity_map{0, 1, 2};
    const auto composed = compose_with_maps(some, {identity_map, identity_map}, u);
    check_kernel_equal(composed, some);
}
