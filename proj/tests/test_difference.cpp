#include <doctest.h>

#include "mub/difference.hpp"
#include "mub/errors.hpp"

using namespace mub;

namespace {
using DC = DifferenceConstraint;
}

TEST_CASE("equal values") {
    auto s = solve_difference_constraints({DC{"a", "b", 0}, DC{"b", "a", 0}}, {"a", "b"});
    REQUIRE(s);
    CHECK(s->at("a") == s->at("b"));
}

TEST_CASE("zero cycle through a strict constraint") {
    CHECK_FALSE(solve_difference_constraints({DC{"a", "b", 0, true}, DC{"b", "a", 0}}, {"a", "b"}));
}

TEST_CASE("forced difference") {
    auto s = solve_difference_constraints({DC{"a", "b", 1}, DC{"b", "a", -1}}, {"a", "b"});
    REQUIRE(s);
    CHECK(s->at("a") - s->at("b") == 1);
}

TEST_CASE("negative cycle") {
    CHECK_FALSE(solve_difference_constraints({DC{"a", "b", 1}, DC{"b", "c", 1}, DC{"c", "a", -3}}, {"a", "b", "c"}));
    CHECK(solve_difference_constraints({DC{"a", "b", 1}, DC{"b", "c", 1}, DC{"c", "a", -2}}, {"a", "b", "c"}));
}

TEST_CASE("strict chain leaves room") {
    std::vector<IndexedConstraint> cs{{1, 0, 1, true}, {0, 1, -1, false}};
    CHECK_FALSE(solve_difference_constraints(2, cs));
    std::vector<IndexedConstraint> open{{1, 0, 1, true}, {2, 1, 1, true}, {0, 2, -1, false}};
    auto x = solve_difference_constraints(3, open);
    REQUIRE(x);
    CHECK(satisfies(open, *x));
    CHECK((*x)[1] - (*x)[0] < 1);
    CHECK((*x)[0] - (*x)[2] <= -1);
}

TEST_CASE("unconstrained variables still get values") {
    auto s = solve_difference_constraints(std::vector<DC>{}, {"a", "b"});
    REQUIRE(s);
    CHECK(s->size() == 2);
    auto x = solve_difference_constraints(3, std::vector<IndexedConstraint>{});
    REQUIRE(x);
    CHECK(x->size() == 3);
}

TEST_CASE("rational bounds") {
    std::vector<IndexedConstraint> cs{{1, 0, Rational(1, 3)}, {0, 1, Rational(-1, 3)}, {2, 1, Rational(1, 7), true}};
    auto x = solve_difference_constraints(3, cs);
    REQUIRE(x);
    CHECK(satisfies(cs, *x));
    CHECK((*x)[1] - (*x)[0] == Rational(1, 3));
}

TEST_CASE("malformed systems") {
    CHECK_THROWS_AS(solve_difference_constraints({DC{"a", "a", 0}}, {"a"}), Error);
    CHECK_THROWS_AS(solve_difference_constraints({DC{"a", "z", 0}}, {"a"}), UnknownVertex);
    CHECK_THROWS_AS(solve_difference_constraints(2, {{0, 5, 1}}), Error);
}

TEST_CASE("satisfies checks strictness") {
    std::vector<IndexedConstraint> cs{{1, 0, 1, true}};
    CHECK(satisfies(cs, {Rational(0), Rational(1, 2)}));
    CHECK_FALSE(satisfies(cs, {Rational(0), Rational(1)}));
}
