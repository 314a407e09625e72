#include <doctest.h>

#include "mub/interval.hpp"

#include <sstream>

using mub::Interval;
using mub::parse_interval;

namespace {
Interval iv(std::string_view s) { return parse_interval(s); }
} // namespace

TEST_CASE("closed ends touch, open ends do not") {
    CHECK(intersects(iv("[0,1]"), iv("[1,2]")));
    CHECK_FALSE(intersects(iv("[0,1)"), iv("[1,2]")));
    CHECK_FALSE(intersects(iv("[0,1]"), iv("(1,2]")));
    CHECK(intersects(iv("(1,2)"), iv("[1,2]")));
    CHECK_FALSE(intersects(iv("(1,2)"), iv("[0,1]")));
    CHECK_FALSE(intersects(iv("[0,1]"), iv("[2,3]")));
    CHECK(intersects(iv("(0,1)"), iv("(1/2,3/2)")));
}

TEST_CASE("degenerate point intervals") {
    Interval p = Interval::closed(1, 1);
    CHECK(intersects(p, iv("[0,1]")));
    CHECK_FALSE(intersects(p, iv("[0,1)")));
    CHECK(intersects(p, p));
    CHECK_THROWS_AS(Interval(1, 1, true, false), std::invalid_argument);
    CHECK_THROWS_AS(Interval::open(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Interval::closed(2, 1), std::invalid_argument);
}

TEST_CASE("unit length is exact") {
    CHECK(is_unit(iv("[-1/2,1/2]")));
    CHECK_FALSE(is_unit(iv("[0,2]")));
    CHECK(is_unit(iv("(0,1)")));
    CHECK_FALSE(is_unit(iv("[0,99999/100000]")));
}

TEST_CASE("classes follow the flags") {
    CHECK(iv("[0,1]").cls() == mub::IntervalClass::CC);
    CHECK(iv("(0,1)").cls() == mub::IntervalClass::OO);
    CHECK(iv("[0,1)").cls() == mub::IntervalClass::CO);
    CHECK(iv("(0,1]").cls() == mub::IntervalClass::OC);
    for (auto c : {mub::IntervalClass::CC, mub::IntervalClass::OO, mub::IntervalClass::CO, mub::IntervalClass::OC})
        CHECK(Interval::of_class(c, 0, 1).cls() == c);
}

TEST_CASE("translate and reflect") {
    CHECK(translate(iv("[0,1)"), 2) == iv("[2,3)"));
    CHECK(reflect(iv("[0,1)")) == iv("(-1,0]"));
    CHECK(reflect(iv("(-1/3,5/2]")) == iv("[-5/2,1/3)"));
    for (auto s : {"[0,1]", "(0,1)", "[0,1)", "(0,1]", "[-7/3,2/5)"})
        CHECK(reflect(reflect(iv(s))) == iv(s));
}

TEST_CASE("text round trip") {
    for (auto s : {"[0,1]", "(0,1)", "[0,1)", "(-1/2,1/2]", "[-7/3,22/7)", "[5,5]"})
        CHECK(to_string(iv(s)) == s);
    CHECK(iv(" [ 1/2 , 3/2 ) ") == Interval(mub::Rational(1, 2), mub::Rational(3, 2), true, false));
    CHECK(iv("[2/4,6/4]") == iv("[1/2,3/2]"));
    std::ostringstream os;
    os << iv("(0,1]");
    CHECK(os.str() == "(0,1]");
}

TEST_CASE("malformed interval text") {
    CHECK_THROWS_AS(iv("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(iv("[0;1]"), std::invalid_argument);
    CHECK_THROWS_AS(iv("[0,1/0]"), std::invalid_argument);
    CHECK_THROWS_AS(iv("[a,1]"), std::invalid_argument);
    CHECK_THROWS_AS(iv("<0,1>"), std::invalid_argument);
    CHECK_THROWS_AS(iv("[1,0]"), std::invalid_argument);
}
