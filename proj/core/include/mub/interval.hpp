#pragma once

#include "mub/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace mub {

enum class IntervalClass { CC, OO, CO, OC };

std::string_view to_string(IntervalClass c);

class Interval {
public:
    // Throws std::invalid_argument unless l < r, or l == r with both ends closed.
    Interval(Rational l, Rational r, bool left_closed = true, bool right_closed = true);

    static Interval closed(Rational l, Rational r) { return {std::move(l), std::move(r), true, true}; }
    static Interval open(Rational l, Rational r) { return {std::move(l), std::move(r), false, false}; }
    static Interval of_class(IntervalClass c, Rational l, Rational r);

    const Rational& l() const noexcept { return l_; }
    const Rational& r() const noexcept { return r_; }
    bool left_closed() const noexcept { return lc_; }
    bool right_closed() const noexcept { return rc_; }
    IntervalClass cls() const noexcept;
    Rational length() const { return r_ - l_; }

    bool contains(const Rational& p) const;
    // Same endpoints, flags ignored.
    bool same_span(const Interval& o) const { return l_ == o.l_ && r_ == o.r_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational l_;
    Rational r_;
    bool lc_;
    bool rc_;
};

bool intersects(const Interval& a, const Interval& b);
bool is_unit(const Interval& a);
Interval translate(const Interval& a, const Rational& t);
Interval reflect(const Interval& a);

// "[0,1)", "(-1/2,1/2]"
std::string to_string(const Interval& a);
Interval parse_interval(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Interval& a);

} // namespace mub
