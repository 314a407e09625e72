#include "mub/interval.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mub {

namespace {

Integer parse_integer(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw std::invalid_argument("expected digits in '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
    Integer v(std::string(s.substr(i)));
    return neg ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string_view to_string(IntervalClass c) {
    switch (c) {
    case IntervalClass::CC: return "CC";
    case IntervalClass::OO: return "OO";
    case IntervalClass::CO: return "CO";
    case IntervalClass::OC: return "OC";
    }
    return "?";
}

Interval::Interval(Rational l, Rational r, bool left_closed, bool right_closed)
    : l_(std::move(l)), r_(std::move(r)), lc_(left_closed), rc_(right_closed) {
    if (l_ > r_ || (l_ == r_ && !(lc_ && rc_)))
        throw std::invalid_argument("empty interval " + to_string(*this));
}

Interval Interval::of_class(IntervalClass c, Rational l, Rational r) {
    bool lc = c == IntervalClass::CC || c == IntervalClass::CO;
    bool rc = c == IntervalClass::CC || c == IntervalClass::OC;
    return {std::move(l), std::move(r), lc, rc};
}

IntervalClass Interval::cls() const noexcept {
    if (lc_)
        return rc_ ? IntervalClass::CC : IntervalClass::CO;
    return rc_ ? IntervalClass::OC : IntervalClass::OO;
}

bool Interval::contains(const Rational& p) const {
    bool left_ok = l_ < p || (lc_ && l_ == p);
    bool right_ok = p < r_ || (rc_ && p == r_);
    return left_ok && right_ok;
}

bool intersects(const Interval& a, const Interval& b) {
    const Rational& lo = a.l() < b.l() ? b.l() : a.l();
    const Rational& hi = a.r() < b.r() ? a.r() : b.r();
    if (lo < hi)
        return true;
    if (hi < lo)
        return false;
    return a.contains(lo) && b.contains(lo);
}

bool is_unit(const Interval& a) { return a.r() - a.l() == 1; }

Interval translate(const Interval& a, const Rational& t) {
    return {a.l() + t, a.r() + t, a.left_closed(), a.right_closed()};
}

Interval reflect(const Interval& a) {
    return {-a.r(), -a.l(), a.right_closed(), a.left_closed()};
}

std::string to_string(const Interval& a) {
    std::string s;
    s += a.left_closed() ? '[' : '(';
    s += to_string(a.l());
    s += ',';
    s += to_string(a.r());
    s += a.right_closed() ? ']' : ')';
    return s;
}

Interval parse_interval(std::string_view text) {
    text = trim(text);
    if (text.size() < 5)
        throw std::invalid_argument("bad interval '" + std::string(text) + "'");
    char open = text.front(), close = text.back();
    if ((open != '[' && open != '(') || (close != ']' && close != ')'))
        throw std::invalid_argument("bad interval brackets '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
        throw std::invalid_argument("bad interval '" + std::string(text) + "'");
    return {parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1)), open == '[',
            close == ']'};
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

} // namespace mub
