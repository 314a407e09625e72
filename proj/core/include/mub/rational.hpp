#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mub {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

} // namespace mub
