#pragma once

#include "mub/bigraph.hpp"
#include "mub/interval.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mub {

// Vertex label -> interval. Ordered by label so text output is stable.
using Representation = std::map<std::string, Interval, std::less<>>;

struct ValidityReport {
    bool valid = true;
    std::vector<std::pair<std::string, std::string>> missing_edges;  // adjacent, disjoint
    std::vector<std::pair<std::string, std::string>> spurious_edges; // non-adjacent, intersecting
};

struct BadPair {
    std::string inner; // u, I(u) strictly inside I(v)
    std::string outer; // v
    friend bool operator==(const BadPair&, const BadPair&) = default;
};

// Throws CoverageError when the keys differ from V(B).
ValidityReport validate(const Bigraph& b, const Representation& rep);
bool is_mixed_unit(const Representation& rep);
bool is_mixed_proper(const Representation& rep);
bool is_almost_proper(const Representation& rep);
std::vector<BadPair> list_bad_pairs(const Representation& rep);
bool is_bad_pair(const Interval& inner, const Interval& outer);

Bigraph intersection_bigraph(const Representation& rep, const std::map<std::string, Side, std::less<>>& side_of);
std::map<std::string, Side, std::less<>> sides_of(const Bigraph& b);

// Representation text: "<label> <C|O> <l> <r> <C|O>" per line, '#' comments.
Representation parse_representation(std::istream& in);
Representation parse_representation_text(std::string_view text);
void write_representation(std::ostream& out, const Representation& rep);
std::string to_text(const Representation& rep);

} // namespace mub
