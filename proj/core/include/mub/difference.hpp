#pragma once

#include "mub/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mub {

// value(hi) - value(lo) <= bound, or < bound when strict.
struct DifferenceConstraint {
    std::string hi;
    std::string lo;
    Rational bound;
    bool strict = false;
};

struct IndexedConstraint {
    std::size_t hi;
    std::size_t lo;
    Rational bound;
    bool strict = false;
};

// Values satisfying every constraint, or nullopt when the system is infeasible
// (a cycle of negative weight, or of zero weight through a strict constraint).
std::optional<std::vector<Rational>> solve_difference_constraints(std::size_t n,
                                                                  const std::vector<IndexedConstraint>& cs);
std::optional<std::map<std::string, Rational>> solve_difference_constraints(
    const std::vector<DifferenceConstraint>& cs, const std::vector<std::string>& vars);

bool satisfies(const std::vector<IndexedConstraint>& cs, const std::vector<Rational>& x);

} // namespace mub
