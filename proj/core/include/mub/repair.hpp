#pragma once

#include "mub/bigraph.hpp"
#include "mub/errors.hpp"
#include "mub/representation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mub {

// Layers of a bad pair (u', u). Right layers are sorted by left endpoint,
// left layers by decreasing right endpoint, so the first member of each
// two-element layer is the one nearer the pair.
struct BadPairStructure {
    BadPair pair;
    std::vector<std::vector<std::string>> right_layers;
    std::vector<std::vector<std::string>> left_layers;
    std::size_t k_r = 0;
    std::size_t k_l = 0;
    std::pair<std::string, std::string> witnesses;
    bool cross_side = false; // inner and outer in different partite sets
};

// Raised when a representation does not have the shape a minimum bad pair
// representation must have. claim() names the property that failed.
class RepairError : public Error {
public:
    RepairError(const std::string& what, int claim, BadPair pair)
        : Error(what), claim_(claim), pair_(std::move(pair)) {}
    int claim() const noexcept { return claim_; }
    const BadPair& pair() const noexcept { return pair_; }

private:
    int claim_;
    BadPair pair_;
};

class NotMinimalRepresentation : public RepairError {
public:
    using RepairError::RepairError;
};
class StructureViolation : public RepairError {
public:
    using RepairError::RepairError;
};
class NotClean : public RepairError {
public:
    using RepairError::RepairError;
};
class RewriteInvalid : public RepairError {
public:
    using RepairError::RepairError;
};

// (z_1, z_2): z_1 meets I(v) and ends before l(u); z_2 meets I(v) and starts
// after r(u); both on the side opposite u.
std::pair<std::string, std::string> claim1_witnesses(const Bigraph& b, const Representation& rep,
                                                     const BadPair& p);

BadPairStructure extract_structure(const Bigraph& b, const Representation& rep, const BadPair& p);

Representation rewrite_right(const Bigraph& b, const Representation& rep, const BadPairStructure& s);
Representation rewrite_left(const Bigraph& b, const Representation& rep, const BadPairStructure& s);

// Replaces I(inner) by the open copy of I(outer).
Representation finish_clean(const Bigraph& b, const Representation& rep, const BadPair& p);

struct FailureReport {
    int claim = 0; // 0 when the iteration cap was hit
    BadPair pair;
    std::string message;
    std::size_t iteration = 0;
};

struct RepairStep {
    std::string action; // "input", "copy-reduce", "rewrite-right", ...
    BadPair pair;
    bool cross_side = false;
    Representation rep;
};

struct RepairResult {
    std::optional<Representation> rep;
    std::optional<FailureReport> failure;
    std::vector<RepairStep> trace; // filled when requested
    std::size_t iterations = 0;
    bool ok() const { return rep.has_value(); }
};

// Input: a valid CC-only representation. Copies are collapsed to one
// representative, repaired, and expanded again at the end.
RepairResult repair(const Bigraph& b, const Representation& rep, bool trace = false);

} // namespace mub
