#pragma once

#include "mub/bigraph.hpp"
#include "mub/representation.hpp"

#include <cstdint>
#include <optional>

namespace mub {

enum class Status { SAT, UNSAT, BudgetExceeded };

std::string_view to_string(Status s);

struct Budget {
    std::uint64_t max_nodes = 0; // 0 = unlimited
    double max_seconds = 0;      // 0 = unlimited
};

struct RecognitionStats {
    std::uint64_t nodes = 0;
    double seconds = 0;
};

struct RecognitionOutcome {
    Status status = Status::UNSAT;
    std::optional<Representation> witness;
    RecognitionStats stats;
};

// Exhaustive search for a mixed unit interval representation. The search is
// single-threaded, so results never depend on `deterministic`; the flag is
// kept for interface stability.
RecognitionOutcome recognize_mixed_unit(const Bigraph& b, const Budget& budget = {}, bool deterministic = true);

inline constexpr std::size_t closed_search_limit = 16;
inline constexpr std::size_t min_bad_pair_limit = 12;

// Closed-interval representation with endpoints 1..2n, or nullopt if B is not
// an interval bigraph. Throws SizeLimitExceeded above closed_search_limit.
std::optional<Representation> recognize_interval_closed(const Bigraph& b);

// Closed representation with the fewest bad pairs. Throws SizeLimitExceeded
// above min_bad_pair_limit.
std::optional<Representation> min_bad_pair_representation(const Bigraph& b);

} // namespace mub
