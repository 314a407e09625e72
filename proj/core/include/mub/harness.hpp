#pragma once

#include "mub/bigraph.hpp"
#include "mub/recognizer.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mub {

// Per-graph outcome of the equivalence check: recognizer status against
// "interval bigraph with no forbidden member embedded".
struct HarnessRecord {
    std::size_t n = 0;
    std::string canonical;
    Status status = Status::UNSAT;
    bool interval = false;
    std::vector<std::string> hits; // catalog members found
    bool disagreement = false;
    bool repair_attempted = false;
    bool repair_ok = false;
    std::size_t bad_pairs = 0; // in the minimum bad pair representation
    std::string repair_failure;
};

struct SizeSummary {
    std::size_t n = 0;
    std::size_t graphs = 0;
    std::size_t sat = 0;
    std::size_t unsat = 0;
    std::size_t budget = 0;
    std::size_t non_interval = 0;
    std::size_t with_hits = 0;
    std::size_t disagreements = 0;
    std::size_t repairs = 0;
    std::size_t repairs_with_bad_pairs = 0;
    std::size_t repair_failures = 0;
};

void add(SizeSummary& s, const HarnessRecord& r);

struct HarnessOptions {
    std::size_t max_n = 8;
    Budget budget{};
    bool repair = true;
};

// Records for every connected bipartite graph on n vertices.
std::vector<HarnessRecord> run_size(std::size_t n, const HarnessOptions& opt);

HarnessRecord check_graph(const Bigraph& g, const HarnessOptions& opt);

} // namespace mub
