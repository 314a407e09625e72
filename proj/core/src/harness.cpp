#include "mub/harness.hpp"

#include "mub/families.hpp"
#include "mub/repair.hpp"

#include <map>

namespace mub {

namespace {

const std::vector<CatalogEntry>& catalog_up_to(std::size_t n) {
    static std::map<std::size_t, std::vector<CatalogEntry>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, forbidden_catalog(n)).first;
    return it->second;
}

} // namespace

void add(SizeSummary& s, const HarnessRecord& r) {
    ++s.graphs;
    switch (r.status) {
    case Status::SAT: ++s.sat; break;
    case Status::UNSAT: ++s.unsat; break;
    case Status::BudgetExceeded: ++s.budget; break;
    }
    s.non_interval += r.interval ? 0 : 1;
    s.with_hits += r.hits.empty() ? 0 : 1;
    s.disagreements += r.disagreement ? 1 : 0;
    if (r.repair_attempted) {
        ++s.repairs;
        s.repairs_with_bad_pairs += r.bad_pairs > 0 ? 1 : 0;
        s.repair_failures += r.repair_ok ? 0 : 1;
    }
}

HarnessRecord check_graph(const Bigraph& g, const HarnessOptions& opt) {
    HarnessRecord r;
    r.n = g.size();
    r.canonical = canonical_form(g);
    r.status = recognize_mixed_unit(g, opt.budget).status;
    auto closed = recognize_interval_closed(g);
    r.interval = closed.has_value();
    for (auto& entry : catalog_up_to(g.size()))
        if (!induced_subgraph_search(g, entry.graph).empty())
            r.hits.push_back(to_string(entry.id));
    bool predicted = r.interval && r.hits.empty();
    r.disagreement = r.status != Status::BudgetExceeded && (r.status == Status::SAT) != predicted;
    if (opt.repair && r.status == Status::SAT && r.interval) {
        r.repair_attempted = true;
        auto rep = min_bad_pair_representation(g);
        r.bad_pairs = list_bad_pairs(*rep).size();
        try {
            auto res = repair(g, *rep);
            r.repair_ok = res.ok() && validate(g, *res.rep).valid && is_mixed_proper(*res.rep);
            if (res.failure)
                r.repair_failure = res.failure->message;
        } catch (const std::exception& e) {
            r.repair_failure = e.what();
        }
    }
    return r;
}

std::vector<HarnessRecord> run_size(std::size_t n, const HarnessOptions& opt) {
    std::vector<HarnessRecord> out;
    enumerate_connected_bipartite(n, [&](const Bigraph& g) {
        if (g.size() == n)
            out.push_back(check_graph(g, opt));
        return true;
    });
    return out;
}

} // namespace mub
