#include "mub/bigraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mub {

namespace {

using Colors = std::vector<int>;

// Iterated neighborhood refinement. Colors are kept as dense ranks ordered by
// (old color, sorted neighbor colors), so the result depends only on structure.
Colors refine(const Bigraph& b, Colors c) {
    const std::size_t n = b.size();
    int classes = c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    for (;;) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = c[v];
            for (auto w : b.adj(v))
                sig[v].second.push_back(c[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::map<std::pair<int, std::vector<int>>, int> rank;
        for (auto& s : sig)
            rank.emplace(s, 0);
        int k = 0;
        for (auto& [s, r] : rank)
            r = k++;
        Colors next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = rank[sig[v]];
        c = std::move(next);
        if (k == classes)
            return c;
        classes = k;
    }
}

std::string leaf_code(const Bigraph& b, const Colors& c, Side first) {
    const std::size_t n = b.size();
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v)
        at[c[v]] = v;
    std::string code;
    code.reserve(n + n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        code.push_back(b.side(at[i]) == first ? 'a' : 'b');
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            code.push_back(b.adjacent(at[i], at[j]) ? '1' : '0');
    return code;
}

void search(const Bigraph& b, const Colors& c, Side first, std::string& best) {
    const std::size_t n = b.size();
    std::vector<int> cell_size(n, 0);
    for (int x : c)
        ++cell_size[x];
    int target = -1;
    for (std::size_t k = 0; k < n; ++k)
        if (cell_size[k] > 1) {
            target = static_cast<int>(k);
            break;
        }
    if (target < 0) {
        std::string code = leaf_code(b, c, first);
        if (best.empty() || code < best)
            best = std::move(code);
        return;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (c[v] != target)
            continue;
        Colors d(c);
        for (std::size_t w = 0; w < n; ++w)
            if (d[w] > target || (d[w] == target && w != v))
                ++d[w];
        search(b, refine(b, std::move(d)), first, best);
    }
}

} // namespace

std::string canonical_form(const Bigraph& b) {
    if (b.size() == 0)
        return "";
    std::string best;
    for (Side first : {Side::X, Side::Y}) {
        Colors c(b.size());
        for (std::size_t v = 0; v < b.size(); ++v)
            c[v] = b.side(v) == first ? 0 : 1;
        // Ranks must be dense even if one side is empty.
        if (std::none_of(c.begin(), c.end(), [](int x) { return x == 0; }))
            std::fill(c.begin(), c.end(), 0);
        std::string code;
        search(b, refine(b, std::move(c)), first, code);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

bool isomorphic(const Bigraph& a, const Bigraph& b) {
    return a.size() == b.size() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

void enumerate_connected_bipartite(std::size_t max_n, const std::function<bool(const Bigraph&)>& visit) {
    if (max_n == 0)
        return;
    std::vector<Bigraph> level;
    {
        Bigraph k1;
        k1.add_vertex("x_1", Side::X);
        level.push_back(std::move(k1));
    }
    for (std::size_t n = 1;; ++n) {
        for (auto& g : level)
            if (!visit(g))
                return;
        if (n == max_n)
            return;
        std::set<std::string> seen;
        std::vector<Bigraph> next;
        for (auto& g : level) {
            for (Side s : {Side::X, Side::Y}) {
                std::vector<Bigraph::Vertex> opp;
                std::size_t same = 0;
                for (Bigraph::Vertex v = 0; v < g.size(); ++v) {
                    if (g.side(v) != s)
                        opp.push_back(v);
                    else
                        ++same;
                }
                if (opp.empty())
                    continue;
                std::string label = std::string(s == Side::X ? "x_" : "y_") + std::to_string(same + 1);
                for (std::size_t mask = 1; mask < (std::size_t{1} << opp.size()); ++mask) {
                    Bigraph h = g;
                    auto v = h.add_vertex(label, s);
                    for (std::size_t k = 0; k < opp.size(); ++k)
                        if (mask >> k & 1)
                            h.add_edge(v, opp[k]);
                    if (seen.insert(canonical_form(h)).second)
                        next.push_back(std::move(h));
                }
            }
        }
        level = std::move(next);
    }
}

std::vector<Bigraph> enumerate_connected_bipartite(std::size_t max_n) {
    std::vector<Bigraph> out;
    enumerate_connected_bipartite(max_n, [&](const Bigraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

} // namespace mub
