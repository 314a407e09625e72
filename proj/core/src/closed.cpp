#include "mub/errors.hpp"
#include "mub/recognizer.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

namespace mub {

namespace {

using Mask = std::uint32_t;

// One connected component with local indices; neighbors and opposite side as masks.
struct Local {
    std::vector<Bigraph::Vertex> verts;
    std::vector<Mask> nbr;
    std::vector<Mask> other_side;
    int n = 0;
};

Local localize(const Bigraph& b, const std::vector<Bigraph::Vertex>& comp) {
    Local c;
    c.verts = comp;
    c.n = static_cast<int>(comp.size());
    c.nbr.assign(c.n, 0);
    c.other_side.assign(c.n, 0);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (b.side(comp[i]) != b.side(comp[j]))
                c.other_side[i] |= Mask{1} << j;
            if (b.adjacent(comp[i], comp[j]))
                c.nbr[i] |= Mask{1} << j;
        }
    return c;
}

bool can_open(const Local& c, int v, Mask opened, Mask closed) {
    Mask active = opened & ~closed;
    return (active & c.other_side[v] & ~c.nbr[v]) == 0 && (c.nbr[v] & closed) == 0;
}

bool can_close(const Local& c, int v, Mask opened) { return (c.nbr[v] & ~opened) == 0; }

// Event sequence: +(v+1) opens v, -(v+1) closes v.
using Events = std::vector<int>;

class IntervalOrder {
public:
    explicit IntervalOrder(const Local& c) : c_(c), dead_(std::size_t{1} << c.n, 0) {}

    std::optional<Events> run() {
        Events ev;
        if (dfs(0, 0, ev))
            return ev;
        return std::nullopt;
    }

private:
    const Local& c_;
    std::vector<char> dead_;

    // Closing a vertex as soon as all its neighbors are open never hurts, so
    // the closed set is determined by the opened set.
    Mask close_ready(Mask opened, Mask closed, Events& ev) const {
        for (int v = 0; v < c_.n; ++v) {
            Mask bit = Mask{1} << v;
            if ((opened & bit) && !(closed & bit) && can_close(c_, v, opened)) {
                closed |= bit;
                ev.push_back(-(v + 1));
            }
        }
        return closed;
    }

    bool dfs(Mask opened, Mask closed, Events& ev) {
        Mask full = (Mask{1} << c_.n) - 1;
        if (opened == full)
            return closed == full;
        if (dead_[opened])
            return false;
        for (int v = 0; v < c_.n; ++v) {
            Mask bit = Mask{1} << v;
            if ((opened & bit) || !can_open(c_, v, opened, closed))
                continue;
            std::size_t mark = ev.size();
            ev.push_back(v + 1);
            Mask closed2 = close_ready(opened | bit, closed, ev);
            if (dfs(opened | bit, closed2, ev))
                return true;
            ev.resize(mark);
        }
        dead_[opened] = 1;
        return false;
    }
};

// Exact minimum of nested pairs over all admissible event orders. Closing a
// vertex creates one bad pair per still-active vertex that opened before it.
class MinNesting {
public:
    explicit MinNesting(const Local& c) : c_(c) {}

    std::optional<Events> run() {
        std::vector<int> active;
        if (solve(0, active) >= unreachable)
            return std::nullopt;
        Events ev;
        Mask opened = 0;
        active.clear();
        while (opened != full() || !active.empty()) {
            int best = unreachable;
            int move = 0;
            for_each_move(opened, active, [&](int m, int cost, Mask o2, const std::vector<int>& a2) {
                int total = cost + solve(o2, a2);
                if (total < best) {
                    best = total;
                    move = m;
                }
            });
            ev.push_back(move);
            apply(move, opened, active);
        }
        return ev;
    }

private:
    static constexpr int unreachable = std::numeric_limits<int>::max() / 2;
    const Local& c_;
    std::map<std::pair<Mask, std::vector<int>>, int> memo_;

    Mask full() const { return (Mask{1} << c_.n) - 1; }

    static void apply(int move, Mask& opened, std::vector<int>& active) {
        if (move > 0) {
            opened |= Mask{1} << (move - 1);
            active.push_back(move - 1);
        } else {
            active.erase(std::find(active.begin(), active.end(), -move - 1));
        }
    }

    template <class F>
    void for_each_move(Mask opened, const std::vector<int>& active, F&& f) const {
        Mask act = 0;
        for (int v : active)
            act |= Mask{1} << v;
        Mask closed = opened & ~act;
        for (std::size_t k = 0; k < active.size(); ++k) {
            int v = active[k];
            if (!can_close(c_, v, opened))
                continue;
            std::vector<int> a2 = active;
            a2.erase(a2.begin() + static_cast<std::ptrdiff_t>(k));
            f(-(v + 1), static_cast<int>(k), opened, a2);
        }
        for (int v = 0; v < c_.n; ++v) {
            Mask bit = Mask{1} << v;
            if ((opened & bit) || !can_open(c_, v, opened, closed))
                continue;
            std::vector<int> a2 = active;
            a2.push_back(v);
            f(v + 1, 0, opened | bit, a2);
        }
    }

    int solve(Mask opened, const std::vector<int>& active) {
        if (opened == full() && active.empty())
            return 0;
        auto key = std::make_pair(opened, active);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        int best = unreachable;
        for_each_move(opened, active, [&](int, int cost, Mask o2, const std::vector<int>& a2) {
            int sub = solve(o2, a2);
            if (sub < unreachable)
                best = std::min(best, cost + sub);
        });
        memo_.emplace(std::move(key), best);
        return best;
    }
};

template <class Solver>
std::optional<Representation> by_components(const Bigraph& b, std::size_t limit, const char* what) {
    auto comps = components(b);
    for (auto& comp : comps)
        if (comp.size() > limit)
            throw SizeLimitExceeded(std::string(what) + ": component of " + std::to_string(comp.size()) +
                                    " vertices exceeds the limit of " + std::to_string(limit));
    Representation rep;
    int pos = 0;
    for (auto& comp : comps) {
        Local c = localize(b, comp);
        Solver solver(c);
        auto ev = solver.run();
        if (!ev)
            return std::nullopt;
        std::vector<int> open_at(c.n);
        for (int e : *ev) {
            ++pos;
            if (e > 0) {
                open_at[e - 1] = pos;
            } else {
                int v = -e - 1;
                rep.emplace(b.label(c.verts[v]), Interval::closed(open_at[v], pos));
            }
        }
    }
    return rep;
}

} // namespace

std::optional<Representation> recognize_interval_closed(const Bigraph& b) {
    return by_components<IntervalOrder>(b, closed_search_limit, "closed interval search");
}

std::optional<Representation> min_bad_pair_representation(const Bigraph& b) {
    return by_components<MinNesting>(b, min_bad_pair_limit, "bad pair minimization");
}

} // namespace mub
