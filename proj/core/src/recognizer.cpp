#include "mub/recognizer.hpp"

#include "mub/difference.hpp"

#include <chrono>
#include <stdexcept>

namespace mub {

std::string_view to_string(Status s) {
    switch (s) {
    case Status::SAT: return "SAT";
    case Status::UNSAT: return "UNSAT";
    case Status::BudgetExceeded: return "BUDGET";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr int inf = 1 << 28;

struct BudgetHit {};

// Left endpoints x_v with r = x_v + 1. An edge i -> j of weight w stands for
// x_j - x_i <= w. Adjacent pairs give +1 edges both ways; a non-adjacent pair
// oriented "a left of b" gives b -> a of weight -1. An edge is tight when the
// system forces equality on it; only tight edges touch at a shared endpoint,
// and only there do the boundary flags matter.
struct Edge {
    int from;
    int to;
    int w;
    bool adjacency;
};

struct State {
    std::vector<int> d; // all-pairs shortest paths
    std::vector<signed char> orient; // per pair: -1 open, 0 a left of b, 1 b left of a
    std::vector<char> lc, rc;        // flags forced closed
    std::size_t decided = 0;
};

class ComponentSearch {
public:
    ComponentSearch(const Bigraph& g, const std::vector<Bigraph::Vertex>& comp, const Budget& budget,
                    Clock::time_point start, std::uint64_t& nodes)
        : n_(static_cast<int>(comp.size())), budget_(budget), start_(start), nodes_(nodes) {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                auto u = comp[i], v = comp[j];
                if (g.side(u) == g.side(v))
                    continue;
                if (g.adjacent(u, v)) {
                    adjacent_.emplace_back(i, j);
                } else {
                    pairs_.emplace_back(i, j);
                }
            }
    }

    // Left endpoints and closed flags, or nullopt when no representation exists.
    std::optional<std::vector<Interval>> run() {
        State s;
        s.d.assign(static_cast<std::size_t>(n_) * n_, inf);
        for (int i = 0; i < n_; ++i)
            at(s, i, i) = 0;
        s.orient.assign(pairs_.size(), -1);
        s.lc.assign(n_, 0);
        s.rc.assign(n_, 0);
        for (auto [a, b] : adjacent_) {
            add_edge(s, a, b, 1, true);
            add_edge(s, b, a, 1, true);
        }
        if (!consistent(s) || !dfs(s))
            return std::nullopt;
        return witness();
    }

private:
    int n_;
    const Budget& budget_;
    Clock::time_point start_;
    std::uint64_t& nodes_;
    std::vector<std::pair<int, int>> adjacent_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<Edge> edges_;
    State solution_;
    std::vector<Edge> solution_edges_;

    int& at(State& s, int i, int j) const { return s.d[static_cast<std::size_t>(i) * n_ + j]; }
    int at(const State& s, int i, int j) const { return s.d[static_cast<std::size_t>(i) * n_ + j]; }

    bool add_edge(State& s, int from, int to, int w, bool adjacency) {
        if (w + at(s, to, from) < 0)
            return false;
        for (int i = 0; i < n_; ++i) {
            int di = at(s, i, from);
            if (di >= inf)
                continue;
            for (int j = 0; j < n_; ++j) {
                int dj = at(s, to, j);
                if (dj >= inf)
                    continue;
                int c = di + w + dj;
                if (c < at(s, i, j))
                    at(s, i, j) = c;
            }
        }
        edges_.push_back({from, to, w, adjacency});
        return true;
    }

    bool tight(const State& s, const Edge& e) const { return e.w + at(s, e.to, e.from) == 0; }

    // Forced flags from tight adjacency edges; a tight separation edge must not
    // have both of its touching ends forced closed.
    bool consistent(State& s) const {
        std::fill(s.lc.begin(), s.lc.end(), 0);
        std::fill(s.rc.begin(), s.rc.end(), 0);
        for (auto& e : edges_)
            if (e.adjacency && tight(s, e)) {
                s.rc[e.from] = 1;
                s.lc[e.to] = 1;
            }
        for (auto& e : edges_)
            if (!e.adjacency && tight(s, e) && s.rc[e.to] && s.lc[e.from])
                return false;
        return true;
    }

    bool can_place_left(const State& s, int a, int b) const {
        int room = at(s, a, b);
        if (room < 1)
            return false;
        return !(room == 1 && s.rc[a] && s.lc[b]);
    }

    bool orient(State& s, std::size_t p, bool a_left) {
        auto [a, b] = pairs_[p];
        s.orient[p] = a_left ? 0 : 1;
        ++s.decided;
        bool ok = a_left ? add_edge(s, b, a, -1, false) : add_edge(s, a, b, -1, false);
        return ok && consistent(s);
    }

    bool propagate(State& s) {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t p = 0; p < pairs_.size(); ++p) {
                if (s.orient[p] >= 0)
                    continue;
                auto [a, b] = pairs_[p];
                bool ab = can_place_left(s, a, b);
                bool ba = can_place_left(s, b, a);
                if (!ab && !ba)
                    return false;
                if (ab && ba)
                    continue;
                if (!orient(s, p, ab))
                    return false;
                changed = true;
            }
        }
        return true;
    }

    void tick() {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > budget_.max_nodes)
            throw BudgetHit{};
        if (budget_.max_seconds > 0 && (nodes_ & 255) == 0) {
            std::chrono::duration<double> el = Clock::now() - start_;
            if (el.count() > budget_.max_seconds)
                throw BudgetHit{};
        }
    }

    bool dfs(State& s) {
        tick();
        std::size_t mark = edges_.size();
        if (!propagate(s)) {
            edges_.resize(mark);
            return false;
        }
        std::size_t best = pairs_.size();
        int window = inf;
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            if (s.orient[p] >= 0)
                continue;
            auto [a, b] = pairs_[p];
            int wnd = at(s, a, b) + at(s, b, a);
            if (wnd < window) {
                window = wnd;
                best = p;
            }
        }
        if (best == pairs_.size()) {
            solution_ = s;
            solution_edges_ = edges_;
            return true;
        }
        // With nothing decided the state is symmetric under reflection, so
        // one orientation of the first pair suffices.
        bool symmetric = s.decided == 0;
        std::size_t inner = edges_.size();
        for (bool a_left : {true, false}) {
            if (!a_left && symmetric)
                break;
            State child = s;
            if (orient(child, best, a_left) && dfs(child))
                return true;
            edges_.resize(inner);
        }
        edges_.resize(mark);
        return false;
    }

    std::vector<Interval> witness() const {
        std::vector<IndexedConstraint> cs;
        for (auto& e : solution_edges_)
            cs.push_back({static_cast<std::size_t>(e.to), static_cast<std::size_t>(e.from), e.w,
                          !tight(solution_, e)});
        auto x = solve_difference_constraints(n_, cs);
        if (!x)
            throw std::logic_error("recognizer: witness system infeasible");
        std::vector<Interval> out;
        for (int v = 0; v < n_; ++v)
            out.emplace_back((*x)[v], (*x)[v] + 1, solution_.lc[v] != 0, solution_.rc[v] != 0);
        return out;
    }
};

} // namespace

RecognitionOutcome recognize_mixed_unit(const Bigraph& b, const Budget& budget, bool /*deterministic*/) {
    auto start = Clock::now();
    RecognitionOutcome out;
    Representation rep;
    Rational offset = 0;
    try {
        for (auto& comp : components(b)) {
            ComponentSearch search(b, comp, budget, start, out.stats.nodes);
            auto ivs = search.run();
            if (!ivs) {
                out.status = Status::UNSAT;
                out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
                return out;
            }
            Rational lo = (*ivs)[0].l(), hi = (*ivs)[0].r();
            for (auto& iv : *ivs) {
                if (iv.l() < lo)
                    lo = iv.l();
                if (iv.r() > hi)
                    hi = iv.r();
            }
            for (std::size_t k = 0; k < comp.size(); ++k)
                rep.emplace(b.label(comp[k]), translate((*ivs)[k], offset - lo));
            offset += hi - lo + 1;
        }
    } catch (const BudgetHit&) {
        out.status = Status::BudgetExceeded;
        out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return out;
    }
    if (!validate(b, rep).valid || !is_mixed_unit(rep))
        throw std::logic_error("recognizer produced an invalid witness");
    out.status = Status::SAT;
    out.witness = std::move(rep);
    out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

} // namespace mub
