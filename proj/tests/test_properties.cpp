#include <doctest.h>

#include "mub/difference.hpp"
#include "mub/fixtures.hpp"
#include "mub/representation.hpp"

#include <random>

using namespace mub;

namespace {

constexpr int cases = 10000;

Interval random_interval(std::mt19937& rng, bool unit) {
    Rational l(static_cast<int>(rng() % 13) - 6, 2);
    Rational len = unit ? Rational(1) : Rational(static_cast<int>(rng() % 5), 2);
    bool lc = rng() % 2, rc = rng() % 2;
    if (len == 0)
        lc = rc = true;
    return Interval(l, l + len, lc, rc);
}

struct Sample {
    Bigraph graph;
    Representation rep;
};

Sample random_sample(std::mt19937& rng) {
    bool unit = rng() % 2;
    int n = 1 + rng() % 8;
    Representation rep;
    std::map<std::string, Side, std::less<>> sides;
    for (int i = 0; i < n; ++i) {
        std::string label = "v" + std::to_string(i);
        rep.emplace(label, random_interval(rng, unit));
        sides.emplace(label, rng() % 2 ? Side::X : Side::Y);
    }
    return {intersection_bigraph(rep, sides), rep};
}

Representation translated(const Representation& rep, const Rational& t) {
    Representation out;
    for (auto& [l, i] : rep)
        out.emplace(l, translate(i, t));
    return out;
}

Representation reflected(const Representation& rep) {
    Representation out;
    for (auto& [l, i] : rep)
        out.emplace(l, reflect(i));
    return out;
}

std::string renamed(const std::string& l) { return "w_" + l; }

Representation relabeled(const Representation& rep) {
    Representation out;
    for (auto& [l, i] : rep)
        out.emplace(renamed(l), i);
    return out;
}

Bigraph relabeled(const Bigraph& b) {
    Bigraph out;
    for (Bigraph::Vertex v = 0; v < b.size(); ++v)
        out.add_vertex(renamed(b.label(v)), b.side(v));
    for (auto& [x, y] : b.edges())
        out.add_edge(renamed(x), renamed(y));
    return out;
}

// Brute-force feasibility over the grid (1/(n+1))Z. Each weakly connected
// block is translated so its first variable sits at 0; the others then lie in
// (-n, n). With bounds in {-1,0,1} every feasible system has a solution on this
// grid, so the search is exact. Variables are visited in BFS order and each
// one only tries the grid points its assigned neighbours allow.
bool grid_feasible(std::size_t n, const std::vector<IndexedConstraint>& cs) {
    const int den = static_cast<int>(n) + 1;
    const int span = static_cast<int>(n) * den;
    std::vector<std::vector<std::size_t>> nb(n);
    for (auto& c : cs) {
        nb[c.hi].push_back(c.lo);
        nb[c.lo].push_back(c.hi);
    }
    std::vector<std::size_t> order;
    std::vector<char> root(n, 0), seen(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        seen[s] = root[s] = 1;
        order.push_back(s);
        for (std::size_t q = order.size() - 1; q < order.size(); ++q)
            for (auto w : nb[order[q]])
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
    }
    std::vector<int> x(n, 0); // grid index, value = x / den
    std::vector<char> set(n, 0);
    auto go = [&](auto& self, std::size_t k) -> bool {
        if (k == n)
            return true;
        std::size_t v = order[k];
        int lo = -span + 1, hi = span - 1;
        if (root[v])
            lo = hi = 0;
        // Bounds are integers, so every constraint to an assigned variable
        // cuts the window at a grid point.
        for (auto& c : cs) {
            std::size_t other = c.hi == v ? c.lo : c.lo == v ? c.hi : n;
            if (other == n || !set[other])
                continue;
            int b = static_cast<int>(numerator(c.bound)) * den;
            if (c.hi == v)
                hi = std::min(hi, x[other] + b - (c.strict ? 1 : 0));
            else
                lo = std::max(lo, x[other] - b + (c.strict ? 1 : 0));
        }
        for (int g = lo; g <= hi; ++g) {
            x[v] = g;
            set[v] = 1;
            if (self(self, k + 1))
                return true;
            set[v] = 0;
        }
        return false;
    };
    return go(go, 0);
}

} // namespace

TEST_CASE("intersection is symmetric and reflexive") {
    std::mt19937 rng(1);
    for (int k = 0; k < cases; ++k) {
        Interval a = random_interval(rng, rng() % 2), b = random_interval(rng, rng() % 2);
        CHECK(intersects(a, a));
        CHECK(intersects(a, b) == intersects(b, a));
        // Agrees with membership of a witness point when one exists.
        Rational m = (std::max(a.l(), b.l()) + std::min(a.r(), b.r())) / 2;
        if (a.contains(m) && b.contains(m))
            CHECK(intersects(a, b));
        CHECK(intersects(translate(a, 3), translate(b, 3)) == intersects(a, b));
        CHECK(intersects(reflect(a), reflect(b)) == intersects(a, b));
    }
}

TEST_CASE("trivial modifications preserve the predicates") {
    std::mt19937 rng(2);
    for (int k = 0; k < cases; ++k) {
        auto s = random_sample(rng);
        Rational t(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 7));
        bool mu = is_mixed_unit(s.rep), mp = is_mixed_proper(s.rep), ap = is_almost_proper(s.rep);
        for (auto& r : {translated(s.rep, t), reflected(s.rep), reflected(translated(s.rep, t))}) {
            CHECK(validate(s.graph, r).valid);
            CHECK(is_mixed_unit(r) == mu);
            CHECK(is_mixed_proper(r) == mp);
            CHECK(is_almost_proper(r) == ap);
        }
        auto r = relabeled(s.rep);
        CHECK(validate(relabeled(s.graph), r).valid);
        CHECK(is_mixed_unit(r) == mu);
        CHECK(is_mixed_proper(r) == mp);
    }
}

TEST_CASE("trivial modifications of the fixtures") {
    std::mt19937 rng(3);
    std::vector<Fixture> all;
    for (auto tag : all_fixture_tags()) {
        int n = parameter_count(tag);
        all.push_back(fixture({tag, n >= 1 ? 1 : 0, n >= 2 ? 2 : 0}));
    }
    for (int k = 0; k < cases; ++k) {
        auto& f = all[rng() % all.size()];
        Rational t(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 7));
        auto r = rng() % 2 ? translated(f.rep, t) : reflected(translated(f.rep, t));
        CHECK(validate(f.graph, r).valid);
        CHECK(is_mixed_unit(r));
    }
}

TEST_CASE("difference constraints agree with a grid search") {
    std::mt19937 rng(4);
    int feasible = 0;
    for (int k = 0; k < cases; ++k) {
        std::size_t n = 1 + rng() % 5;
        std::size_t m = rng() % 9;
        std::vector<IndexedConstraint> cs;
        for (std::size_t e = 0; e < m && n > 1; ++e) {
            std::size_t a = rng() % n, b = rng() % n;
            if (a == b)
                continue;
            cs.push_back({a, b, Rational(static_cast<int>(rng() % 3) - 1), rng() % 2 == 0});
        }
        auto x = solve_difference_constraints(n, cs);
        bool oracle = grid_feasible(n, cs);
        CHECK(x.has_value() == oracle);
        if (x) {
            ++feasible;
            CHECK(x->size() == n);
            CHECK(satisfies(cs, *x));
        }
    }
    // Both outcomes must be exercised.
    CHECK(feasible > cases / 10);
    CHECK(feasible < cases - cases / 10);
}

TEST_CASE("a representation validates against its own intersection bigraph") {
    std::mt19937 rng(5);
    for (int k = 0; k < cases; ++k) {
        auto s = random_sample(rng);
        CHECK(validate(s.graph, s.rep).valid);
        CHECK(intersection_bigraph(s.rep, sides_of(s.graph)) == s.graph);
    }
}
