#include "mub/difference.hpp"

#include "mub/errors.hpp"

#include <algorithm>

namespace mub {

namespace {

// Path weight b + k*eps for an infinitesimal eps > 0; strict edges carry k = -1.
struct Weight {
    Rational b;
    long k = 0;
};

bool less(const Weight& p, const Weight& q) { return p.b < q.b || (p.b == q.b && p.k < q.k); }

} // namespace

std::optional<std::vector<Rational>> solve_difference_constraints(std::size_t n,
                                                                  const std::vector<IndexedConstraint>& cs) {
    for (auto& c : cs)
        if (c.hi >= n || c.lo >= n)
            throw Error("constraint variable out of range");
    std::vector<Weight> d(n); // virtual source at distance 0 from every variable
    bool changed = true;
    for (std::size_t round = 0; changed; ++round) {
        if (round > n)
            return std::nullopt;
        changed = false;
        for (auto& c : cs) {
            Weight w{d[c.lo].b + c.bound, d[c.lo].k - (c.strict ? 1 : 0)};
            if (less(w, d[c.hi])) {
                d[c.hi] = std::move(w);
                changed = true;
            }
        }
    }
    // Choose eps below every positive slack divided by the largest possible k spread.
    Rational gap = 1;
    for (auto& c : cs) {
        Rational slack = d[c.lo].b + c.bound - d[c.hi].b;
        if (slack > 0 && slack < gap)
            gap = slack;
    }
    Rational eps = gap / Rational(static_cast<long>(n) + 1);
    std::vector<Rational> x(n);
    for (std::size_t v = 0; v < n; ++v)
        x[v] = d[v].b + eps * d[v].k;
    return x;
}

bool satisfies(const std::vector<IndexedConstraint>& cs, const std::vector<Rational>& x) {
    for (auto& c : cs) {
        Rational diff = x[c.hi] - x[c.lo];
        if (c.strict ? !(diff < c.bound) : !(diff <= c.bound))
            return false;
    }
    return true;
}

std::optional<std::map<std::string, Rational>> solve_difference_constraints(
    const std::vector<DifferenceConstraint>& cs, const std::vector<std::string>& vars) {
    std::map<std::string, std::size_t> index;
    for (auto& v : vars)
        index.emplace(v, index.size());
    std::vector<IndexedConstraint> ics;
    for (auto& c : cs) {
        if (c.hi == c.lo)
            throw Error("constraint relates '" + c.hi + "' to itself");
        auto hi = index.find(c.hi), lo = index.find(c.lo);
        if (hi == index.end())
            throw UnknownVertex(c.hi);
        if (lo == index.end())
            throw UnknownVertex(c.lo);
        ics.push_back({hi->second, lo->second, c.bound, c.strict});
    }
    auto x = solve_difference_constraints(index.size(), ics);
    if (!x)
        return std::nullopt;
    std::map<std::string, Rational> out;
    for (auto& [name, k] : index)
        out.emplace(name, (*x)[k]);
    return out;
}

} // namespace mub
