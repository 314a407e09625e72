#include "mub/repair.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mub {

namespace {

using SideMap = std::map<std::string, Side, std::less<>>;

const Interval& iv(const Representation& rep, const std::string& v) {
    auto it = rep.find(v);
    if (it == rep.end())
        throw CoverageError("no interval for '" + v + "'");
    return it->second;
}

// b lies entirely to the right of a
bool lies_right(const Interval& a, const Interval& b) { return !intersects(a, b) && b.l() >= a.r(); }
bool lies_left(const Interval& a, const Interval& b) { return !intersects(a, b) && b.r() <= a.l(); }

std::string pair_text(const BadPair& p) { return "(" + p.inner + "," + p.outer + ")"; }

void require_bad_pair(const Representation& rep, const BadPair& p) {
    if (!is_bad_pair(iv(rep, p.inner), iv(rep, p.outer)))
        throw std::invalid_argument(pair_text(p) + " is not a bad pair");
}

std::string describe(const ValidityReport& r) {
    std::string s;
    for (auto& [a, b] : r.missing_edges)
        s += " lost " + a + "-" + b;
    for (auto& [a, b] : r.spurious_edges)
        s += " gained " + a + "-" + b;
    return s;
}

void check_valid(const Bigraph& b, const Representation& rep, int claim, const BadPair& p, const char* step) {
    auto report = validate(b, rep);
    if (!report.valid)
        throw RewriteInvalid(std::string(step) + " for " + pair_text(p) + " broke the representation:" +
                                 describe(report),
                             claim, p);
}

bool touches_bad_pair(const Representation& rep, const std::string& v) {
    const Interval& a = iv(rep, v);
    for (auto& [w, b] : rep)
        if (w != v && (is_bad_pair(a, b) || is_bad_pair(b, a)))
            return true;
    return false;
}

// One side of the layering. Right: a layer beyond `first` that meets `last`,
// sorted outward. Left is the mirror image.
std::vector<std::vector<std::string>> layers(const SideMap& sides, const Representation& rep, const BadPair& p,
                                             bool right) {
    std::vector<std::vector<std::string>> out;
    std::string first = p.inner, last = p.outer;
    for (std::size_t guard = 0; guard <= rep.size(); ++guard) {
        Side s = sides.at(first);
        const Interval& f = iv(rep, first);
        const Interval& g = iv(rep, last);
        std::vector<std::string> z;
        for (auto& [w, i] : rep) {
            if (sides.at(w) == s || !intersects(i, g))
                continue;
            if (right ? lies_right(f, i) : lies_left(f, i))
                z.push_back(w);
        }
        std::sort(z.begin(), z.end(), [&](const std::string& a, const std::string& b) {
            return right ? iv(rep, a).l() < iv(rep, b).l() : iv(rep, a).r() > iv(rep, b).r();
        });
        std::string where = right ? "right" : "left";
        std::string index = std::to_string(out.size() + 1);
        if (z.empty())
            throw StructureViolation(where + " layer " + index + " of " + pair_text(p) + " is empty", out.empty() ? 1 : 4,
                                     p);
        if (z.size() > 2)
            throw StructureViolation(where + " layer " + index + " of " + pair_text(p) + " has " +
                                         std::to_string(z.size()) + " vertices",
                                     4, p);
        out.push_back(z);
        if (z.size() == 1)
            return out;
        const Interval& a = iv(rep, z[0]);
        const Interval& b = iv(rep, z[1]);
        bool interleaved = right ? (a.l() < b.l() && b.l() < a.r() && a.r() < b.r())
                                 : (b.l() < a.l() && a.l() < b.r() && b.r() < a.r());
        if (!interleaved)
            throw StructureViolation(where + " layer " + index + " of " + pair_text(p) + " is not interleaved", 4, p);
        for (auto& [w, i] : rep) {
            if (sides.at(w) == sides.at(z[1]) || !intersects(i, a))
                continue;
            if (right ? lies_left(b, i) : lies_right(b, i))
                throw StructureViolation(w + " separates " + z[0] + " and " + z[1] + " from the " +
                                             (right ? "left" : "right"),
                                         4, p);
        }
        for (auto& v : z)
            if (touches_bad_pair(rep, v))
                throw StructureViolation(v + " in a layer of " + pair_text(p) + " is part of a bad pair", 5, p);
        first = z[0];
        last = z[1];
    }
    throw StructureViolation("layering of " + pair_text(p) + " does not terminate", 4, p);
}

Interval checked(const Rational& l, const Rational& r, bool lc, bool rc, int claim, const BadPair& p) {
    if (!(l < r))
        throw RewriteInvalid("rewrite for " + pair_text(p) + " produced an empty interval", claim, p);
    return Interval(l, r, lc, rc);
}

} // namespace

std::pair<std::string, std::string> claim1_witnesses(const Bigraph& b, const Representation& rep,
                                                     const BadPair& p) {
    require_bad_pair(rep, p);
    Side s = b.side(b.index(p.inner));
    const Interval& u = iv(rep, p.inner);
    const Interval& v = iv(rep, p.outer);
    std::optional<std::string> z1, z2;
    for (auto& [w, i] : rep) {
        if (b.side(b.index(w)) == s || !intersects(i, v))
            continue;
        if (lies_left(u, i) && (!z1 || iv(rep, *z1).r() < i.r()))
            z1 = w;
        if (lies_right(u, i) && (!z2 || i.l() < iv(rep, *z2).l()))
            z2 = w;
    }
    if (!z1 || !z2)
        throw NotMinimalRepresentation("bad pair " + pair_text(p) + " has no witness on the " +
                                           (z1 ? "right" : "left"),
                                       1, p);
    return {*z1, *z2};
}

BadPairStructure extract_structure(const Bigraph& b, const Representation& rep, const BadPair& p) {
    BadPairStructure s;
    s.pair = p;
    s.witnesses = claim1_witnesses(b, rep, p);
    s.cross_side = b.side(b.index(p.inner)) != b.side(b.index(p.outer));
    auto sides = sides_of(b);
    s.right_layers = layers(sides, rep, p, true);
    s.left_layers = layers(sides, rep, p, false);
    s.k_r = s.right_layers.size();
    s.k_l = s.left_layers.size();
    return s;
}

Representation rewrite_right(const Bigraph& b, const Representation& rep, const BadPairStructure& s) {
    Representation out = rep;
    const BadPair& p = s.pair;
    Rational edge = iv(rep, p.outer).r();
    for (auto& z : s.right_layers) {
        if (z.size() == 1) {
            out.insert_or_assign(z[0], checked(edge, iv(rep, z[0]).r(), true, true, 6, p));
            break;
        }
        Rational end = iv(rep, z[1]).r();
        out.insert_or_assign(z[1], checked(edge, end, true, true, 6, p));
        out.insert_or_assign(z[0], checked(edge, end, true, false, 6, p));
        edge = end;
    }
    check_valid(b, out, 6, p, "right rewrite");
    return out;
}

Representation rewrite_left(const Bigraph& b, const Representation& rep, const BadPairStructure& s) {
    Representation out = rep;
    const BadPair& p = s.pair;
    Rational edge = iv(rep, p.outer).l();
    for (auto& z : s.left_layers) {
        if (z.size() == 1) {
            out.insert_or_assign(z[0], checked(iv(rep, z[0]).l(), edge, true, true, 7, p));
            break;
        }
        Rational start = iv(rep, z[1]).l();
        out.insert_or_assign(z[1], checked(start, edge, true, true, 7, p));
        out.insert_or_assign(z[0], checked(start, edge, false, true, 7, p));
        edge = start;
    }
    check_valid(b, out, 7, p, "left rewrite");
    return out;
}

Representation finish_clean(const Bigraph& b, const Representation& rep, const BadPair& p) {
    require_bad_pair(rep, p);
    Side s = b.side(b.index(p.inner));
    const Interval& v = iv(rep, p.outer);
    bool left = false, right = false;
    for (auto& [w, i] : rep) {
        if (b.side(b.index(w)) == s)
            continue;
        left = left || (i.r() == v.l() && i.right_closed());
        right = right || (i.l() == v.r() && i.left_closed());
    }
    if (!left || !right)
        throw NotClean("bad pair " + pair_text(p) + " is not clean", 7, p);
    Representation out = rep;
    out.insert_or_assign(p.inner, Interval::open(v.l(), v.r()));
    check_valid(b, out, 7, p, "open copy");
    return out;
}

namespace {

struct Reduction {
    Bigraph graph;
    std::map<std::string, std::string> representative; // removed copy -> kept vertex
};

// Keeps one vertex per class of copies, preferring the one in the fewest bad pairs.
Reduction reduce_copies(const Bigraph& b, const Representation& rep) {
    std::vector<std::size_t> parent(b.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto& [a, c] : find_copies(b))
        parent[find(b.index(a))] = find(b.index(c));
    auto cost = [&](std::size_t v) {
        const Interval& a = iv(rep, b.label(v));
        std::size_t n = 0;
        for (auto& [w, i] : rep)
            n += (is_bad_pair(a, i) || is_bad_pair(i, a)) ? 1 : 0;
        return n;
    };
    std::map<std::size_t, std::size_t> best;
    for (std::size_t v = 0; v < b.size(); ++v) {
        auto [it, fresh] = best.emplace(find(v), v);
        if (!fresh && cost(v) < cost(it->second))
            it->second = v;
    }
    Reduction r;
    std::vector<Bigraph::Vertex> keep;
    for (std::size_t v = 0; v < b.size(); ++v) {
        std::size_t k = best.at(find(v));
        if (k == v)
            keep.push_back(v);
        else
            r.representative.emplace(b.label(v), b.label(k));
    }
    r.graph = b.induced(keep);
    return r;
}

} // namespace

RepairResult repair(const Bigraph& b, const Representation& rep, bool trace) {
    if (!validate(b, rep).valid)
        throw std::invalid_argument("repair: the representation does not match the graph");
    for (auto& [v, i] : rep)
        if (i.cls() != IntervalClass::CC)
            throw std::invalid_argument("repair: interval of '" + v + "' is not closed");

    RepairResult result;
    auto record = [&](const char* action, const BadPair& p, bool cross, const Representation& r) {
        if (trace)
            result.trace.push_back({action, p, cross, r});
    };
    record("input", {}, false, rep);
    if (list_bad_pairs(rep).empty()) {
        result.rep = rep;
        return result;
    }

    Reduction red = reduce_copies(b, rep);
    Representation cur;
    for (auto& [v, i] : rep)
        if (!red.representative.count(v))
            cur.emplace(v, i);
    if (!red.representative.empty())
        record("copy-reduce", {}, false, cur);

    std::size_t count = list_bad_pairs(cur).size();
    const std::size_t cap = count + 3;
    while (count > 0) {
        if (result.iterations >= cap) {
            result.failure = FailureReport{0, {}, "iteration cap reached", result.iterations};
            return result;
        }
        ++result.iterations;
        auto pairs = list_bad_pairs(cur);
        auto p = *std::max_element(pairs.begin(), pairs.end(), [&](const BadPair& a, const BadPair& c) {
            Rational la = iv(cur, a.outer).length(), lc = iv(cur, c.outer).length();
            if (la != lc)
                return la < lc;
            return std::tie(a.outer, a.inner) > std::tie(c.outer, c.inner);
        });
        try {
            auto s = extract_structure(red.graph, cur, p);
            cur = rewrite_right(red.graph, cur, s);
            record("rewrite-right", p, s.cross_side, cur);
            cur = rewrite_left(red.graph, cur, s);
            record("rewrite-left", p, s.cross_side, cur);
            cur = finish_clean(red.graph, cur, p);
            record("finish-clean", p, s.cross_side, cur);
        } catch (const RepairError& e) {
            result.failure = FailureReport{e.claim(), e.pair(), e.what(), result.iterations};
            return result;
        }
        std::size_t next = list_bad_pairs(cur).size();
        if (next > count) {
            result.failure = FailureReport{0, p, "bad pairs increased after repairing " + pair_text(p),
                                           result.iterations};
            return result;
        }
        count = next;
    }
    if (!is_mixed_proper(cur)) {
        result.failure = FailureReport{0, {}, "result is not mixed proper", result.iterations};
        return result;
    }
    for (auto& [v, k] : red.representative)
        cur.emplace(v, iv(cur, k));
    if (!red.representative.empty())
        record("expand", {}, false, cur);
    if (!validate(b, cur).valid)
        throw std::logic_error("repair: expanding copies broke the representation");
    result.rep = std::move(cur);
    return result;
}

} // namespace mub
