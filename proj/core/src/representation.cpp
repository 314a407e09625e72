#include "mub/representation.hpp"

#include "mub/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace mub {

ValidityReport validate(const Bigraph& b, const Representation& rep) {
    std::string missing, extra;
    for (Bigraph::Vertex v = 0; v < b.size(); ++v)
        if (!rep.count(b.label(v)))
            missing += " " + b.label(v);
    for (auto& [label, iv] : rep)
        if (!b.has(label))
            extra += " " + label;
    if (!missing.empty() || !extra.empty()) {
        std::string msg = "representation does not cover the vertex set";
        if (!missing.empty())
            msg += "; missing:" + missing;
        if (!extra.empty())
            msg += "; extra:" + extra;
        throw CoverageError(msg);
    }
    std::vector<const Interval*> at(b.size());
    for (Bigraph::Vertex v = 0; v < b.size(); ++v)
        at[v] = &rep.find(b.label(v))->second;
    ValidityReport report;
    for (Bigraph::Vertex x = 0; x < b.size(); ++x) {
        if (b.side(x) != Side::X)
            continue;
        for (Bigraph::Vertex y = 0; y < b.size(); ++y) {
            if (b.side(y) != Side::Y)
                continue;
            bool meet = intersects(*at[x], *at[y]);
            if (b.adjacent(x, y) && !meet)
                report.missing_edges.emplace_back(b.label(x), b.label(y));
            else if (!b.adjacent(x, y) && meet)
                report.spurious_edges.emplace_back(b.label(x), b.label(y));
        }
    }
    report.valid = report.missing_edges.empty() && report.spurious_edges.empty();
    return report;
}

bool is_mixed_unit(const Representation& rep) {
    for (auto& [label, iv] : rep)
        if (!is_unit(iv))
            return false;
    return true;
}

bool is_bad_pair(const Interval& inner, const Interval& outer) {
    return inner.cls() == IntervalClass::CC && outer.cls() == IntervalClass::CC && outer.l() <= inner.l() &&
           inner.r() <= outer.r() && !inner.same_span(outer);
}

namespace {

bool has_closed_twin(const Representation& rep, const Interval& iv) {
    for (auto& [label, other] : rep)
        if (other.cls() == IntervalClass::CC && other.same_span(iv))
            return true;
    return false;
}

bool closed_nesting(const Representation& rep) {
    for (auto& [a, ia] : rep)
        for (auto& [b, ib] : rep)
            if (a != b && is_bad_pair(ia, ib))
                return true;
    return false;
}

} // namespace

bool is_mixed_proper(const Representation& rep) {
    if (closed_nesting(rep))
        return false;
    for (auto& [label, iv] : rep)
        if (iv.cls() != IntervalClass::CC && !has_closed_twin(rep, iv))
            return false;
    return true;
}

bool is_almost_proper(const Representation& rep) {
    for (auto& [label, iv] : rep)
        if (iv.cls() == IntervalClass::CO || iv.cls() == IntervalClass::OC)
            return false;
    return is_mixed_proper(rep);
}

std::vector<BadPair> list_bad_pairs(const Representation& rep) {
    std::vector<BadPair> out;
    for (auto& [a, ia] : rep)
        for (auto& [b, ib] : rep)
            if (a != b && is_bad_pair(ia, ib))
                out.push_back({a, b});
    return out;
}

Bigraph intersection_bigraph(const Representation& rep, const std::map<std::string, Side, std::less<>>& side_of) {
    Bigraph b;
    for (auto& [label, iv] : rep) {
        auto it = side_of.find(label);
        if (it == side_of.end())
            throw CoverageError("no side given for '" + label + "'");
        b.add_vertex(label, it->second);
    }
    if (side_of.size() != rep.size())
        throw CoverageError("side map covers vertices without intervals");
    std::vector<const Interval*> at;
    for (auto& [label, iv] : rep)
        at.push_back(&iv);
    for (Bigraph::Vertex u = 0; u < b.size(); ++u)
        for (Bigraph::Vertex v = u + 1; v < b.size(); ++v)
            if (b.side(u) != b.side(v) && intersects(*at[u], *at[v]))
                b.add_edge(u, v);
    return b;
}

std::map<std::string, Side, std::less<>> sides_of(const Bigraph& b) {
    std::map<std::string, Side, std::less<>> out;
    for (Bigraph::Vertex v = 0; v < b.size(); ++v)
        out.emplace(b.label(v), b.side(v));
    return out;
}

Representation parse_representation(std::istream& in) {
    Representation rep;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string label;
        if (!(ls >> label))
            continue;
        std::string lf, l, r, rf, extra;
        if (!(ls >> lf >> l >> r >> rf) || (ls >> extra))
            throw ParseError("expected '<label> <C|O> <l> <r> <C|O>'", lineno, 1);
        auto flag = [&](const std::string& f) {
            if (f == "C")
                return true;
            if (f == "O")
                return false;
            throw ParseError("boundary flag must be C or O, got '" + f + "'", lineno,
                             static_cast<int>(line.find(f)) + 1);
        };
        bool lc = flag(lf), rc = flag(rf);
        try {
            Interval iv(parse_rational(l), parse_rational(r), lc, rc);
            if (!rep.emplace(label, std::move(iv)).second)
                throw ParseError("duplicate vertex '" + label + "'", lineno, 1);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return rep;
}

Representation parse_representation_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_representation(in);
}

void write_representation(std::ostream& out, const Representation& rep) {
    for (auto& [label, iv] : rep)
        out << label << ' ' << (iv.left_closed() ? 'C' : 'O') << ' ' << to_string(iv.l()) << ' '
            << to_string(iv.r()) << ' ' << (iv.right_closed() ? 'C' : 'O') << '\n';
}

std::string to_text(const Representation& rep) {
    std::ostringstream os;
    write_representation(os, rep);
    return os.str();
}

} // namespace mub
