#include "mub/bigraph.hpp"

#include "mub/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace mub {

Bigraph::Vertex Bigraph::add_vertex(std::string label, Side side) {
    if (label.empty())
        throw Error("empty vertex label");
    if (index_.count(label))
        throw Error("duplicate vertex label '" + label + "'");
    Vertex v = labels_.size();
    index_.emplace(label, v);
    labels_.push_back(std::move(label));
    sides_.push_back(side);
    for (auto& row : adj_)
        row.push_back(0);
    adj_.emplace_back(labels_.size(), 0);
    nbrs_.emplace_back();
    return v;
}

void Bigraph::add_edge(Vertex a, Vertex b) {
    if (a >= size() || b >= size())
        throw Error("edge endpoint out of range");
    if (sides_[a] == sides_[b])
        throw Error("edge " + labels_[a] + "-" + labels_[b] + " joins two vertices of the same side");
    if (adj_[a][b])
        return;
    adj_[a][b] = adj_[b][a] = 1;
    nbrs_[a].push_back(b);
    nbrs_[b].push_back(a);
    ++edges_;
}

void Bigraph::add_edge(std::string_view a, std::string_view b) { add_edge(index(a), index(b)); }

bool Bigraph::has(std::string_view label) const { return index_.find(label) != index_.end(); }

std::optional<Bigraph::Vertex> Bigraph::find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Bigraph::Vertex Bigraph::index(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw UnknownVertex(std::string(label));
    return it->second;
}

std::vector<std::string> Bigraph::x_vertices() const {
    std::vector<std::string> out;
    for (Vertex v = 0; v < size(); ++v)
        if (sides_[v] == Side::X)
            out.push_back(labels_[v]);
    return out;
}

std::vector<std::string> Bigraph::y_vertices() const {
    std::vector<std::string> out;
    for (Vertex v = 0; v < size(); ++v)
        if (sides_[v] == Side::Y)
            out.push_back(labels_[v]);
    return out;
}

std::vector<std::pair<std::string, std::string>> Bigraph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (Vertex a = 0; a < size(); ++a) {
        if (sides_[a] != Side::X)
            continue;
        for (Vertex b = 0; b < size(); ++b)
            if (adj_[a][b])
                out.emplace_back(labels_[a], labels_[b]);
    }
    return out;
}

bool operator==(const Bigraph& a, const Bigraph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return false;
    for (Bigraph::Vertex v = 0; v < a.size(); ++v) {
        auto w = b.find(a.label(v));
        if (!w || b.side(*w) != a.side(v))
            return false;
    }
    for (auto& [x, y] : a.edges())
        if (!b.adjacent(b.index(x), b.index(y)))
            return false;
    return true;
}

Bigraph Bigraph::induced(const std::vector<Vertex>& keep) const {
    Bigraph h;
    for (Vertex v : keep)
        h.add_vertex(labels_.at(v), sides_.at(v));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adj_[keep[i]][keep[j]])
                h.add_edge(i, j);
    return h;
}

Bigraph Bigraph::swapped() const {
    Bigraph h;
    for (Vertex v = 0; v < size(); ++v)
        h.add_vertex(labels_[v], opposite(sides_[v]));
    for (Vertex a = 0; a < size(); ++a)
        for (Vertex b : nbrs_[a])
            if (a < b)
                h.add_edge(a, b);
    return h;
}

std::vector<std::string> neighbors(const Bigraph& b, std::string_view v) {
    std::vector<std::string> out;
    for (auto w : b.adj(b.index(v)))
        out.push_back(b.label(w));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::string, std::string>> find_copies(const Bigraph& b) {
    std::vector<std::pair<std::string, std::string>> out;
    for (Bigraph::Vertex u = 0; u < b.size(); ++u)
        for (Bigraph::Vertex v = u + 1; v < b.size(); ++v) {
            if (b.side(u) != b.side(v) || b.degree(u) != b.degree(v))
                continue;
            bool same = true;
            for (auto w : b.adj(u))
                if (!b.adjacent(v, w)) {
                    same = false;
                    break;
                }
            if (same)
                out.emplace_back(b.label(u), b.label(v));
        }
    return out;
}

std::vector<std::vector<Bigraph::Vertex>> components(const Bigraph& b) {
    std::vector<std::vector<Bigraph::Vertex>> out;
    std::vector<char> seen(b.size(), 0);
    for (Bigraph::Vertex s = 0; s < b.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<Bigraph::Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (auto w : b.adj(comp[k]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Bigraph& b) { return components(b).size() <= 1; }

// ---- induced subgraph search ----------------------------------------------

namespace {

struct Matcher {
    const Bigraph& host;
    const Bigraph& pat;
    bool swapped;
    std::size_t limit;
    std::vector<Embedding>& out;

    std::vector<Bigraph::Vertex> order;
    std::vector<Bigraph::Vertex> map;
    std::vector<char> used;

    static constexpr auto none = static_cast<Bigraph::Vertex>(-1);

    Side target_side(Bigraph::Vertex p) const { return swapped ? opposite(pat.side(p)) : pat.side(p); }

    void build_order() {
        std::size_t n = pat.size();
        std::vector<char> placed(n, 0);
        std::vector<std::size_t> placed_nbrs(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            Bigraph::Vertex best = none;
            for (Bigraph::Vertex p = 0; p < n; ++p) {
                if (placed[p])
                    continue;
                if (best == none || placed_nbrs[p] > placed_nbrs[best] ||
                    (placed_nbrs[p] == placed_nbrs[best] && pat.degree(p) > pat.degree(best)))
                    best = p;
            }
            placed[best] = 1;
            order.push_back(best);
            for (auto w : pat.adj(best))
                ++placed_nbrs[w];
        }
    }

    bool consistent(std::size_t depth, Bigraph::Vertex p, Bigraph::Vertex h) const {
        if (used[h] || host.side(h) != target_side(p) || host.degree(h) < pat.degree(p))
            return false;
        for (std::size_t k = 0; k < depth; ++k) {
            Bigraph::Vertex q = order[k];
            if (pat.adjacent(p, q) != host.adjacent(h, map[q]))
                return false;
        }
        return true;
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) {
            out.push_back({map, swapped});
            return limit == 0 || out.size() < limit;
        }
        Bigraph::Vertex p = order[depth];
        // Candidates come from the neighborhood of a placed neighbor if there is one.
        Bigraph::Vertex anchor = none;
        for (std::size_t k = 0; k < depth && anchor == none; ++k)
            if (pat.adjacent(p, order[k]))
                anchor = map[order[k]];
        auto try_host = [&](Bigraph::Vertex h) {
            if (!consistent(depth, p, h))
                return true;
            map[p] = h;
            used[h] = 1;
            bool go = run(depth + 1);
            used[h] = 0;
            map[p] = none;
            return go;
        };
        if (anchor != none) {
            for (auto h : host.adj(anchor))
                if (!try_host(h))
                    return false;
        } else {
            for (Bigraph::Vertex h = 0; h < host.size(); ++h)
                if (!try_host(h))
                    return false;
        }
        return true;
    }
};

} // namespace

std::vector<Embedding> induced_subgraph_search(const Bigraph& host, const Bigraph& pattern, std::size_t limit) {
    std::vector<Embedding> out;
    if (pattern.size() > host.size() || pattern.size() == 0)
        return out;
    for (bool swapped : {false, true}) {
        Matcher m{host, pattern, swapped, limit, out, {}, {}, {}};
        m.map.assign(pattern.size(), Matcher::none);
        m.used.assign(host.size(), 0);
        m.build_order();
        if (!m.run(0))
            break;
    }
    return out;
}

bool is_induced_embedding(const Bigraph& host, const Bigraph& pattern, const Embedding& e) {
    if (e.mapping.size() != pattern.size())
        return false;
    std::set<Bigraph::Vertex> image(e.mapping.begin(), e.mapping.end());
    if (image.size() != e.mapping.size())
        return false;
    for (Bigraph::Vertex p = 0; p < pattern.size(); ++p) {
        if (e.mapping[p] >= host.size())
            return false;
        Side want = e.side_swapped ? opposite(pattern.side(p)) : pattern.side(p);
        if (host.side(e.mapping[p]) != want)
            return false;
        for (Bigraph::Vertex q = p + 1; q < pattern.size(); ++q)
            if (pattern.adjacent(p, q) != host.adjacent(e.mapping[p], e.mapping[q]))
                return false;
    }
    return true;
}

// ---- text format ------------------------------------------------------------

Bigraph parse_bigraph(std::istream& in) {
    Bigraph b;
    std::vector<std::pair<std::pair<std::string, std::string>, int>> pending;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind))
            continue;
        if (kind == "X" || kind == "Y") {
            Side s = kind == "X" ? Side::X : Side::Y;
            std::string lab;
            while (ls >> lab) {
                if (b.has(lab))
                    throw ParseError("duplicate vertex label '" + lab + "'", lineno,
                                     static_cast<int>(line.find(lab)) + 1);
                b.add_vertex(lab, s);
            }
        } else if (kind == "E") {
            std::string a, c, extra;
            if (!(ls >> a >> c) || (ls >> extra))
                throw ParseError("edge line needs exactly two labels", lineno, 1);
            pending.push_back({{a, c}, lineno});
        } else {
            throw ParseError("unknown record '" + kind + "'", lineno, static_cast<int>(line.find(kind)) + 1);
        }
    }
    for (auto& [e, ln] : pending) {
        auto a = b.find(e.first);
        auto c = b.find(e.second);
        if (!a)
            throw ParseError("unknown vertex '" + e.first + "'", ln);
        if (!c)
            throw ParseError("unknown vertex '" + e.second + "'", ln);
        if (b.side(*a) == b.side(*c))
            throw ParseError("edge " + e.first + " " + e.second + " has both ends on one side", ln);
        b.add_edge(*a, *c);
    }
    return b;
}

Bigraph parse_bigraph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_bigraph(in);
}

void write_bigraph(std::ostream& out, const Bigraph& b) {
    auto xs = b.x_vertices();
    auto ys = b.y_vertices();
    out << "X";
    for (auto& v : xs)
        out << ' ' << v;
    out << "\nY";
    for (auto& v : ys)
        out << ' ' << v;
    out << '\n';
    for (auto& [x, y] : b.edges())
        out << "E " << x << ' ' << y << '\n';
}

std::string to_text(const Bigraph& b) {
    std::ostringstream os;
    write_bigraph(os, b);
    return os.str();
}

} // namespace mub
