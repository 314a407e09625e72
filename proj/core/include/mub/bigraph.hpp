#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <map>
#include <utility>
#include <vector>

namespace mub {

enum class Side { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

// Simple bipartite graph with labeled vertices. Vertices are numbered in
// insertion order; labels are opaque strings.
class Bigraph {
public:
    using Vertex = std::size_t;

    Vertex add_vertex(std::string label, Side side);
    void add_edge(Vertex a, Vertex b);
    void add_edge(std::string_view a, std::string_view b);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }

    const std::string& label(Vertex v) const { return labels_.at(v); }
    Side side(Vertex v) const { return sides_.at(v); }
    bool has(std::string_view label) const;
    std::optional<Vertex> find(std::string_view label) const;
    Vertex index(std::string_view label) const; // throws UnknownVertex

    bool adjacent(Vertex a, Vertex b) const { return adj_[a][b] != 0; }
    const std::vector<Vertex>& adj(Vertex v) const { return nbrs_.at(v); }
    std::size_t degree(Vertex v) const { return nbrs_.at(v).size(); }

    std::vector<std::string> x_vertices() const;
    std::vector<std::string> y_vertices() const;
    // (x label, y label) in vertex order.
    std::vector<std::pair<std::string, std::string>> edges() const;

    // Same labels on the same sides and the same edges.
    friend bool operator==(const Bigraph& a, const Bigraph& b);

    Bigraph induced(const std::vector<Vertex>& keep) const;
    Bigraph swapped() const;

private:
    std::vector<std::string> labels_;
    std::vector<Side> sides_;
    std::map<std::string, Vertex, std::less<>> index_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::size_t edges_ = 0;
};

std::vector<std::string> neighbors(const Bigraph& b, std::string_view v);
std::vector<std::pair<std::string, std::string>> find_copies(const Bigraph& b);
bool is_connected(const Bigraph& b);
std::vector<std::vector<Bigraph::Vertex>> components(const Bigraph& b);

struct Embedding {
    // mapping[p] = host vertex of pattern vertex p
    std::vector<Bigraph::Vertex> mapping;
    bool side_swapped = false;
};

// limit == 0 means unlimited.
std::vector<Embedding> induced_subgraph_search(const Bigraph& host, const Bigraph& pattern,
                                               std::size_t limit = 1);
bool is_induced_embedding(const Bigraph& host, const Bigraph& pattern, const Embedding& e);

// Canonical code of the unlabeled graph, invariant under vertex renaming and
// under swapping the two sides.
std::string canonical_form(const Bigraph& b);
bool isomorphic(const Bigraph& a, const Bigraph& b);

// One representative per isomorphism class of connected bipartite graphs with
// 1..max_n vertices, in order of size. The callback returns false to stop.
void enumerate_connected_bipartite(std::size_t max_n, const std::function<bool(const Bigraph&)>& visit);
std::vector<Bigraph> enumerate_connected_bipartite(std::size_t max_n);

// Text format: "X a b", "Y c d", "E a c", '#' comments.
Bigraph parse_bigraph(std::istream& in);
Bigraph parse_bigraph_text(std::string_view text);
void write_bigraph(std::ostream& out, const Bigraph& b);
std::string to_text(const Bigraph& b);

} // namespace mub
