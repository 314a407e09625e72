#include "mub/families.hpp"

#include "mub/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace mub {

namespace {

struct TagInfo {
    FamilyTag tag;
    std::string_view name;
    int params;
    bool primed;
    bool tilde;
};

constexpr std::array<TagInfo, 32> tag_table{{
    {FamilyTag::H1, "H1", 0, false, false},   {FamilyTag::H2, "H2", 0, false, false},
    {FamilyTag::H3, "H3", 0, false, false},   {FamilyTag::F1, "F1", 0, false, false},
    {FamilyTag::F2, "F2", 0, false, false},   {FamilyTag::F3, "F3", 0, false, false},
    {FamilyTag::F4, "F4", 0, false, false},   {FamilyTag::F5, "F5", 0, false, false},
    {FamilyTag::F6, "F6", 0, false, false},   {FamilyTag::F7, "F7", 0, false, false},
    {FamilyTag::F8, "F8", 0, false, false},   {FamilyTag::F9, "F9", 0, false, false},
    {FamilyTag::F10, "F10", 0, false, false}, {FamilyTag::F11, "F11", 0, false, false},
    {FamilyTag::F12, "F12", 0, false, false}, {FamilyTag::F13, "F13", 0, false, false},
    {FamilyTag::B0, "B0", 0, false, false},   {FamilyTag::B1, "B1", 0, false, false},
    {FamilyTag::B2, "B2", 0, false, false},   {FamilyTag::K, "K", 0, false, false},
    {FamilyTag::M, "M", 0, false, false},     {FamilyTag::H0, "H0", 0, false, false},
    {FamilyTag::L, "L", 2, false, false},     {FamilyTag::Mfam, "Mfam", 1, false, false},
    {FamilyTag::N, "N", 1, false, false},     {FamilyTag::Hp, "Hp", 1, false, false},
    {FamilyTag::Kfam, "Kfam", 2, true, true}, {FamilyTag::P, "P", 1, true, true},
    {FamilyTag::Q, "Q", 1, true, true},       {FamilyTag::R, "R", 1, true, true},
    {FamilyTag::S, "S", 1, true, true},       {FamilyTag::T, "T", 2, true, false},
}};

const TagInfo& info(FamilyTag tag) {
    for (auto& t : tag_table)
        if (t.tag == tag)
            return t;
    throw Error("unknown family tag");
}

// Edge lists of the fixed graphs, x label first.
const char* fixed_edges(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::H1: return "x_2 y_2, x_4 y_2, x_4 y_1, x_4 y_3, x_1 y_1, x_3 y_3";
    case FamilyTag::H2: return "x_2 y_2, x_2 y_1, x_2 y_4, x_1 y_1, x_3 y_1, x_3 y_3, x_3 y_4";
    case FamilyTag::H3: return "x_2 y_2, x_4 y_2, x_2 y_1, x_3 y_1, x_4 y_1, x_1 y_1, x_3 y_3, x_4 y_3";
    case FamilyTag::F1: return "x_2 y_1, x_1 y_1, x_1 y_0, x_1 y_2, x_1 y_3, x_0 y_0, x_3 y_2";
    case FamilyTag::F2: return "x_1 y_1, x_2 y_1, x_3 y_1, x_4 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_3 y_2, x_4 y_3";
    case FamilyTag::F3:
        return "x_1 y_1, x_2 y_1, x_3 y_1, x_2 y_2, x_2 y_3, x_2 y_5, x_3 y_3, x_4 y_3, x_3 y_4, x_3 y_5";
    case FamilyTag::F4:
        return "x_1 y_1, x_2 y_1, x_3 y_1, x_5 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_3 y_3, x_4 y_3, x_5 y_3, "
               "x_3 y_4";
    case FamilyTag::F5:
        return "x_1 y_1, x_2 y_1, x_4 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_3 y_2, x_3 y_3, x_4 y_3, x_4 y_4, "
               "x_5 y_4";
    case FamilyTag::F6:
        return "x_3 y_4, x_3 y_1, x_3 y_3, x_2 y_1, x_4 y_1, x_1 y_1, x_2 y_2, x_2 y_5, x_4 y_2, x_4 y_3, "
               "x_4 y_5, x_5 y_5";
    case FamilyTag::F7:
        return "x_1 y_1, x_2 y_1, x_4 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_3 y_2, x_4 y_4, x_4 y_5, x_4 y_6, "
               "x_5 y_6";
    case FamilyTag::F8:
        return "x_1 y_1, x_1 y_4, x_2 y_1, x_3 y_1, x_2 y_2, x_3 y_2, x_3 y_3, x_3 y_4, x_3 y_5, x_4 y_3, "
               "x_4 y_4";
    case FamilyTag::F9:
        return "x_1 y_1, x_1 y_3, x_1 y_4, x_2 y_1, x_3 y_1, x_4 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_3 y_3, "
               "x_6 y_3, x_4 y_4, x_5 y_4";
    case FamilyTag::F10:
        return "x_1 y_1, x_1 y_3, x_1 y_4, x_2 y_1, x_3 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_3 y_3, x_4 y_3, "
               "x_5 y_4, x_6 y_4, x_5 y_5";
    case FamilyTag::F11:
        return "x_1 y_1, x_1 y_4, x_2 y_1, x_3 y_1, x_4 y_1, x_2 y_2, x_3 y_2, x_4 y_2, x_3 y_3, x_3 y_4, "
               "x_3 y_5, x_4 y_3, x_4 y_4";
    case FamilyTag::F12:
        return "x_1 y_1, x_1 y_2, x_1 y_4, x_2 y_1, x_3 y_1, x_5 y_1, x_6 y_1, x_2 y_2, x_3 y_2, x_7 y_2, "
               "x_3 y_3, x_3 y_4, x_4 y_3, x_5 y_3, x_4 y_4, x_5 y_4";
    case FamilyTag::F13:
        return "x_1 y_1, x_2 y_1, x_4 y_1, x_5 y_1, x_2 y_2, x_2 y_3, x_2 y_5, x_3 y_2, x_3 y_3, x_4 y_3, "
               "x_5 y_3, x_4 y_4, x_4 y_5, x_5 y_5";
    case FamilyTag::B0: return "u v_0'', u v_0, u v_0', u_0' v_0'', u_0 v_0'', u_0 v_0'";
    case FamilyTag::B1: return "x_1 y_1, x_2 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_3 y_2, x_4 y_3, x_5 y_4";
    case FamilyTag::B2:
        return "x_1 y_1, x_2 y_1, x_6 y_1, x_2 y_2, x_2 y_3, x_2 y_4, x_2 y_5, x_2 y_6, x_3 y_2, x_4 y_3, "
               "x_5 y_3, x_5 y_4, x_6 y_5";
    case FamilyTag::K:
        return "x_2 y_1, x_2 y_4, x_2 y_2, x_2 y_2', x_3 y_1, x_1 y_1, x_3 y_4, x_3 y_3, x_3 y_3', x_4 y_2, "
               "x_4' y_2', x_5 y_3";
    case FamilyTag::M:
        return "x_3 y_3, x_3 y_1, x_3 y_4, x_2 y_1, x_5 y_1, x_1 y_1, x_4 y_1, x_2 y_2, x_2 y_4, x_1 y_5, "
               "x_1 y_6, x_4 y_5";
    case FamilyTag::H0:
        return "x_4 y_2, x_2 y_2, x_4 y_3, x_4 y_1, x_3 y_3, x_3 y_1, x_2 y_1, x_1 y_1, x_5 y_1, x_6 y_1, "
               "x_1 y_5, x_1 y_4, x_5 y_4";
    default: return nullptr;
    }
}

Bigraph from_edge_list(const char* text) {
    std::vector<std::pair<std::string, std::string>> es;
    std::set<std::string> xs, ys;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::istringstream is(item);
        std::string a, b;
        is >> a >> b;
        es.emplace_back(a, b);
        xs.insert(a);
        ys.insert(b);
    }
    Bigraph g;
    for (auto& v : xs)
        g.add_vertex(v, Side::X);
    for (auto& v : ys)
        g.add_vertex(v, Side::Y);
    for (auto& [a, b] : es)
        g.add_edge(a, b);
    return g;
}

std::string sub(int n, const char* primes = "") { return "_" + std::to_string(n) + primes; }

struct Builder {
    Bigraph g;

    void add(const std::string& v, Side s) { g.add_vertex(v, s); }
    void add(std::initializer_list<const char*> vs, Side s) {
        for (auto v : vs)
            g.add_vertex(v, s);
    }
    void edge(const std::string& a, const std::string& b) { g.add_edge(a, b); }
    void edges(std::initializer_list<std::pair<const char*, const char*>> es) {
        for (auto& [a, b] : es)
            g.add_edge(a, b);
    }
    Side side(const std::string& v) const { return g.side(g.index(v)); }

    // start - c_1 - ... - c_len, c_k named name(k) except c_len named last;
    // each c_k with k < len gets a pendant pend(k).
    std::vector<std::string> chain(const std::string& start, int len, const std::function<std::string(int)>& name,
                                   const std::function<std::string(int)>& pend, const std::string& last) {
        std::vector<std::string> out;
        std::string prev = start;
        Side s = opposite(side(start));
        for (int k = 1; k <= len; ++k) {
            std::string v = k == len ? last : name(k);
            add(v, s);
            edge(prev, v);
            out.push_back(v);
            if (k < len) {
                add(pend(k), opposite(s));
                edge(v, pend(k));
            }
            prev = v;
            s = opposite(s);
        }
        return out;
    }

    void fork(const std::string& u) {
        Side s = opposite(side(u));
        add("v'", s);
        add("v''", s);
        edge(u, "v'");
        edge(u, "v''");
    }

    // u - v' - t', u - v'' - t''
    void long_fork(const std::string& u) {
        fork(u);
        add("t'", side(u));
        add("t''", side(u));
        edge("v'", "t'");
        edge("v''", "t''");
    }
};

// Alternating y/x chain labels used on the right-hand side of the pictures.
auto odd_even(const char* odd_base, const char* even_base, int even_shift, const char* primes) {
    return [=](int p) {
        if (p % 2)
            return std::string(odd_base) + sub((p + 1) / 2, primes);
        return std::string(even_base) + sub(p / 2 + even_shift, primes);
    };
}

Bigraph k_primed(int i, int j) {
    Builder b;
    b.add({"x_1", "x_1''", "x_0"}, Side::X);
    b.add({"y_0", "y", "y_1'''", "y_1'"}, Side::Y);
    b.edges({{"x_1''", "y_0"}, {"y_0", "x_1"}, {"x_1", "y"}, {"y", "x_1''"}, {"y_0", "x_0"}, {"x_1''", "y_1'''"},
             {"x_1", "y_1'"}});
    b.chain("x_1''", i, odd_even("y", "x", 1, "''"), odd_even("x", "y", 1, "'''"), "z");
    Side zs = b.side("z");
    b.add("w'", opposite(zs));
    b.add("w", opposite(zs));
    b.add("z''", zs);
    b.add("z'", zs);
    b.edges({{"z", "w'"}, {"w'", "z''"}, {"z", "w"}, {"w", "z'"}});
    b.chain("x_1", j, odd_even("y", "x", 1, ""), odd_even("x", "y", 1, "'"), "u");
    b.fork("u");
    return b.g;
}

Bigraph p_primed(int i) {
    Builder b;
    b.add({"x_1''", "x_2''", "x_3''"}, Side::X);
    b.add({"y_1''", "y_2''", "y_3''", "y_4''"}, Side::Y);
    b.edges({{"y_2''", "x_2''"}, {"x_2''", "y_1''"}, {"y_1''", "x_1''"}, {"x_2''", "y_3''"}, {"y_3''", "x_3''"},
             {"x_3''", "y_4''"}, {"y_2''", "x_3''"}, {"x_3''", "y_1''"}});
    std::string first = i == 1 ? "u" : "x_1";
    b.add(first, Side::X);
    b.edge(first, "y_2''");
    b.edge(first, "y_1''");
    if (i > 1) {
        b.add("y_1'", Side::Y);
        b.edge("x_1", "y_1'");
        b.chain("x_1", i - 1, odd_even("y", "x", 1, ""), odd_even("x", "y", 1, "'"), "u");
    }
    b.fork("u");
    return b.g;
}

Bigraph t_primed(int i, int j) {
    Builder b;
    b.add({"x", "x_0"}, Side::X);
    b.add({"y", "y_0"}, Side::Y);
    b.edges({{"x", "y"}, {"x", "y_0"}, {"y_0", "x_0"}});
    b.chain("x", i, odd_even("y", "x", 0, "''"), odd_even("x", "y", 0, "'''"), "z");
    Side zs = b.side("z");
    b.add("w_0", opposite(zs));
    b.add("w_0'", opposite(zs));
    b.add("z_0", zs);
    b.add("z_0'", zs);
    b.edges({{"z", "w_0"}, {"w_0", "z_0"}, {"z", "w_0'"}, {"w_0'", "z_0'"}, {"z_0'", "w_0"}});
    b.chain("x", j, odd_even("y", "x", 0, ""), odd_even("x", "y", 0, "'"), "u");
    Side us = b.side("u");
    b.add("v_0", opposite(us));
    b.add("v_0'", opposite(us));
    b.add("v'", opposite(us));
    b.add("u_0", us);
    b.add("u_0'", us);
    b.edges({{"u", "v_0"}, {"v_0", "u_0"}, {"u", "v_0'"}, {"v_0'", "u_0'"}, {"u_0'", "v_0"}, {"u", "v'"}});
    return b.g;
}

Bigraph q_primed(int i) {
    Builder b;
    b.add({"x_1''", "x_2''", "x_3''", "x_4''", "x_5''"}, Side::X);
    b.add({"y_1''", "y_2''", "y_3''", "y_4''", "y_5''"}, Side::Y);
    b.edges({{"x_1''", "y_1''"}, {"y_1''", "x_2''"}, {"y_1''", "x_3''"}, {"y_1''", "x_5''"}, {"x_2''", "y_2''"},
             {"x_2''", "y_5''"}, {"x_2''", "y_4''"}, {"y_2''", "x_4''"}, {"x_4''", "y_5''"}, {"y_5''", "x_3''"},
             {"y_5''", "x_5''"}, {"x_3''", "y_3''"}, {"x_3''", "y_4''"}, {"y_4''", "x_5''"}});
    std::string first = i == 1 ? "u" : "x_1";
    b.add(first, Side::X);
    b.edge(first, "y_2''");
    b.edge(first, "y_5''");
    if (i > 1) {
        b.add("y_1'", Side::Y);
        b.edge("x_1", "y_1'");
        // chain positions continue the x_1, y_1, x_2, ... sequence
        auto name = [](int p) {
            ++p;
            return p % 2 ? "x" + sub((p + 1) / 2) : "y" + sub(p / 2);
        };
        auto pend = [](int p) {
            ++p;
            return p % 2 ? "y" + sub((p + 1) / 2, "'") : "x" + sub(p / 2 + 1, "'");
        };
        b.chain("x_1", i - 1, name, pend, "u");
    }
    b.fork("u");
    return b.g;
}

Bigraph s_primed(int i) {
    Builder b;
    b.add({"x_0", "x", "x'", "x_1''"}, Side::X);
    b.add({"y_0", "y'", "y_1'"}, Side::Y);
    b.edges({{"x_0", "y_0"}, {"y_0", "x"}, {"x", "y'"}, {"y'", "x'"}, {"x", "y_1'"}, {"y_1'", "x_1''"}});
    auto cs = b.chain("x", i, odd_even("y", "x", 0, ""), odd_even("x", "y", 1, "'"), "u");
    b.edge(cs[0], "x_1''");
    b.fork("u");
    return b.g;
}

Bigraph r_primed(int i) {
    Builder b;
    b.add({"x_1''", "x", "x'", "x''"}, Side::X);
    b.add({"y_1''", "y'", "y_2''", "y_1'"}, Side::Y);
    b.edges({{"x_1''", "y_1''"}, {"y_1''", "x"}, {"x", "y'"}, {"y'", "x'"}, {"x", "y_2''"}, {"y_2''", "x''"},
             {"x''", "y_1''"}, {"x", "y_1'"}});
    b.chain("x", i, odd_even("y", "x", 0, ""), odd_even("x", "y", 1, "'"), "u");
    b.fork("u");
    return b.g;
}

// Path of len vertices d_1 .. d_len hanging from base, pendants d_k' on all
// but the last, which is u and carries the two 2-arms.
void tail(Builder& b, const std::string& base, int len) {
    b.chain(base, len, [](int k) { return "d" + sub(k); }, [](int k) { return "d" + sub(k, "'"); }, "u");
    b.long_fork("u");
}

Bigraph l_family(int i, int j) {
    Builder b;
    std::vector<std::string> spine;
    for (int k = 1; k <= i; ++k)
        spine.push_back("s" + sub(k));
    spine.push_back("c");
    for (int k = 1; k < j; ++k)
        spine.push_back("t" + sub(k));
    spine.push_back("u");
    Side s = Side::X;
    for (std::size_t k = 0; k < spine.size(); ++k) {
        b.add(spine[k], s);
        if (k)
            b.edge(spine[k - 1], spine[k]);
        s = opposite(s);
    }
    auto arm = [&](const std::string& at, const std::string& mid, const std::string& end) {
        b.add(mid, opposite(b.side(at)));
        b.edge(at, mid);
        if (!end.empty()) {
            b.add(end, b.side(at));
            b.edge(mid, end);
        }
    };
    arm("s_1", "a", "a'");
    arm("s_1", "b", "b'");
    arm("c", "g", "g'");
    arm("c", "h", "");
    for (std::size_t k = 1; k + 1 < spine.size(); ++k)
        if (spine[k] != "c")
            arm(spine[k], spine[k] + "'", "");
    b.long_fork("u");
    return b.g;
}

Bigraph m_family(int i) {
    Builder b;
    b.add({"a", "c", "b'"}, Side::X);
    b.add({"b", "m", "a'", "c'"}, Side::Y);
    b.edges({{"a", "b"}, {"b", "c"}, {"c", "m"}, {"m", "a"}, {"a", "a'"}, {"c", "c'"}, {"b", "b'"}});
    tail(b, "b", i);
    return b.g;
}

Bigraph n_family(int i) {
    Builder b;
    b.add({"a", "n", "p", "q'"}, Side::X);
    b.add({"b", "c", "q", "p'"}, Side::Y);
    b.edges({{"a", "b"}, {"b", "n"}, {"n", "c"}, {"c", "p"}, {"p", "q"}, {"q", "a"}, {"b", "p"}, {"q", "q'"},
             {"p", "p'"}});
    tail(b, "b", i);
    b.edge(i == 1 ? "u" : "d_1", "c");
    return b.g;
}

Bigraph hp_family(int i) {
    Builder b;
    b.add({"a", "b", "t"}, Side::X);
    b.add({"r", "s", "c", "b'"}, Side::Y);
    b.edges({{"a", "r"}, {"r", "b"}, {"b", "s"}, {"s", "t"}, {"t", "c"}, {"c", "a"}, {"c", "b"}, {"b", "b'"}});
    tail(b, "b", i);
    return b.g;
}

// Unprimed K, P, Q, R, S: pendants t', t'' on v', v''.
Bigraph extend(Bigraph g) {
    for (auto [v, t] : {std::pair{"v'", "t'"}, std::pair{"v''", "t''"}}) {
        auto vi = g.index(v);
        auto ti = g.add_vertex(t, opposite(g.side(vi)));
        g.add_edge(vi, ti);
    }
    return g;
}

Bigraph primed_member(const FamilyId& id) {
    switch (id.tag) {
    case FamilyTag::Kfam: return k_primed(id.i, id.j);
    case FamilyTag::P: return p_primed(id.i);
    case FamilyTag::T: return t_primed(id.i, id.j);
    case FamilyTag::Q: return q_primed(id.i);
    case FamilyTag::S: return s_primed(id.i);
    case FamilyTag::R: return r_primed(id.i);
    default: throw UnsupportedConstruction("no primed family " + std::string(tag_name(id.tag)));
    }
}

void check_params(const FamilyId& id) {
    int need = parameter_count(id.tag);
    bool ok = need == 0 ? (id.i == 0 && id.j == 0) : need == 1 ? (id.i >= 1 && id.j == 0) : (id.i >= 1 && id.j >= 1);
    if (!ok)
        throw UnsupportedConstruction("bad parameters for " + to_string(id));
    if (id.primed && id.tilde)
        throw UnsupportedConstruction("primed and tilde together: " + to_string(id));
    if (id.primed && !supports_primed(id.tag))
        throw UnsupportedConstruction("no primed variant of " + std::string(tag_name(id.tag)));
    if (id.tilde && !supports_tilde(id.tag))
        throw UnsupportedConstruction("no tilde variant of " + std::string(tag_name(id.tag)));
}

} // namespace

int parameter_count(FamilyTag tag) { return info(tag).params; }
bool supports_primed(FamilyTag tag) { return info(tag).primed; }
bool supports_tilde(FamilyTag tag) { return info(tag).tilde; }
std::string_view tag_name(FamilyTag tag) { return info(tag).name; }

std::optional<FamilyTag> tag_from_name(std::string_view name) {
    for (auto& t : tag_table)
        if (t.name == name)
            return t.tag;
    return std::nullopt;
}

std::string to_string(const FamilyId& id) {
    std::string s = id.tilde ? "~" : "";
    s += tag_name(id.tag);
    if (id.primed)
        s += "'";
    int n = parameter_count(id.tag);
    if (n == 1)
        s += "(" + std::to_string(id.i) + ")";
    else if (n == 2)
        s += "(" + std::to_string(id.i) + "," + std::to_string(id.j) + ")";
    return s;
}

Bigraph generate(const FamilyId& id) {
    check_params(id);
    if (id.tilde)
        return tilde(id);
    if (const char* es = fixed_edges(id.tag))
        return from_edge_list(es);
    if (id.primed)
        return primed_member(id);
    switch (id.tag) {
    case FamilyTag::L: return l_family(id.i, id.j);
    case FamilyTag::Mfam: return m_family(id.i);
    case FamilyTag::N: return n_family(id.i);
    case FamilyTag::Hp: return hp_family(id.i);
    case FamilyTag::T: {
        Bigraph g = t_primed(id.i, id.j);
        auto z = g.index("z");
        g.add_edge(z, g.add_vertex("z'''", opposite(g.side(z))));
        return g;
    }
    default: return extend(primed_member(id));
    }
}

Bigraph tilde(const FamilyId& id) {
    if (!supports_tilde(id.tag))
        throw UnsupportedConstruction("tilde construction is not available for " + std::string(tag_name(id.tag)));
    FamilyId base = id;
    base.tilde = false;
    base.primed = true;
    check_params(base);
    Bigraph gp = primed_member(base);
    auto sv = special_vertices(base);
    if (!sv || !gp.has(sv->v1) || !gp.has(sv->v2))
        throw UnsupportedConstruction("base graph lacks the special vertices v', v''");
    std::vector<Bigraph::Vertex> keep;
    for (Bigraph::Vertex v = 0; v < gp.size(); ++v)
        if (gp.label(v) != sv->v1 && gp.label(v) != sv->v2)
            keep.push_back(v);
    Bigraph g = gp.induced(keep);
    Bigraph b0 = from_edge_list(fixed_edges(FamilyTag::B0));
    bool flip = g.side(g.index(sv->u)) != b0.side(b0.index("u"));
    for (Bigraph::Vertex v = 0; v < b0.size(); ++v) {
        if (b0.label(v) == "u")
            continue;
        if (g.has(b0.label(v)))
            throw UnsupportedConstruction("label clash while attaching B0: " + b0.label(v));
        g.add_vertex(b0.label(v), flip ? opposite(b0.side(v)) : b0.side(v));
    }
    for (auto& [a, c] : b0.edges())
        g.add_edge(a == "u" ? sv->u : a, c == "u" ? sv->u : c);
    return g;
}

std::optional<SpecialVertices> special_vertices(const FamilyId& id) {
    if (id.tilde)
        return std::nullopt;
    switch (id.tag) {
    case FamilyTag::Kfam:
    case FamilyTag::P:
    case FamilyTag::Q:
    case FamilyTag::R:
    case FamilyTag::S:
    case FamilyTag::L:
    case FamilyTag::Mfam:
    case FamilyTag::N:
    case FamilyTag::Hp: return SpecialVertices{"u", "v'", "v''"};
    default: return std::nullopt;
    }
}

std::vector<CatalogEntry> forbidden_catalog(std::size_t max_vertices) {
    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    auto offer = [&](const FamilyId& id) {
        Bigraph g = generate(id);
        if (g.size() > max_vertices)
            return false;
        if (seen.insert(canonical_form(g)).second)
            out.push_back({id, std::move(g)});
        return true;
    };
    for (auto tag : {FamilyTag::F2, FamilyTag::F4, FamilyTag::F5, FamilyTag::F8, FamilyTag::F9, FamilyTag::F11,
                     FamilyTag::F12, FamilyTag::B1, FamilyTag::B2, FamilyTag::K, FamilyTag::M, FamilyTag::H0})
        offer({tag});
    auto sweep = [&](FamilyTag tag, bool tilde) {
        if (parameter_count(tag) == 1) {
            for (int i = 1; offer({tag, i, 0, false, tilde}); ++i) {
            }
            return;
        }
        for (int i = 1; offer({tag, i, 1, false, tilde}); ++i)
            for (int j = 2; offer({tag, i, j, false, tilde}); ++j) {
            }
    };
    for (auto tag : {FamilyTag::L, FamilyTag::Mfam, FamilyTag::N, FamilyTag::Hp, FamilyTag::Kfam, FamilyTag::P,
                     FamilyTag::Q, FamilyTag::R, FamilyTag::S, FamilyTag::T})
        sweep(tag, false);
    for (auto tag : {FamilyTag::Kfam, FamilyTag::P, FamilyTag::Q, FamilyTag::R, FamilyTag::S})
        sweep(tag, true);
    return out;
}

} // namespace mub
