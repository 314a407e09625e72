#include "mub/fixtures.hpp"

#include "mub/errors.hpp"

#include <array>
#include <map>

namespace mub {

namespace {

using Q = Rational;

const Q half(1, 2);

struct Table {
    std::map<std::string, Interval> iv;

    void set(const std::string& v, char lf, Q l, Q r, char rf) { iv.insert_or_assign(v, Interval(l, r, lf == '[', rf == ']')); }
    // "at p" means [p, p+1]
    void at(const std::string& v, Q p) { set(v, '[', p, p + 1, ']'); }
};

std::string s(const char* base, int n, const char* primes = "") { return base + ("_" + std::to_string(n)) + primes; }

Table h1_table() {
    Table t;
    t.at("y_2", 6);
    t.at("y_1", 5);
    t.at("y_3", 7);
    t.at("x_1", 4);
    t.at("x_4", 6);
    t.at("x_3", 8);
    t.set("x_2", '(', 6, 7, ')');
    return t;
}

Table h2_table(bool second) {
    Table t;
    if (!second) {
        t.at("y_2", 4);
        t.at("y_1", 6);
        t.at("y_4", 5);
        t.at("y_3", 7);
        t.at("x_2", 5);
        t.at("x_3", 6);
        t.set("x_1", '(', 6, 7, ')');
    } else {
        t.at("x_2", 11);
        t.at("x_1", 13);
        t.at("x_3", Q(23, 2));
        t.at("y_2", 10);
        t.at("y_1", 12);
        t.at("y_4", Q(21, 2));
        t.set("y_3", '(', 12, 13, ')');
    }
    return t;
}

Table h3_table(bool second) {
    Table t;
    if (!second) {
        t.at("y_1", 5);
        t.at("y_2", 4);
        t.at("y_3", 6);
        t.at("x_2", 4);
        t.at("x_3", 6);
        t.at("x_4", 5);
        t.set("x_1", '(', 5, 6, ')');
    } else {
        t.at("x_4", 10);
        t.at("x_2", 9);
        t.at("x_3", Q(21, 2));
        t.at("x_1", 11);
        t.at("y_2", 9);
        t.at("y_1", 10);
        t.set("y_3", '(', 10, 11, ')');
    }
    return t;
}

Table f6_table() {
    Table t;
    t.at("y_5", 5);
    t.at("y_3", 7);
    t.at("y_1", 6);
    t.at("y_4", 8);
    t.at("x_2", 5);
    t.at("x_3", 7);
    t.at("x_5", 4);
    t.at("x_4", 6);
    t.set("x_1", '(', 6, 7, ')');
    t.set("y_2", '(', 5, 6, ']');
    return t;
}

Table f1_table() {
    Table t;
    t.at("x_1", 6);
    t.at("y_0", 6);
    t.at("y_1", 5);
    t.at("y_2", 7);
    t.at("x_3", 8);
    t.at("x_2", 4);
    t.set("y_3", '(', 5, 6, ']');
    t.set("x_0", '(', 6, 7, ')');
    return t;
}

Table kp(int i, int j, bool alt) {
    Table t;
    t.set("x_0", '(', 0, 1, ')');
    t.set("y_0", '[', -half, half, ']');
    t.set("y", '[', -1, 0, ']');
    for (int n = 1; n <= i + j + 2; ++n) {
        t.set(s("x", n), '[', 2 * (n - 1), 2 * (n - 1) + 1, ']');
        t.set(s("y", n), '[', 2 * n - 1, 2 * n, ']');
        t.set(s("x", n, "'"), '[', 2 * n, 2 * n + 1, ')');
        t.set(s("y", n, "'"), '[', 2 * n - 1, 2 * n, ')');
        t.set(s("x", n, "''"), '[', -(2 * n - 1) - half, -2 * (n - 1) - half, ']');
        t.set(s("x", n, "'''"), '(', -2 * n - half, -(2 * n - 1) - half, ']');
        t.set(s("y", n, "''"), '[', -2 * n - half, -(2 * n - 1) - half, ']');
        t.set(s("y", n, "'''"), '(', -(2 * n - 1) - half, -2 * (n - 1) - half, ']');
    }
    t.set("x_1", '[', 0, 1, ']');
    t.set("y_1'", '[', 1, 2, ')');
    t.set("u", '[', j, j + 1, ']');
    t.set("v'", '[', j + 1, j + 2, alt ? ')' : ']');
    t.set("v''", '[', j + 1, j + 2, alt ? ')' : ']');
    t.set("z", '[', -i - 3 * half, -i - half, ']');
    t.set("w", '[', -i - 5 * half, -i - 3 * half, ']');
    t.set("w'", '(', -i - 3 * half, -i - half, ')');
    t.set("z'", '[', -i - 7 * half, -i - 5 * half, ']');
    t.set("z''", '(', -i - 3 * half, -i - half, ')');
    return t;
}

Table pp(int i, bool alt) {
    Table t;
    for (int n = 1; n <= i + 2; ++n) {
        t.set(s("x", n), '[', 2 * (n - 1), 2 * n - 1, ']');
        t.set(s("y", n), '[', 2 * n - 1, 2 * n, ']');
        t.set(s("x", n, "'"), '[', 2 * n, 2 * n + 1, ')');
        t.set(s("y", n, "'"), '[', 2 * n - 1, 2 * n, ')');
    }
    t.set("x_1''", '(', 0, 1, ')');
    t.set("y_1''", '[', -half, half, ']');
    t.set("y_2''", '[', -1, 0, ']');
    t.set("x_3''", '[', -1, 0, ']');
    t.set("y_4''", '[', -2, -1, ']');
    t.set("x_2''", '[', -half, half, ']');
    t.set("y_3''", '[', -3 * half, -half, ']');
    t.set("u", '[', i - 1, i, ']');
    t.set("v'", '[', i, i + 1, alt ? ')' : ']');
    t.set("v''", '[', i, i + 1, alt ? ')' : ']');
    return t;
}

Table tp(int i, int j) {
    Table t;
    t.set("x", '[', 0, 1, ']');
    t.set("x_0", '(', 0, 1, ')');
    t.set("y_0", '(', 0, 1, ')');
    t.set("y", '(', -1, 0, ']');
    for (int n = 1; n <= i + j + 2; ++n) {
        t.set(s("y", n), '[', 2 * n - 1, 2 * n, ']');
        t.set(s("x", n), '[', 2 * n, 2 * n + 1, ']');
        t.set(s("x", n, "'"), '[', 2 * n - 1, 2 * n, ')');
        t.set(s("y", n, "'"), '[', 2 * n, 2 * n + 1, ')');
        t.set(s("y", n, "''"), '[', -2 * n + 1, -2 * n + 2, ']');
        t.set(s("x", n, "''"), '[', -2 * n, -2 * n + 1, ']');
        t.set(s("x", n, "'''"), '(', -2 * n, -2 * n + 1, ']');
        t.set(s("y", n, "'''"), '(', -2 * n - 1, -2 * n, ']');
    }
    t.set("u", '[', j, j + 1, ']');
    t.set("v_0", '[', j + 1, j + 2, ']');
    t.set("v_0'", '[', j + 1, j + 2, ')');
    t.set("u_0", '[', j + 2, j + 3, ']');
    t.set("u_0'", '(', j + 1, j + 2, ')');
    t.set("v'", '(', j, j + 1, ']');
    t.set("z", '[', -i, -i + 1, ']');
    t.set("w_0", '[', -i - 1, -i, ']');
    t.set("w_0'", '(', -i - 1, -i, ']');
    t.set("z_0'", '(', -i - 1, -i, ')');
    t.set("z_0", '[', -i - 2, -i - 1, ']');
    return t;
}

Table qp(int i, bool alt) {
    Table t;
    for (int n = 1; n <= i + 2; ++n) {
        t.set(s("x", n), '[', 2 * n - 1, 2 * n, ']');
        t.set(s("y", n), '[', 2 * n, 2 * n + 1, ']');
        t.set(s("y", n, "'"), '[', 2 * n, 2 * n + 1, ')');
        if (n >= 2)
            t.set(s("x", n, "'"), '[', 2 * n - 1, 2 * n, ')');
    }
    t.set("x_1''", '(', -1, 0, ')');
    t.set("y_1''", '[', -1, 0, ']');
    t.set("x_3''", '[', -1, 0, ']');
    t.set("y_3''", '[', -2, -1, ']');
    t.set("x_2''", '[', 0, 1, ']');
    t.set("y_5''", '[', 0, 1, ']');
    t.set("x_5''", '[', 0, 1, ')');
    t.set("y_4''", '[', 0, 1, ')');
    t.set("y_2''", '[', 1, 2, ']');
    t.set("x_4''", '[', 1, 2, ')');
    t.set("u", '[', i, i + 1, ']');
    t.set("v'", '[', i + 1, i + 2, alt ? ')' : ']');
    t.set("v''", '[', i + 1, i + 2, alt ? ')' : ']');
    return t;
}

// S' and R' share the chain to the right of x.
void sr_chain(Table& t, int i) {
    for (int n = 1; n <= i + 2; ++n) {
        t.set(s("x", n), '[', 2 * n, 2 * n + 1, ']');
        t.set(s("y", n), '[', 2 * n - 1, 2 * n, ']');
        t.set(s("y", n, "'"), '[', 2 * n - 1, 2 * n, ')');
        t.set(s("x", n, "'"), '[', 2 * n, 2 * n + 1, ')');
    }
    t.set("u", '[', i, i + 1, ']');
    t.set("v'", '[', i + 1, i + 2, ']');
    t.set("v''", '[', i + 1, i + 2, ')');
}

Table sp(int i, bool alt) {
    Table t;
    sr_chain(t, i);
    t.set("x", '[', 0, 1, ']');
    t.set("y'", '(', 0, 1, ')');
    t.set("x'", '(', 0, 1, ')');
    t.set("y_0", '[', -1, 0, ']');
    t.set("x_0", alt ? '(' : '[', -2, -1, ']');
    t.set("x_1''", '(', 1, 2, ')');
    return t;
}

Table rp(int i, bool alt) {
    Table t;
    sr_chain(t, i);
    t.set("x", '[', 0, 1, ']');
    t.set("y'", '(', 0, 1, ')');
    t.set("x'", '(', 0, 1, ')');
    t.set("y_1''", '[', -1, 0, ']');
    t.set("x_1''", alt ? '(' : '[', -2, -1, ']');
    t.set("y_2''", '(', -1, 0, ']');
    t.set("x''", '(', -1, 0, ')');
    return t;
}

struct TagInfo {
    FixtureTag tag;
    std::string_view name;
    int params;
    bool alternate;
};

constexpr std::array<TagInfo, 13> tags{{
    {FixtureTag::H1, "H1", 0, false},
    {FixtureTag::H2_a, "H2_a", 0, false},
    {FixtureTag::H2_b, "H2_b", 0, false},
    {FixtureTag::H3_a, "H3_a", 0, false},
    {FixtureTag::H3_b, "H3_b", 0, false},
    {FixtureTag::F6, "F6", 0, false},
    {FixtureTag::F1, "F1", 0, false},
    {FixtureTag::Kp, "Kp", 2, true},
    {FixtureTag::Pp, "Pp", 1, true},
    {FixtureTag::Tp, "Tp", 2, false},
    {FixtureTag::Qp, "Qp", 1, true},
    {FixtureTag::Sp, "Sp", 1, true},
    {FixtureTag::Rp, "Rp", 1, true},
}};

const TagInfo& info(FixtureTag tag) {
    for (auto& t : tags)
        if (t.tag == tag)
            return t;
    throw Error("unknown fixture tag");
}

} // namespace

int parameter_count(FixtureTag tag) { return info(tag).params; }
bool has_alternate(FixtureTag tag) { return info(tag).alternate; }
std::string_view tag_name(FixtureTag tag) { return info(tag).name; }

std::optional<FixtureTag> fixture_tag_from_name(std::string_view name) {
    for (auto& t : tags)
        if (t.name == name)
            return t.tag;
    return std::nullopt;
}

std::vector<FixtureTag> all_fixture_tags() {
    std::vector<FixtureTag> out;
    for (auto& t : tags)
        out.push_back(t.tag);
    return out;
}

std::string to_string(const FixtureId& id) {
    std::string out(tag_name(id.tag));
    int n = parameter_count(id.tag);
    if (n == 1)
        out += "(" + std::to_string(id.i) + ")";
    else if (n == 2)
        out += "(" + std::to_string(id.i) + "," + std::to_string(id.j) + ")";
    if (id.alternate)
        out += "/alt";
    return out;
}

FamilyId family_of(const FixtureId& id) {
    switch (id.tag) {
    case FixtureTag::H1: return {FamilyTag::H1};
    case FixtureTag::H2_a:
    case FixtureTag::H2_b: return {FamilyTag::H2};
    case FixtureTag::H3_a:
    case FixtureTag::H3_b: return {FamilyTag::H3};
    case FixtureTag::F6: return {FamilyTag::F6};
    case FixtureTag::F1: return {FamilyTag::F1};
    case FixtureTag::Kp: return {FamilyTag::Kfam, id.i, id.j, true};
    case FixtureTag::Pp: return {FamilyTag::P, id.i, 0, true};
    case FixtureTag::Tp: return {FamilyTag::T, id.i, id.j, true};
    case FixtureTag::Qp: return {FamilyTag::Q, id.i, 0, true};
    case FixtureTag::Sp: return {FamilyTag::S, id.i, 0, true};
    case FixtureTag::Rp: return {FamilyTag::R, id.i, 0, true};
    }
    throw Error("unknown fixture tag");
}

Fixture fixture(const FixtureId& id) {
    int n = parameter_count(id.tag);
    if ((n >= 1 && id.i < 1) || (n >= 2 && id.j < 1) || (n < 2 && id.j != 0) || (n < 1 && id.i != 0))
        throw Error("bad parameters for fixture " + to_string(id));
    if (id.alternate && !has_alternate(id.tag))
        throw Error("fixture " + std::string(tag_name(id.tag)) + " has no alternate choice");
    Table t;
    switch (id.tag) {
    case FixtureTag::H1: t = h1_table(); break;
    case FixtureTag::H2_a: t = h2_table(false); break;
    case FixtureTag::H2_b: t = h2_table(true); break;
    case FixtureTag::H3_a: t = h3_table(false); break;
    case FixtureTag::H3_b: t = h3_table(true); break;
    case FixtureTag::F6: t = f6_table(); break;
    case FixtureTag::F1: t = f1_table(); break;
    case FixtureTag::Kp: t = kp(id.i, id.j, id.alternate); break;
    case FixtureTag::Pp: t = pp(id.i, id.alternate); break;
    case FixtureTag::Tp: t = tp(id.i, id.j); break;
    case FixtureTag::Qp: t = qp(id.i, id.alternate); break;
    case FixtureTag::Sp: t = sp(id.i, id.alternate); break;
    case FixtureTag::Rp: t = rp(id.i, id.alternate); break;
    }
    Fixture f{generate(family_of(id)), {}};
    for (Bigraph::Vertex v = 0; v < f.graph.size(); ++v) {
        auto it = t.iv.find(f.graph.label(v));
        if (it == t.iv.end())
            throw Error("fixture " + to_string(id) + " has no interval for " + f.graph.label(v));
        f.rep.emplace(it->first, it->second);
    }
    return f;
}

} // namespace mub
