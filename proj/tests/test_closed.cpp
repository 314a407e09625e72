#include <doctest.h>

#include "mub/errors.hpp"
#include "mub/families.hpp"
#include "mub/recognizer.hpp"

#include <optional>
#include <random>
#include <set>

using namespace mub;

namespace {

Bigraph cycle(int n) {
    Bigraph b;
    for (int i = 0; i < n; ++i)
        b.add_vertex("c" + std::to_string(i), i % 2 ? Side::Y : Side::X);
    for (int i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return b;
}

void check_closed(const Bigraph& g, const Representation& r) {
    CHECK(validate(g, r).valid);
    std::set<Rational> ends;
    for (auto& [l, i] : r) {
        CHECK(i.cls() == IntervalClass::CC);
        ends.insert(i.l());
        ends.insert(i.r());
    }
    CHECK(ends.size() == 2 * r.size());
}

// Every order of the 2n endpoints, each vertex opening before it closes.
std::optional<std::size_t> brute_min_bad_pairs(const Bigraph& g) {
    std::size_t n = g.size();
    std::vector<int> open_at(n, -1), close_at(n, -1);
    std::optional<std::size_t> best;
    auto go = [&](auto& self, int pos) -> void {
        if (pos == static_cast<int>(2 * n)) {
            Representation r;
            for (std::size_t v = 0; v < n; ++v)
                r.emplace(g.label(v), Interval::closed(open_at[v], close_at[v]));
            if (validate(g, r).valid) {
                std::size_t b = list_bad_pairs(r).size();
                if (!best || b < *best)
                    best = b;
            }
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (open_at[v] < 0) {
                open_at[v] = pos;
                self(self, pos + 1);
                open_at[v] = -1;
            } else if (close_at[v] < 0) {
                close_at[v] = pos;
                self(self, pos + 1);
                close_at[v] = -1;
            }
        }
    };
    go(go, 0);
    return best;
}

} // namespace

TEST_CASE("interval bigraph search") {
    auto star = parse_bigraph_text("X c\nY a b d\nE c a\nE c b\nE c d\n");
    auto r = recognize_interval_closed(star);
    REQUIRE(r);
    check_closed(star, *r);
    // Interval bigraphs are chordal bipartite, so no induced cycle longer than 4.
    CHECK_FALSE(recognize_interval_closed(cycle(6)));
    CHECK_FALSE(recognize_interval_closed(cycle(8)));
    auto c4 = recognize_interval_closed(cycle(4));
    REQUIRE(c4);
    check_closed(cycle(4), *c4);
}

TEST_CASE("closed search handles the fixed graphs") {
    for (auto tag : {FamilyTag::H1, FamilyTag::H2, FamilyTag::H3, FamilyTag::F1, FamilyTag::F6}) {
        auto g = generate({tag});
        auto r = recognize_interval_closed(g);
        REQUIRE_MESSAGE(r, tag_name(tag));
        check_closed(g, *r);
    }
}

TEST_CASE("closed search size limit") {
    auto big = cycle(18);
    CHECK_THROWS_AS(recognize_interval_closed(big), SizeLimitExceeded);
    CHECK_THROWS_AS(min_bad_pair_representation(cycle(14)), SizeLimitExceeded);
}

TEST_CASE("minimum bad pairs") {
    auto spp = parse_bigraph_text("X x x'\nY y_1 y_2 y_3\nE x y_1\nE x y_2\nE x y_3\nE x' y_2\n");
    auto r = min_bad_pair_representation(spp);
    REQUIRE(r);
    check_closed(spp, *r);
    // y_1 and y_3 are copies, so unit intervals suffice and nothing nests.
    auto flat = parse_representation_text("x C 0 1 C\nx' C 6/5 11/5 C\ny_1 C -1 1/50 C\ny_2 C 1/2 3/2 C\n"
                                          "y_3 C -49/50 1/25 C\n");
    REQUIRE(validate(spp, flat).valid);
    REQUIRE(list_bad_pairs(flat).empty());
    CHECK(list_bad_pairs(*r).empty());

    auto edgeless = parse_bigraph_text("X a\nY b\n");
    auto e = min_bad_pair_representation(edgeless);
    REQUIRE(e);
    CHECK(list_bad_pairs(*e).empty());

    for (auto tag : {FamilyTag::H1, FamilyTag::H2, FamilyTag::H3}) {
        auto g = generate({tag});
        auto m = min_bad_pair_representation(g);
        REQUIRE(m);
        check_closed(g, *m);
    }
    CHECK_FALSE(min_bad_pair_representation(cycle(6)));
}

TEST_CASE("unit interval bigraphs need no bad pairs") {
    // Paths and K_{2,2} have closed unit representations.
    for (auto g : {cycle(4), parse_bigraph_text("X a c e\nY b d\nE a b\nE b c\nE c d\nE d e\n")}) {
        auto m = min_bad_pair_representation(g);
        REQUIRE(m);
        CHECK(list_bad_pairs(*m).empty());
    }
}

TEST_CASE("minimum bad pairs agree with brute force") {
    std::mt19937 rng(9);
    int representable = 0;
    for (int round = 0; round < 40; ++round) {
        Bigraph g;
        int nx = 1 + rng() % 3;
        int ny = 1 + rng() % (5 - nx);
        for (int i = 0; i < nx; ++i)
            g.add_vertex("x" + std::to_string(i), Side::X);
        for (int i = 0; i < ny; ++i)
            g.add_vertex("y" + std::to_string(i), Side::Y);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                if (rng() % 3)
                    g.add_edge(i, nx + j);
        auto expected = brute_min_bad_pairs(g);
        auto got = min_bad_pair_representation(g);
        CHECK(got.has_value() == expected.has_value());
        CHECK(recognize_interval_closed(g).has_value() == expected.has_value());
        if (got && expected) {
            ++representable;
            check_closed(g, *got);
            CHECK(list_bad_pairs(*got).size() == *expected);
        }
    }
    CHECK(representable > 0);
}
