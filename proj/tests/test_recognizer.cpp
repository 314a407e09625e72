#include <doctest.h>

#include "mub/families.hpp"
#include "mub/recognizer.hpp"

#include <random>

using namespace mub;

namespace {

void check_witness(const Bigraph& g, const RecognitionOutcome& out) {
    REQUIRE(out.witness);
    CHECK(validate(g, *out.witness).valid);
    CHECK(is_mixed_unit(*out.witness));
}

Bigraph path(int n) {
    Bigraph b;
    for (int i = 0; i < n; ++i)
        b.add_vertex("p" + std::to_string(i), i % 2 ? Side::Y : Side::X);
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return b;
}

} // namespace

TEST_CASE("small certificates") {
    auto h1 = generate({FamilyTag::H1});
    auto out = recognize_mixed_unit(h1);
    CHECK(out.status == Status::SAT);
    check_witness(h1, out);

    CHECK(recognize_mixed_unit(generate({FamilyTag::B1})).status == Status::UNSAT);
    CHECK(recognize_mixed_unit(generate({FamilyTag::K})).status == Status::UNSAT);

    auto p4 = path(4);
    auto p = recognize_mixed_unit(p4);
    CHECK(p.status == Status::SAT);
    check_witness(p4, p);
    CHECK_FALSE(recognize_mixed_unit(generate({FamilyTag::B1})).witness);
}

TEST_CASE("disconnected input is solved per component") {
    auto g = parse_bigraph_text("X a c e\nY b d f\nE a b\nE c d\nE e f\nE e d\n");
    auto out = recognize_mixed_unit(g);
    CHECK(out.status == Status::SAT);
    check_witness(g, out);
    CHECK(recognize_mixed_unit(Bigraph{}).status == Status::SAT);
}

TEST_CASE("budget exhaustion is reported") {
    auto out = recognize_mixed_unit(generate({FamilyTag::F2}), Budget{1, 0});
    CHECK(out.status == Status::BudgetExceeded);
    CHECK_FALSE(out.witness);
    CHECK(out.stats.nodes >= 1);
    CHECK(to_string(Status::BudgetExceeded) == "BUDGET");
}

TEST_CASE("results are reproducible and side-symmetric") {
    for (auto tag : {FamilyTag::H1, FamilyTag::H2, FamilyTag::H3, FamilyTag::F1, FamilyTag::F2, FamilyTag::F6,
                     FamilyTag::B1, FamilyTag::B2}) {
        auto g = generate({tag});
        auto a = recognize_mixed_unit(g, {}, true);
        auto b = recognize_mixed_unit(g, {}, true);
        auto c = recognize_mixed_unit(g, {}, false);
        CHECK(a.status == b.status);
        CHECK(a.witness == b.witness);
        CHECK(a.status == c.status);
        CHECK(recognize_mixed_unit(g.swapped()).status == a.status);
    }
}

TEST_CASE("induced subgraphs of SAT graphs are SAT") {
    std::mt19937 rng(3);
    for (auto tag : {FamilyTag::H2, FamilyTag::H3, FamilyTag::F6, FamilyTag::F13}) {
        auto g = generate({tag});
        REQUIRE(recognize_mixed_unit(g).status == Status::SAT);
        for (int k = 0; k < 20; ++k) {
            std::vector<Bigraph::Vertex> keep;
            for (Bigraph::Vertex v = 0; v < g.size(); ++v)
                if (rng() % 3)
                    keep.push_back(v);
            auto h = g.induced(keep);
            auto out = recognize_mixed_unit(h);
            CHECK(out.status == Status::SAT);
            if (out.witness)
                CHECK(validate(h, *out.witness).valid);
        }
    }
}

TEST_CASE("long paths and even cycles") {
    auto p = path(14);
    auto out = recognize_mixed_unit(p);
    CHECK(out.status == Status::SAT);
    check_witness(p, out);
    // C4 is K_{2,2}: four unit intervals around one point.
    auto c4 = parse_bigraph_text("X a b\nY c d\nE a c\nE a d\nE b c\nE b d\n");
    CHECK(recognize_mixed_unit(c4).status == Status::SAT);
    auto c6 = parse_bigraph_text("X a b c\nY d e f\nE a d\nE d b\nE b e\nE e c\nE c f\nE f a\n");
    CHECK(recognize_mixed_unit(c6).status == Status::UNSAT);
}
