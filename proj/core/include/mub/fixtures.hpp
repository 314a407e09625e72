#pragma once

#include "mub/bigraph.hpp"
#include "mub/families.hpp"
#include "mub/representation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mub {

enum class FixtureTag { H1, H2_a, H2_b, H3_a, H3_b, F6, F1, Kp, Pp, Tp, Qp, Sp, Rp };

struct FixtureId {
    FixtureTag tag = FixtureTag::H1;
    int i = 0;
    int j = 0;
    // Selects the second choice where a table offers two intervals for some
    // vertices (half-open v', v'' for K', P', Q'; (-2,-1] for S' and R').
    bool alternate = false;
};

struct Fixture {
    Bigraph graph;
    Representation rep;
};

Fixture fixture(const FixtureId& id);

int parameter_count(FixtureTag tag);
bool has_alternate(FixtureTag tag);
std::string_view tag_name(FixtureTag tag);
std::optional<FixtureTag> fixture_tag_from_name(std::string_view name);
std::string to_string(const FixtureId& id);
// The generator member whose vertex set the fixture covers.
FamilyId family_of(const FixtureId& id);

std::vector<FixtureTag> all_fixture_tags();

} // namespace mub
