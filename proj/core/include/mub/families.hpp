#pragma once

#include "mub/bigraph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mub {

enum class FamilyTag {
    H1, H2, H3,
    F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13,
    B0, B1, B2, K, M, H0,
    L, Mfam, N, Hp, Kfam, P, Q, R, S, T,
};

struct FamilyId {
    FamilyTag tag = FamilyTag::H1;
    int i = 0;
    int j = 0;
    bool primed = false;
    bool tilde = false;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Number of integer parameters the tag takes (0, 1 or 2).
int parameter_count(FamilyTag tag);
bool supports_primed(FamilyTag tag);
bool supports_tilde(FamilyTag tag);

std::string_view tag_name(FamilyTag tag);
std::optional<FamilyTag> tag_from_name(std::string_view name);
// "F2", "Kfam(1,2)", "P'(3)", "~S(1)"
std::string to_string(const FamilyId& id);

// Throws UnsupportedConstruction for an invalid modifier or parameter.
Bigraph generate(const FamilyId& id);
// Delete v', v'' from the primed member and attach B0 at u.
Bigraph tilde(const FamilyId& id);

// Fork vertex u and its two special neighbours v', v'' when the member has them.
struct SpecialVertices {
    std::string u;
    std::string v1;
    std::string v2;
};
std::optional<SpecialVertices> special_vertices(const FamilyId& id);

struct CatalogEntry {
    FamilyId id;
    Bigraph graph;
};

// Members of the forbidden list for mixed unit interval bigraphs with at most
// max_vertices vertices: the fixed graphs, the unprimed families and the tilde
// variants that are constructible here.
std::vector<CatalogEntry> forbidden_catalog(std::size_t max_vertices);

} // namespace mub
