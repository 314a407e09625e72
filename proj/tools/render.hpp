#pragma once

#include "mub/representation.hpp"

#include <string>

namespace mubcli {

// One row per interval, sorted by l then r. `scale` columns per unit length.
std::string render_ascii(const mub::Representation& rep, int scale = 5);
std::string render_svg(const mub::Representation& rep);

} // namespace mubcli
