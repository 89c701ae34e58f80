#pragma once

#include <ostream>

#include "pierce/geometry.hpp"

namespace pierce::io {

// Debug rendering: one <path> per region, holes as even-odd subpaths.
void write_family_svg(const geom::RegionFamily& family, std::ostream& out);

} // namespace pierce::io
