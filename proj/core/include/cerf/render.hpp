#pragma once

#include <string>

#include "cerf/family_two.hpp"

namespace cerf {

/// Critical-value strands over the parameter interval or circle.
std::string render_svg(const CerfGraphic1& gr);
/// Polygons side by side; hexagons get the permutahedron labels.
std::string render_svg(const PolygonDecomposition& d);

} // namespace cerf
