#pragma once

#include <string>

#include "doublet/geometry.hpp"

namespace doublet {

/// Cross-section schematic: the three cap arcs through the junction points
/// (0, +-h) with apexes at x_k on the axis, plus junction markers.  A flat
/// interface renders as a chord.  The viewBox covers the geometry with 10%
/// padding.
std::string render_svg(const DoubletState& st);

/// Degenerate configuration: the surviving caps close into full circles
/// (center x_k / 2, radius |x_k| / 2); nested for internalization, tangent
/// for separation.
std::string render_svg(const BoundaryState& bs);

}  // namespace doublet
