#pragma once

#include <string>

#include "ncp/coxeter.hpp"

namespace ncp {

// SVG picture of a rank-2 Coxeter complex (A~2, G~2, C~2): hyperplane lines,
// dashed Coxeter axis, shaded axial chambers, axial vertices colored by
// w-orbit. For higher rank, `section` selects a rank-2 horizontal component
// and the picture shows its arrangement in the plane through the axis.
std::string render_rank2_svg(const CoxeterSystem& sys, WindowSpec window,
                             std::optional<int> section = std::nullopt);

}  // namespace ncp
