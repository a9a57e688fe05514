#pragma once

#include <optional>
#include <string>

#include "toriclogk/polytope.hpp"
#include "toriclogk/rational.hpp"

namespace toriclogk {

/// Diagram of a polygon with the origin, the barycenter P_c, the exit point Q
/// and, when beta is given, Q_beta, plus outward facet normals. Floating point
/// is used only for the drawing coordinates. Throws UnsupportedDimension for
/// dim != 2, and NotReflexive when beta is given for a non-reflexive polygon.
std::string render_svg(const LatticePolytope& p, const std::optional<Rational>& beta = {},
                       const std::string& title = {});

}  // namespace toriclogk
