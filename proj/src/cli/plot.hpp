#pragma once

#include <string>

#include "curve/graph.hpp"

namespace tropflux {

// SVG of the Abel-Jacobi image projected to the plane. Symbolic lengths are
// drawn with every variable set to 1.
std::string plot_svg(const MetricGraph& g);

}  // namespace tropflux
