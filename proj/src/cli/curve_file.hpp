#pragma once

#include <string>

#include "curve/graph.hpp"

namespace tropflux {

// JSON curve file: variables (optional), vertices, edges[{name,from,to,length}],
// basepoint, basepoint2 (optional). Throws InputError.
MetricGraph parse_curve(const std::string& json_text);
MetricGraph load_curve(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace tropflux
