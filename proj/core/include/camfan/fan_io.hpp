#ifndef CAMFAN_FAN_IO_HPP
#define CAMFAN_FAN_IO_HPP

#include <string>

#include "camfan/fan.hpp"

namespace camfan {

/// Exact fan export:
/// { "field": "rational"|"sqrt5", "basis": "simple_roots",
///   "rays": [{"coords": [..], "label": .., "provenance": {"w": .., "J": [..]}}],
///   "cones": [[ray indices]], "adjacency": [[i,j]] }
std::string fan_to_json(const CoxeterGroup& g, const Fan& fan);
Fan fan_from_json(const CoxeterGroup& g, const std::string& text);

/// Rank-3 fans only: stereographic projection of the fan's intersection with
/// the unit sphere, one path per wall, 1024x1024 viewport.
std::string fan_to_svg(const CoxeterGroup& g, const Fan& fan);

}  // namespace camfan

#endif
