#pragma once

#include <string>

#include "forest/bounds.hpp"

namespace forest {

// "(b, a)" with both fractions reduced.
std::string vertex_label(const PolygonVertex& v);
// The same point over a common denominator, e.g. "(7/44, 38/44)"; empty when
// one coordinate is an integer.
std::string common_denominator_label(const PolygonVertex& v);

// Feasible region in the (b, a) plane with every constraint line drawn and
// labelled once.
std::string polygon_svg(GraphClass cls);

}  // namespace forest
