#pragma once

#include "ainf/homindex.hpp"
#include "ainf/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ainf {

struct RenderSpec {
  std::vector<Arc> query;                // dashed
  std::optional<ZigZagPath> path;        // polyline
  std::optional<Triangle> filled;        // shaded triangle
  i64 lo = -6, hi = 6;                   // vertex window per block
};

// angle in radians, counterclockwise from the positive x axis
double point_angle(const ZModel& z, const Point& p);
std::string render_svg(const Triangulation& t, const RenderSpec& spec);

}  // namespace ainf
