// Copyright 2026 The ucover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UCOVER_HEXAGON_HPP_
#define UCOVER_HEXAGON_HPP_

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "ucover/chain.hpp"
#include "ucover/geometry.hpp"

namespace ucover {

// Regular hexagon of unit width centred at the origin, corners labelled
// clockwise from the top: A at 90 degrees, B at 30, C at -30, D at -90,
// E at -150 and F at 150.
namespace hexagon {

inline const double kCircumradius = 1.0 / std::sqrt(3.0);
inline constexpr double kApothem = 0.5;
inline const double kEdgeLength = 1.0 / std::sqrt(3.0);

inline int corner_index(char corner) {
  static constexpr std::string_view kLabels = "ABCDEF";
  const auto i = kLabels.find(corner);
  if (i == std::string_view::npos) throw RangeError(std::string("unknown hexagon corner ") + corner);
  return static_cast<int>(i);
}

inline double corner_angle(char corner) { return deg_to_rad(90.0 - 60.0 * corner_index(corner)); }

inline Point2 corner(char corner) {
  return kCircumradius * unit_from_angle(corner_angle(corner));
}

// Clockwise successor (A -> B -> ... -> F -> A) and predecessor.
inline char next_cw(char c) { return "ABCDEF"[(corner_index(c) + 1) % 6]; }
inline char prev_cw(char c) { return "ABCDEF"[(corner_index(c) + 5) % 6]; }

// Outward unit normal of the edge joining two adjacent corners.
inline Vec2 edge_normal(char a, char b) { return normalized(midpoint(corner(a), corner(b))); }

inline BoundaryChain chain() {
  const std::array<Point2, 6> pts{corner('A'), corner('F'), corner('E'),
                                  corner('D'), corner('C'), corner('B')};
  return polygon_chain(pts);
}

// Half-plane boundary {x : dot(normal, x) = 1/2}: a side line of a copy of
// the hexagon rotated about the centre.
struct SideLine {
  Vec2 normal;
  double level = kApothem;

  double offset(Point2 p) const { return dot(normal, p) - level; }
  std::pair<Point2, Point2> two_points() const {
    const Point2 base = level * normal;
    return {base - perp(normal), base + perp(normal)};
  }
};

inline SideLine side_line(double normal_angle) { return {unit_from_angle(normal_angle), kApothem}; }

// Where the side line crosses the edge from corner a to corner b; throws if
// the crossing is not on the edge.
inline Point2 cut_point(const SideLine& line, char a, char b, double slack = 1e-12) {
  const Point2 pa = corner(a);
  const Point2 pb = corner(b);
  const auto p = line_at_level(pa, pb, line.normal, line.level);
  if (!p) throw GeometryError(std::string("side line parallel to edge ") + a + b);
  const double t = dot(*p - pa, pb - pa) / dot(pb - pa, pb - pa);
  if (t < -slack || t > 1 + slack) {
    throw GeometryError(std::string("side line misses edge ") + a + b);
  }
  return *p;
}

// Triangle cut from a corner by the side of the hexagon rotated by
// +(30 deg + sigma) (unprimed) or -(30 deg + sigma) (primed) that faces it.
inline BoundaryChain corner_region(char c, double sigma, bool primed) {
  const double a = corner_angle(c) + (primed ? -sigma : sigma);
  const SideLine line = side_line(a);
  const char before = prev_cw(c);
  const char after = next_cw(c);
  const Point2 p_after = cut_point(line, c, after);
  const Point2 p_before = cut_point(line, before, c);
  // Counterclockwise: the hexagon chain runs corner -> prev_cw(corner).
  const std::array<Point2, 3> tri{corner(c), p_before, p_after};
  BoundaryChain out = polygon_chain(tri);
  if (out.size() < 3) return {};
  if (signed_area(out) < 0) out = reversed(out);
  return out;
}

}  // namespace hexagon
}  // namespace ucover

#endif  // UCOVER_HEXAGON_HPP_
