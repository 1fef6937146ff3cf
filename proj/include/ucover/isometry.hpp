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

#ifndef UCOVER_ISOMETRY_HPP_
#define UCOVER_ISOMETRY_HPP_

#include <vector>

#include "ucover/chain.hpp"
#include "ucover/geometry.hpp"

namespace ucover {

// x -> R(rotation) * F(x) + translation, where F reflects across the x-axis
// when `reflect` is set.
struct Isometry {
  double rotation = 0.0;
  Vec2 translation{};
  bool reflect = false;

  Point2 operator()(Point2 p) const {
    if (reflect) p.y = -p.y;
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    return {c * p.x - s * p.y + translation.x, s * p.x + c * p.y + translation.y};
  }
  // Linear part only.
  Vec2 apply_linear(Vec2 v) const { return Isometry{rotation, {}, reflect}(v); }
  // Maps a direction angle through the linear part.
  double apply_angle(double a) const { return (reflect ? -a : a) + rotation; }

  static Isometry identity() { return {}; }
  static Isometry rotation_about(Point2 c, double angle) {
    const Isometry r{angle, {}, false};
    return {angle, c - r(c), false};
  }
  // Reflection across the line through p with direction angle a.
  static Isometry reflection_across(Point2 p, double a) {
    const Isometry f{2 * a, {}, true};
    return {2 * a, p - f(p), true};
  }
};

// a after b.
inline Isometry compose(const Isometry& a, const Isometry& b) {
  return {a.rotation + (a.reflect ? -b.rotation : b.rotation), a(b.translation),
          a.reflect != b.reflect};
}

inline Isometry inverse(const Isometry& a) {
  // x = F R(-rho) (y - t); F R(-rho) = R(rho) F when reflecting.
  const Isometry lin{a.reflect ? a.rotation : -a.rotation, {}, a.reflect};
  return {lin.rotation, -lin(a.translation), a.reflect};
}

inline Point2 apply_isometry(const Isometry& iso, Point2 p) { return iso(p); }

inline Element apply_isometry(const Isometry& iso, const Element& e) {
  if (const auto* s = std::get_if<LineSeg>(&e)) return LineSeg{iso(s->a), iso(s->b)};
  const auto& arc = std::get<CircArc>(e);
  Orientation o = arc.orientation;
  if (iso.reflect) o = o == Orientation::ccw ? Orientation::cw : Orientation::ccw;
  return CircArc{iso(arc.center), arc.radius, iso.apply_angle(arc.start_angle),
                 iso.apply_angle(arc.end_angle), o};
}

// Reflections reverse the traversal so the image stays counterclockwise.
inline BoundaryChain apply_isometry(const Isometry& iso, const BoundaryChain& c) {
  std::vector<Element> out;
  out.reserve(c.size());
  for (const auto& e : c.elements()) out.push_back(apply_isometry(iso, e));
  BoundaryChain image(std::move(out));
  return iso.reflect ? reversed(image) : image;
}

}  // namespace ucover

#endif  // UCOVER_ISOMETRY_HPP_
