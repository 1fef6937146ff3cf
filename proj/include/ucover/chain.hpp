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

#ifndef UCOVER_CHAIN_HPP_
#define UCOVER_CHAIN_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "ucover/geometry.hpp"

namespace ucover {

struct LineSeg {
  Point2 a;
  Point2 b;

  Point2 start() const { return a; }
  Point2 end() const { return b; }
  double length() const { return dist(a, b); }
  Point2 at(double f) const { return lerp(a, b, f); }
  Vec2 start_tangent() const { return normalized(b - a); }
  Vec2 end_tangent() const { return normalized(b - a); }
  LineSeg reversed() const { return {b, a}; }
};

enum class Orientation { ccw, cw };

// Circular arc stored as center, radius and angles; endpoints are derived.
struct CircArc {
  Point2 center;
  double radius = 1.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  Orientation orientation = Orientation::ccw;

  // Signed sweep: in (0, 2pi] for ccw, [-2pi, 0) for cw.
  double sweep() const {
    double d = wrap_positive(end_angle - start_angle);
    if (orientation == Orientation::ccw) return d == 0.0 ? kTwoPi : d;
    d = d - kTwoPi;
    return d == -kTwoPi ? -kTwoPi : d;
  }
  Point2 point_at_angle(double a) const { return center + radius * unit_from_angle(a); }
  Point2 start() const { return point_at_angle(start_angle); }
  Point2 end() const { return point_at_angle(end_angle); }
  Point2 at(double f) const { return point_at_angle(start_angle + f * sweep()); }
  double length() const { return radius * std::abs(sweep()); }
  Vec2 tangent_at_angle(double a) const {
    const Vec2 t = perp(unit_from_angle(a));
    return orientation == Orientation::ccw ? t : -t;
  }
  Vec2 start_tangent() const { return tangent_at_angle(start_angle); }
  Vec2 end_tangent() const { return tangent_at_angle(end_angle); }
  CircArc reversed() const {
    return {center, radius, end_angle, start_angle,
            orientation == Orientation::ccw ? Orientation::cw : Orientation::ccw};
  }
  // True when the direction angle a lies within the swept range.
  bool spans_angle(double a, double slack = 0.0) const {
    const double s = sweep();
    double off = s > 0 ? wrap_positive(a - start_angle) : wrap_positive(start_angle - a);
    if (off <= std::abs(s) + slack) return true;
    return off >= kTwoPi - slack;
  }

  static CircArc between(Point2 center, double radius, Point2 from, Point2 to, Orientation o) {
    if (!(radius > kEps)) throw GeometryError("arc radius must exceed eps");
    if (std::abs(dist(center, from) - radius) > 1e-8 || std::abs(dist(center, to) - radius) > 1e-8) {
      throw GeometryError("arc endpoint is not on its circle");
    }
    return {center, radius, angle_of(from - center), angle_of(to - center), o};
  }
  // The arc from `from` to `to` that sweeps less than pi.
  static CircArc minor(Point2 center, double radius, Point2 from, Point2 to) {
    const double a0 = angle_of(from - center);
    const double a1 = angle_of(to - center);
    const Orientation o = wrap_angle(a1 - a0) >= 0 ? Orientation::ccw : Orientation::cw;
    return between(center, radius, from, to, o);
  }
};

using Element = std::variant<LineSeg, CircArc>;

inline Point2 start_of(const Element& e) {
  return std::visit([](const auto& x) { return x.start(); }, e);
}
inline Point2 end_of(const Element& e) {
  return std::visit([](const auto& x) { return x.end(); }, e);
}
inline Vec2 start_tangent_of(const Element& e) {
  return std::visit([](const auto& x) { return x.start_tangent(); }, e);
}
inline Vec2 end_tangent_of(const Element& e) {
  return std::visit([](const auto& x) { return x.end_tangent(); }, e);
}
inline Point2 point_on(const Element& e, double f) {
  return std::visit([f](const auto& x) { return x.at(f); }, e);
}
inline double length_of(const Element& e) {
  return std::visit([](const auto& x) { return x.length(); }, e);
}
inline Element reversed_element(const Element& e) {
  return std::visit([](const auto& x) -> Element { return x.reversed(); }, e);
}

inline double distance_to_element(Point2 p, const Element& e) {
  if (const auto* s = std::get_if<LineSeg>(&e)) return distance_to_segment(p, s->a, s->b);
  const auto& arc = std::get<CircArc>(e);
  const Vec2 r = p - arc.center;
  if (norm(r) > 0 && arc.spans_angle(angle_of(r))) return std::abs(norm(r) - arc.radius);
  return std::min(dist(p, arc.start()), dist(p, arc.end()));
}

struct BBox {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(Point2 p) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }
  bool contains(Point2 p, double pad = 0.0) const {
    return p.x >= xmin - pad && p.x <= xmax + pad && p.y >= ymin - pad && p.y <= ymax + pad;
  }
  bool overlaps(const BBox& o, double pad = 0.0) const {
    return xmin <= o.xmax + pad && o.xmin <= xmax + pad && ymin <= o.ymax + pad &&
           o.ymin <= ymax + pad;
  }
};

inline BBox bbox_of(const Element& e) {
  BBox b;
  b.add(start_of(e));
  b.add(end_of(e));
  if (const auto* arc = std::get_if<CircArc>(&e)) {
    for (int k = 0; k < 4; ++k) {
      const double a = k * kPi / 2;
      if (arc->spans_angle(a)) b.add(arc->point_at_angle(a));
    }
  }
  return b;
}

// Closed, oriented sequence of segments and arcs.
class BoundaryChain {
 public:
  BoundaryChain() = default;
  explicit BoundaryChain(std::vector<Element> elements) : elements_(std::move(elements)) {}

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  void push_back(Element e) { elements_.push_back(std::move(e)); }
  void append(const std::vector<Element>& es) {
    elements_.insert(elements_.end(), es.begin(), es.end());
  }

  // Vertex i is the start of element i.
  std::vector<Point2> vertices() const {
    std::vector<Point2> v;
    v.reserve(elements_.size());
    for (const auto& e : elements_) v.push_back(start_of(e));
    return v;
  }

  BBox bbox() const {
    BBox b;
    for (const auto& e : elements_) {
      const BBox eb = bbox_of(e);
      b.add({eb.xmin, eb.ymin});
      b.add({eb.xmax, eb.ymax});
    }
    return b;
  }

 private:
  std::vector<Element> elements_;
};

inline BoundaryChain reversed(const BoundaryChain& c) {
  std::vector<Element> out;
  out.reserve(c.size());
  for (auto it = c.elements().rbegin(); it != c.elements().rend(); ++it) {
    out.push_back(reversed_element(*it));
  }
  return BoundaryChain(std::move(out));
}

// Builds a chain through the given points, skipping edges shorter than eps.
inline BoundaryChain polygon_chain(std::span<const Point2> pts) {
  BoundaryChain c;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2 a = pts[i];
    const Point2 b = pts[(i + 1) % pts.size()];
    if (dist(a, b) > kEps) c.push_back(LineSeg{a, b});
  }
  return c;
}

inline bool is_closed(const BoundaryChain& c, double tol = kEps) {
  const auto& es = c.elements();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (dist(end_of(es[i]), start_of(es[(i + 1) % es.size()])) > tol) return false;
  }
  return true;
}

// Green's theorem: 1/2 * integral of (x dy - y dx) over each element.
inline double element_area_term(const Element& e) {
  if (const auto* s = std::get_if<LineSeg>(&e)) return 0.5 * cross(s->a, s->b);
  const auto& arc = std::get<CircArc>(e);
  const Point2 p = arc.start();
  const Point2 q = arc.end();
  const double phi = arc.sweep();
  return 0.5 * (arc.radius * arc.radius * phi + arc.center.x * (q.y - p.y) -
                arc.center.y * (q.x - p.x));
}

// Raw signed area (positive for counterclockwise chains); no validation.
inline double signed_area(const BoundaryChain& c) {
  double a = 0.0;
  for (const auto& e : c.elements()) a += element_area_term(e);
  return a;
}

namespace detail {

inline constexpr double kTangencySnap = 1e-7;

inline bool param_inside(double t, double lo, double hi) { return t >= lo && t <= hi; }

// Intersections of two elements computed without tangency snapping.
inline std::vector<Point2> raw_intersections(const Element& e1, const Element& e2) {
  std::vector<Point2> out;
  const auto* s1 = std::get_if<LineSeg>(&e1);
  const auto* s2 = std::get_if<LineSeg>(&e2);
  const auto* a1 = std::get_if<CircArc>(&e1);
  const auto* a2 = std::get_if<CircArc>(&e2);
  if (s1 && s2) {
    const Vec2 d1 = s1->b - s1->a;
    const Vec2 d2 = s2->b - s2->a;
    const double den = cross(d1, d2);
    if (den == 0.0) {
      if (cross(d1, s2->a - s1->a) != 0.0) return out;
      // Collinear: report overlapping endpoints.
      const double l2 = dot(d1, d1);
      for (Point2 q : {s2->a, s2->b}) {
        const double t = dot(q - s1->a, d1) / l2;
        if (param_inside(t, 0, 1)) out.push_back(q);
      }
      for (Point2 q : {s1->a, s1->b}) {
        const double t = dot(q - s2->a, d2) / dot(d2, d2);
        if (param_inside(t, 0, 1)) out.push_back(q);
      }
      return out;
    }
    const double t = cross(s2->a - s1->a, d2) / den;
    const double u = cross(s2->a - s1->a, d1) / den;
    if (param_inside(t, 0, 1) && param_inside(u, 0, 1)) out.push_back(s1->a + t * d1);
    return out;
  }
  if (s1 || s2) {
    const LineSeg& s = s1 ? *s1 : *s2;
    const CircArc& arc = a1 ? *a1 : *a2;
    const Vec2 d = s.b - s.a;
    const Vec2 f = s.a - arc.center;
    const double A = dot(d, d);
    const double B = 2 * dot(f, d);
    const double C = dot(f, f) - arc.radius * arc.radius;
    const double disc = B * B - 4 * A * C;
    if (disc < 0) return out;
    const double sq = std::sqrt(disc);
    std::vector<double> ts{(-B - sq) / (2 * A)};
    // Roots closer than the snap distance are one tangency split by rounding.
    if (sq / (2 * A) * std::sqrt(A) < kTangencySnap) ts[0] = -B / (2 * A);
    else ts.push_back((-B + sq) / (2 * A));
    for (double t : ts) {
      if (!param_inside(t, 0, 1)) continue;
      const Point2 p = s.a + t * d;
      if (arc.spans_angle(angle_of(p - arc.center))) out.push_back(p);
    }
    return out;
  }
  const double d = dist(a1->center, a2->center);
  if (d < 1e-13 && std::abs(a1->radius - a2->radius) < 1e-13) {
    // Same circle: overlapping spans intersect along an arc; report endpoints inside.
    for (const CircArc* p : {a1, a2}) {
      const CircArc* q = p == a1 ? a2 : a1;
      for (double ang : {p->start_angle, p->end_angle}) {
        if (q->spans_angle(ang)) out.push_back(p->point_at_angle(ang));
      }
    }
    // Interior overlap shows up as a midpoint lying in both spans.
    const double mid = a1->start_angle + 0.5 * a1->sweep();
    if (a2->spans_angle(mid)) out.push_back(a1->point_at_angle(mid));
    return out;
  }
  if (d == 0.0 || d > a1->radius + a2->radius || d < std::abs(a1->radius - a2->radius)) return out;
  const double a = (a1->radius * a1->radius - a2->radius * a2->radius + d * d) / (2 * d);
  const double h = std::sqrt(std::max(a1->radius * a1->radius - a * a, 0.0));
  const Vec2 e = (a2->center - a1->center) / d;
  const Point2 m = a1->center + a * e;
  std::vector<Point2> cand{m};
  if (h >= kTangencySnap) cand = {m + h * perp(e), m - h * perp(e)};
  for (Point2 p : cand) {
    if (a1->spans_angle(angle_of(p - a1->center)) && a2->spans_angle(angle_of(p - a2->center))) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace detail

// True when no two elements meet except adjacent ones at their shared vertex.
inline bool is_simple(const BoundaryChain& c) {
  const auto& es = c.elements();
  const std::size_t n = es.size();
  if (n < 2) return n == 0;
  std::vector<BBox> boxes(n);
  for (std::size_t i = 0; i < n; ++i) boxes[i] = bbox_of(es[i]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return boxes[a].xmin < boxes[b].xmin; });
  const double pad = 1e-12;
  std::vector<std::size_t> active;
  for (std::size_t oi : order) {
    const BBox& bi = boxes[oi];
    std::erase_if(active, [&](std::size_t k) { return boxes[k].xmax < bi.xmin - pad; });
    for (std::size_t k : active) {
      if (!bi.overlaps(boxes[k], pad)) continue;
      const std::size_t i = std::min(oi, k);
      const std::size_t j = std::max(oi, k);
      const bool next = j == i + 1;
      const bool wrap = i == 0 && j == n - 1;
      const auto pts = detail::raw_intersections(es[i], es[j]);
      if (pts.empty()) continue;
      if (!next && !wrap) return false;
      if (n == 2) {
        // Two elements share both endpoints.
        for (Point2 p : pts) {
          if (dist(p, start_of(es[0])) > 1e-9 && dist(p, end_of(es[0])) > 1e-9) return false;
        }
        continue;
      }
      const Point2 shared = next ? end_of(es[i]) : end_of(es[j]);
      for (Point2 p : pts) {
        if (dist(p, shared) > 1e-9) return false;
      }
    }
    active.push_back(oi);
  }
  return true;
}

inline void require_valid(const BoundaryChain& c) {
  if (!is_closed(c) || !is_simple(c)) throw GeometryError("invalid chain");
}

// Enclosed area by Green's theorem; validates closure and simplicity.
inline double chain_area(const BoundaryChain& c) {
  require_valid(c);
  return signed_area(c);
}

// Full invariant check: closed, simple and counterclockwise.
inline void validate(const BoundaryChain& c) {
  require_valid(c);
  if (!c.empty() && !(signed_area(c) > 0)) throw GeometryError("invalid chain: not counterclockwise");
}

inline double distance_to_chain(const BoundaryChain& c, Point2 p) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& e : c.elements()) d = std::min(d, distance_to_element(p, e));
  return d;
}

// Angle subtended at p while traversing the element.
inline double winding_term(const Element& e, Point2 p) {
  const Point2 s = start_of(e);
  const Point2 t = end_of(e);
  double w = std::atan2(cross(s - p, t - p), dot(s - p, t - p));
  if (const auto* arc = std::get_if<CircArc>(&e)) {
    // p inside the circular segment between chord and arc adds a full turn.
    if (dist(p, arc->center) < arc->radius) {
      const double side = cross(t - s, p - s);
      if (arc->orientation == Orientation::ccw && side < 0) w += kTwoPi;
      if (arc->orientation == Orientation::cw && side > 0) w -= kTwoPi;
    }
  }
  return w;
}

inline int winding_number(const BoundaryChain& c, Point2 p) {
  double w = 0.0;
  for (const auto& e : c.elements()) w += winding_term(e, p);
  return static_cast<int>(std::lround(w / kTwoPi));
}

enum class Location { inside, boundary, outside };

inline Location point_in_chain(const BoundaryChain& c, Point2 p, double band = kEps) {
  if (c.empty()) return Location::outside;
  if (distance_to_chain(c, p) <= band) return Location::boundary;
  return winding_number(c, p) != 0 ? Location::inside : Location::outside;
}

// Convex iff every junction turns left (within tol), every arc is
// counterclockwise, and the total turning is exactly one revolution.
inline bool convexity_check(const BoundaryChain& c, double tol = kEps) {
  const auto& es = c.elements();
  if (es.empty()) return false;
  double turning = 0.0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (const auto* arc = std::get_if<CircArc>(&es[i])) {
      if (arc->orientation != Orientation::ccw) return false;
      turning += arc->sweep();
    }
    const Vec2 tin = end_tangent_of(es[i]);
    const Vec2 tout = start_tangent_of(es[(i + 1) % es.size()]);
    const double turn = std::atan2(cross(tin, tout), dot(tin, tout));
    if (turn < -tol) return false;
    turning += turn;
  }
  return std::abs(turning - kTwoPi) < 1e-6;
}

// Support function h(u) = max over the boundary of dot(p, u); exact for
// convex chains whose arcs are all counterclockwise.
inline double support_of_element(const Element& e, Vec2 u) {
  double h = std::max(dot(start_of(e), u), dot(end_of(e), u));
  if (const auto* arc = std::get_if<CircArc>(&e)) {
    if (arc->orientation == Orientation::ccw && arc->spans_angle(angle_of(u))) {
      h = std::max(h, dot(arc->center, u) + arc->radius);
    }
  }
  return h;
}

inline double support(const BoundaryChain& c, Vec2 u) {
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& e : c.elements()) h = std::max(h, support_of_element(e, u));
  return h;
}

// Samples roughly uniformly by arc length, always including every vertex.
inline std::vector<Point2> sample_boundary(const BoundaryChain& c, std::size_t min_samples) {
  double total = 0.0;
  for (const auto& e : c.elements()) total += length_of(e);
  std::vector<Point2> pts;
  pts.reserve(min_samples + 2 * c.size());
  for (const auto& e : c.elements()) {
    const auto k = static_cast<std::size_t>(
        std::ceil(static_cast<double>(min_samples) * length_of(e) / total));
    const std::size_t n = std::max<std::size_t>(k, 1);
    for (std::size_t j = 0; j < n; ++j) pts.push_back(point_on(e, static_cast<double>(j) / n));
  }
  return pts;
}

}  // namespace ucover

#endif  // UCOVER_CHAIN_HPP_
