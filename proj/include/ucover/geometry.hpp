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

#ifndef UCOVER_GEOMETRY_HPP_
#define UCOVER_GEOMETRY_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucover {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute tolerance on distances for all geometric predicates.
inline constexpr double kEps = 1e-10;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometric degeneracy or an invariant that does not hold.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A parameter outside the range where a construction is defined.
class RangeError : public Error {
 public:
  using Error::Error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2& operator+=(Point2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Point2& operator-=(Point2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

using Vec2 = Point2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 unit_from_angle(double a) { return {std::cos(a), std::sin(a)}; }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
inline Point2 midpoint(Point2 a, Point2 b) { return 0.5 * (a + b); }
inline Point2 lerp(Point2 a, Point2 b, double t) { return a + t * (b - a); }

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Wraps into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

// Wraps into [0, 2pi).
inline double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

inline bool all_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Intersection points sorted by ascending y, then x.
inline void sort_points(std::vector<Point2>& pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
}

inline Point2 foot_of_perpendicular(Point2 p, Point2 a, Point2 b) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  if (len2 <= kEps * kEps) throw GeometryError("degenerate line: coincident points");
  return a + (dot(p - a, d) / len2) * d;
}

inline double distance_to_line(Point2 p, Point2 a, Point2 b) {
  return dist(p, foot_of_perpendicular(p, a, b));
}

// Signed distance, positive to the left of the directed line a->b.
inline double signed_distance_to_line(Point2 p, Point2 a, Point2 b) {
  return cross(b - a, p - a) / dist(a, b);
}

inline double distance_to_segment(Point2 p, Point2 a, Point2 b) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return dist(p, a + t * d);
}

// Intersection of the infinite lines a1b1 and a2b2; empty when parallel.
inline std::optional<Point2> line_intersection(Point2 a1, Point2 b1, Point2 a2, Point2 b2) {
  const Vec2 d1 = b1 - a1;
  const Vec2 d2 = b2 - a2;
  const double den = cross(d1, d2);
  if (std::abs(den) <= 1e-15 * norm(d1) * norm(d2)) return std::nullopt;
  return a1 + (cross(a2 - a1, d2) / den) * d1;
}

// Point x on the line through a and b with dot(n, x) == c.
inline std::optional<Point2> line_at_level(Point2 a, Point2 b, Vec2 n, double c) {
  const double den = dot(n, b - a);
  if (std::abs(den) <= 1e-15) return std::nullopt;
  return a + ((c - dot(n, a)) / den) * (b - a);
}

inline std::vector<Point2> circle_circle_intersection(Point2 c1, double r1, Point2 c2, double r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw RangeError("circle radius must be positive");
  if (!all_finite(c1) || !all_finite(c2)) throw RangeError("circle center must be finite");
  const double d = dist(c1, c2);
  if (d <= kEps && std::abs(r1 - r2) <= kEps) {
    throw GeometryError("degenerate: identical circles");
  }
  std::vector<Point2> out;
  if (d <= kEps) return out;  // concentric
  const Vec2 e = (c2 - c1) / d;
  if (std::abs(d - (r1 + r2)) <= kEps) {
    out.push_back(c1 + r1 * e);
    return out;
  }
  if (std::abs(d - std::abs(r1 - r2)) <= kEps) {
    out.push_back(r1 >= r2 ? c1 + r1 * e : c1 - r1 * e);
    return out;
  }
  if (d > r1 + r2 || d < std::abs(r1 - r2)) return out;
  const double a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
  const double h = std::sqrt(std::max(r1 * r1 - a * a, 0.0));
  const Point2 m = c1 + a * e;
  out.push_back(m + h * perp(e));
  out.push_back(m - h * perp(e));
  sort_points(out);
  return out;
}

// Intersections of the circle with the infinite line through a and b.
inline std::vector<Point2> circle_line_intersection(Point2 c, double r, Point2 a, Point2 b) {
  if (!(r > 0.0)) throw RangeError("circle radius must be positive");
  const Point2 f = foot_of_perpendicular(c, a, b);
  const double d = dist(c, f);
  std::vector<Point2> out;
  if (std::abs(d - r) <= kEps) {
    out.push_back(f);
    return out;
  }
  if (d > r) return out;
  const double h = std::sqrt(r * r - d * d);
  const Vec2 u = normalized(b - a);
  out.push_back(f - h * u);
  out.push_back(f + h * u);
  sort_points(out);
  return out;
}

// Points of tangency on the circle for lines through the external point p.
inline std::vector<Point2> tangent_points(Point2 c, double r, Point2 p) {
  const double d = dist(c, p);
  std::vector<Point2> out;
  if (std::abs(d - r) <= kEps) {
    out.push_back(p);
    return out;
  }
  if (d < r) return out;
  const Vec2 e = (p - c) / d;
  const double a = r * r / d;
  const double h = std::sqrt(std::max(r * r - a * a, 0.0));
  out.push_back(c + a * e + h * perp(e));
  out.push_back(c + a * e - h * perp(e));
  sort_points(out);
  return out;
}

inline Point2 nearest_of(const std::vector<Point2>& pts, Point2 q) {
  if (pts.empty()) throw GeometryError("construction failed: no candidate point");
  return *std::min_element(pts.begin(), pts.end(), [q](Point2 a, Point2 b) {
    return dist(a, q) < dist(b, q);
  });
}

}  // namespace ucover

#endif  // UCOVER_GEOMETRY_HPP_
