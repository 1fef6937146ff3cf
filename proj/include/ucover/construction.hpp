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

#ifndef UCOVER_CONSTRUCTION_HPP_
#define UCOVER_CONSTRUCTION_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ucover/chain.hpp"
#include "ucover/geometry.hpp"
#include "ucover/hexagon.hpp"
#include "ucover/landmarks.hpp"
#include "ucover/slant.hpp"

namespace ucover {

struct BuildOptions {
  // The image of the taut path under (s,t) -> (-s,-t) has no closed form and
  // is drawn as a polyline; intervals double until no chord sags more than
  // this.
  double image_sagitta = 1e-11;
  std::size_t image_initial_intervals = 512;
  std::size_t image_max_intervals = 1u << 20;
};

// Elements shorter than this are dropped when assembling chains; they come
// from pieces that collapse to a point (all of C_S and E_S at sigma = 0).
inline constexpr double kCollapse = kEps;
inline constexpr double kPointRegion = 1e-6;

namespace detail {

class ChainBuilder {
 public:
  void segment(Point2 a, Point2 b) {
    if (dist(a, b) > kCollapse) out_.push_back(LineSeg{a, b});
  }
  void arc(Point2 center, Point2 from, Point2 to, Orientation o) {
    if (dist(from, to) > kCollapse) out_.push_back(CircArc::between(center, 1.0, from, to, o));
  }
  void element(const Element& e) {
    if (dist(start_of(e), end_of(e)) > kCollapse) out_.push_back(e);
  }
  void polyline(const std::vector<Point2>& pts) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) segment(pts[i], pts[i + 1]);
  }
  std::vector<Element> take() && { return std::move(out_); }
  BoundaryChain finish() && {
    // Fewer than two surviving pieces cannot enclose anything, and a region
    // this small is a corner shrinking to a point.
    if (out_.size() < 2) return {};
    BoundaryChain c(std::move(out_));
    const BBox b = c.bbox();
    if (std::hypot(b.xmax - b.xmin, b.ymax - b.ymin) < kPointRegion) return {};
    return c;
  }

 private:
  std::vector<Element> out_;
};

inline Point2 point_on_line_between(Point2 a, Point2 b, Point2 p, double slack = 1e-9) {
  const double t = dot(p - a, b - a) / dot(b - a, b - a);
  if (t < -slack || t > 1 + slack) throw GeometryError("construction failed: point off its edge");
  return p;
}

// Position of angle a within the counterclockwise sweep from a0 to a1, as a
// fraction; outside [0, 1] when a is not on that arc.
inline double ccw_fraction(double a0, double a1, double a) {
  const double span = wrap_positive(a1 - a0);
  if (span == 0.0) return 0.0;
  double off = wrap_positive(a - a0);
  if (off > 0.5 * (span + kTwoPi)) off -= kTwoPi;
  return off / span;
}

}  // namespace detail

// -- Corner A parametrisation -------------------------------------------------
//
// L(s) is the end on line DC of a unit segment from line EF whose direction
// makes angle s with edge ED; N(t) is the point of edge DE at signed distance
// t from its midpoint M, positive towards E. X(s,t) is where the unit circles
// about L(s) and N(t) meet near corner A.

struct ParamCoords {
  double s = 0.0;
  double t = 0.0;
};

namespace detail {

inline Point2 edge_midpoint_M() { return midpoint(hexagon::corner('D'), hexagon::corner('E')); }
inline Vec2 ed_direction() { return unit_from_angle(deg_to_rad(150.0)); }

// Foot W on line EF (x = -1/2) of the unit segment ending at L(s).
inline Point2 anchor_W(double s) {
  const Vec2 d = unit_from_angle(deg_to_rad(-30.0) - s);
  const Vec2 n = hexagon::edge_normal('C', 'D');
  const double y = (hexagon::kApothem - n.x * (-0.5 + d.x)) / n.y - d.y;
  return {-0.5, y};
}

}  // namespace detail

inline Point2 point_L(double s) {
  if (!std::isfinite(s) || std::abs(s) >= kPi / 6) {
    throw RangeError("parameter out of construction range");
  }
  const Point2 w = detail::anchor_W(s);
  const Point2 l = w + unit_from_angle(deg_to_rad(-30.0) - s);
  const Point2 e = hexagon::corner('E');
  const Point2 f = hexagon::corner('F');
  const Point2 c = hexagon::corner('C');
  const Point2 d = hexagon::corner('D');
  const double tw = (w.y - e.y) / (f.y - e.y);
  const double tl = dot(l - d, c - d) / dot(c - d, c - d);
  if (tw < -1e-9 || tw > 1 + 1e-9 || tl < -1e-9 || tl > 1 + 1e-9) {
    throw RangeError("parameter out of construction range");
  }
  return l;
}

inline Point2 point_N(double t) {
  const double half = 0.5 * hexagon::kEdgeLength;
  if (!std::isfinite(t) || std::abs(t) > half + 1e-12) throw RangeError("N(t) outside edge DE");
  return detail::edge_midpoint_M() + t * detail::ed_direction();
}

inline Point2 point_X(double s, double t) {
  const auto pts = circle_circle_intersection(point_L(s), 1.0, point_N(t), 1.0);
  if (pts.empty()) throw GeometryError("X(s,t): circles do not meet");
  return nearest_of(pts, hexagon::corner('A'));
}

namespace detail {

// Root of |x - c| = 1 on the line through a and b nearest to `near`, without
// snapping near-tangent roots together. Near P the circle about the point
// touches line DC, and snapping there would cost sqrt(eps) in s.
inline Point2 unit_root_near(Point2 c, Point2 a, Point2 b, Point2 near) {
  const Point2 f = foot_of_perpendicular(c, a, b);
  const double d = dist(c, f);
  const double h = std::sqrt(std::max(0.0, (1.0 - d) * (1.0 + d)));
  const Vec2 u = normalized(b - a);
  const Point2 p = f - h * u, q = f + h * u;
  return dist(p, near) <= dist(q, near) ? p : q;
}

}  // namespace detail

// Recovers (s,t) from a point near corner A without checking the ranges.
inline ParamCoords invert_X_unchecked(Point2 p) {
  const Point2 lp = detail::unit_root_near(p, hexagon::corner('D'), hexagon::corner('C'), point_L(0.0));
  const Point2 w = detail::unit_root_near(lp, hexagon::corner('E'), hexagon::corner('F'), detail::anchor_W(0.0));
  const double s = wrap_angle(deg_to_rad(-30.0) - angle_of(lp - w));
  const Point2 m = detail::edge_midpoint_M();
  const Point2 np = detail::unit_root_near(p, hexagon::corner('D'), hexagon::corner('E'), m);
  return {s, dot(np - m, detail::ed_direction())};
}

// theta: angle of F_3 -> G against edge ED, so that L(-theta) = G.
// tau: |M - E_3|, so that N(tau) = E_3.
struct CornerParams {
  double theta = 0.0;
  double tau = 0.0;

  bool in_region(ParamCoords c, double slack = 1e-9) const {
    return std::abs(c.s) <= theta + slack && std::abs(c.t) <= tau + slack;
  }
  ParamCoords invert_X(Point2 p, double slack = 1e-9) const {
    const ParamCoords c = invert_X_unchecked(p);
    if (!in_region(c, slack)) throw RangeError("point outside region R");
    return c;
  }
  // (s,t) -> (-s,-t).
  Point2 image(Point2 p) const {
    const ParamCoords c = invert_X_unchecked(p);
    return point_X(-c.s, -c.t);
  }
};

// -- Landmarks ------------------------------------------------------------------

namespace detail {

// The four side lines of the copy rotated by 30 deg + sigma that matter: the
// C and E cuts and the chords opposite them.
struct RotatedSides {
  hexagon::SideLine c_cut, e_cut, f_line, b_line;
};

inline RotatedSides rotated_sides(double sigma) {
  const double c = hexagon::corner_angle('C') + sigma;
  const double e = hexagon::corner_angle('E') + sigma;
  return {hexagon::side_line(c), hexagon::side_line(e), hexagon::side_line(c + kPi),
          hexagon::side_line(e + kPi)};
}

inline void add_corner_landmarks(Landmarks& lm) {
  for (char c : std::string_view("ABCDEF")) {
    lm.set(std::string(1, c) + "_1", hexagon::corner(c));
  }
}

}  // namespace detail

// Cut endpoints and every point used by the Sprague regions and corner A.
inline Landmarks build_landmarks(SlantAngle sigma) {
  using hexagon::corner;
  using hexagon::cut_point;
  const auto sides = detail::rotated_sides(sigma.radians());
  Landmarks lm;
  detail::add_corner_landmarks(lm);
  const Point2 c3 = cut_point(sides.c_cut, 'B', 'C');
  const Point2 c2 = cut_point(sides.c_cut, 'C', 'D');
  const Point2 e3 = cut_point(sides.e_cut, 'D', 'E');
  const Point2 e2 = cut_point(sides.e_cut, 'E', 'F');
  const Point2 f3 = cut_point(sides.f_line, 'E', 'F');
  const Point2 f2 = cut_point(sides.f_line, 'F', 'A');
  const Point2 b3 = cut_point(sides.b_line, 'A', 'B');
  const Point2 b2 = cut_point(sides.b_line, 'B', 'C');
  lm.set("C_2", c2);
  lm.set("C_3", c3);
  lm.set("E_2", e2);
  lm.set("E_3", e3);
  lm.set("F_2", f2);
  lm.set("F_3", f3);
  lm.set("B_2", b2);
  lm.set("B_3", b3);
  const Point2 m = detail::edge_midpoint_M();
  lm.set("M", m);

  // Opposite sides of the rotated copy are a unit apart, so these feet are
  // the unit-arc tangencies.
  lm.set("K", f3 + sides.c_cut.normal);
  lm.set("I", b3 + sides.e_cut.normal);
  const Point2 g = nearest_of(circle_line_intersection(f3, 1.0, corner('D'), corner('C')), c2);
  detail::point_on_line_between(corner('D'), corner('C'), g);
  lm.set("G", g);
  lm.set("H", foot_of_perpendicular(c3, corner('E'), corner('F')));
  lm.set("J", nearest_of(circle_circle_intersection(b3, 1.0, c3, 1.0), corner('E')));
  lm.set("P", foot_of_perpendicular(g, corner('F'), corner('A')));
  lm.set("Q", foot_of_perpendicular(e3, corner('A'), corner('B')));
  lm.set("X", nearest_of(circle_circle_intersection(g, 1.0, e3, 1.0), corner('A')));

  lm.theta = wrap_angle(angle_of(g - f3) - deg_to_rad(-30.0));
  lm.tau = dist(m, e3);
  return lm;
}

inline std::pair<double, double> compute_theta_tau(SlantAngle sigma) {
  const Landmarks lm = build_landmarks(sigma);
  return {lm.theta, lm.tau};
}

inline CornerParams corner_params(const Landmarks& lm) { return {lm.theta, lm.tau}; }

// -- Hexagon and P(sigma) ---------------------------------------------------------

inline std::pair<BoundaryChain, Landmarks> build_hexagon() {
  Landmarks lm;
  detail::add_corner_landmarks(lm);
  lm.set("M", detail::edge_midpoint_M());
  return {hexagon::chain(), lm};
}

inline BoundaryChain pal_chain(const Landmarks& lm) {
  const std::array<Point2, 8> pts{lm["A_1"], lm["F_1"], lm["E_2"], lm["E_3"],
                                  lm["D_1"], lm["C_2"], lm["C_3"], lm["B_1"]};
  return polygon_chain(pts);
}

inline std::pair<BoundaryChain, Landmarks> build_pal(SlantAngle sigma) {
  Landmarks lm = build_landmarks(sigma);
  return {pal_chain(lm), std::move(lm)};
}

// -- Sprague regions and S(sigma) ---------------------------------------------------

struct SpragueRegions {
  BoundaryChain c_s;
  BoundaryChain e_s;
  BoundaryChain a_s;
  Landmarks landmarks;
};

inline SpragueRegions sprague_regions(const Landmarks& lm) {
  using O = Orientation;
  SpragueRegions out;
  {
    detail::ChainBuilder b;
    b.segment(lm["G"], lm["C_2"]);
    b.segment(lm["C_2"], lm["K"]);
    b.arc(lm["F_3"], lm["K"], lm["G"], O::cw);
    out.c_s = std::move(b).finish();
  }
  {
    detail::ChainBuilder b;
    b.segment(lm["H"], lm["E_2"]);
    b.segment(lm["E_2"], lm["I"]);
    b.arc(lm["B_3"], lm["I"], lm["J"], O::cw);
    b.arc(lm["C_3"], lm["J"], lm["H"], O::cw);
    out.e_s = std::move(b).finish();
  }
  {
    detail::ChainBuilder b;
    b.segment(lm["Q"], lm["A_1"]);
    b.segment(lm["A_1"], lm["P"]);
    b.arc(lm["G"], lm["P"], lm["X"], O::cw);
    b.arc(lm["E_3"], lm["X"], lm["Q"], O::cw);
    out.a_s = std::move(b).finish();
  }
  out.landmarks = lm;
  return out;
}

inline SpragueRegions build_sprague_regions(SlantAngle sigma) {
  return sprague_regions(build_landmarks(sigma));
}

namespace detail {

// Boundary of S(sigma) split at corner A and corner E so the later
// reductions can splice in replacements.
struct SChainPieces {
  std::vector<Element> near_a;  // Q -> X -> P
  std::vector<Element> f_side;  // P -> F -> H
  std::vector<Element> near_e;  // H -> J -> I
  std::vector<Element> rest;    // I -> E_3 -> D -> G -> K -> C_3 -> B -> Q
};

inline std::vector<Element> elements_of(ChainBuilder&& b) { return std::move(b).take(); }

inline SChainPieces s_chain_pieces(const Landmarks& lm) {
  using O = Orientation;
  SChainPieces p;
  {
    ChainBuilder b;
    b.arc(lm["E_3"], lm["Q"], lm["X"], O::ccw);
    b.arc(lm["G"], lm["X"], lm["P"], O::ccw);
    p.near_a = elements_of(std::move(b));
  }
  {
    std::vector<Element> v;
    if (dist(lm["P"], lm["F_1"]) > kCollapse) v.push_back(LineSeg{lm["P"], lm["F_1"]});
    if (dist(lm["F_1"], lm["H"]) > kCollapse) v.push_back(LineSeg{lm["F_1"], lm["H"]});
    p.f_side = v;
  }
  {
    std::vector<Element> v;
    if (dist(lm["H"], lm["J"]) > kCollapse) {
      v.push_back(CircArc::between(lm["C_3"], 1.0, lm["H"], lm["J"], O::ccw));
    }
    if (dist(lm["J"], lm["I"]) > kCollapse) {
      v.push_back(CircArc::between(lm["B_3"], 1.0, lm["J"], lm["I"], O::ccw));
    }
    p.near_e = v;
  }
  {
    std::vector<Element> v;
    auto seg = [&v](Point2 a, Point2 b) {
      if (dist(a, b) > kCollapse) v.push_back(LineSeg{a, b});
    };
    seg(lm["I"], lm["E_3"]);
    seg(lm["E_3"], lm["D_1"]);
    seg(lm["D_1"], lm["G"]);
    if (dist(lm["G"], lm["K"]) > kCollapse) {
      v.push_back(CircArc::between(lm["F_3"], 1.0, lm["G"], lm["K"], O::ccw));
    }
    seg(lm["K"], lm["C_3"]);
    seg(lm["C_3"], lm["B_1"]);
    seg(lm["B_1"], lm["Q"]);
    p.rest = v;
  }
  return p;
}

inline BoundaryChain join(std::initializer_list<const std::vector<Element>*> parts) {
  std::vector<Element> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return BoundaryChain(std::move(out));
}

}  // namespace detail

inline BoundaryChain s_chain(const Landmarks& lm) {
  const auto p = detail::s_chain_pieces(lm);
  return detail::join({&p.near_a, &p.f_side, &p.near_e, &p.rest});
}

inline BoundaryChain build_S(SlantAngle sigma) { return s_chain(build_landmarks(sigma)); }

// -- Region A_H -----------------------------------------------------------------------

// Shortest path inside R from X(theta,tau) to X(0,0). R is bounded on that
// side by the arc about L(theta); when the chord dips into that circle the
// path wraps along it to the tangent point and then runs straight.
struct TautPath {
  Point2 start;                      // X(theta, tau)
  Point2 end;                        // X(0, 0)
  std::optional<CircArc> wrap;       // start -> tangent point
  Point2 tangent_point;              // equals start when there is no wrap

  bool straight() const { return !wrap.has_value(); }
  std::vector<Element> elements() const {
    std::vector<Element> v;
    if (wrap) v.push_back(*wrap);
    if (dist(tangent_point, end) > kCollapse) v.push_back(LineSeg{tangent_point, end});
    return v;
  }
};

inline TautPath taut_path(const CornerParams& cp) {
  TautPath path;
  path.start = point_X(cp.theta, cp.tau);
  path.end = point_X(0.0, 0.0);
  path.tangent_point = path.start;
  const Point2 lt = point_L(cp.theta);
  if (dot(path.end - path.start, path.start - lt) >= 0) return path;
  const Point2 tp = nearest_of(tangent_points(lt, 1.0, path.end), path.start);
  if (dist(tp, path.start) <= kCollapse) return path;
  path.wrap = CircArc::minor(lt, 1.0, path.start, tp);
  path.tangent_point = tp;
  return path;
}

namespace detail {

// Image of the straight part a -> b of the taut path, as a polyline from
// image(a) to image(b). Uniform doubling keeps the vertex set a smooth
// function of sigma.
inline std::vector<Point2> image_polyline(const CornerParams& cp, Point2 a, Point2 b,
                                          const BuildOptions& opt) {
  std::size_t n = std::max<std::size_t>(opt.image_initial_intervals, 1);
  std::vector<Point2> img(n + 1);
  for (std::size_t i = 0; i <= n; ++i) img[i] = cp.image(lerp(a, b, static_cast<double>(i) / n));
  while (n < opt.image_max_intervals) {
    std::vector<Point2> finer(2 * n + 1);
    double sag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      finer[2 * i] = img[i];
      const Point2 mid = cp.image(lerp(a, b, (i + 0.5) / n));
      finer[2 * i + 1] = mid;
      if (dist(img[i], img[i + 1]) > 0) {
        sag = std::max(sag, std::abs(signed_distance_to_line(mid, img[i], img[i + 1])));
      }
    }
    finer[2 * n] = img[n];
    img = std::move(finer);
    n *= 2;
    if (sag <= opt.image_sagitta) break;
  }
  return img;
}

}  // namespace detail

// Pieces of the corner-A reduction shared by A_H and H(sigma).
struct CornerACut {
  TautPath path;
  std::vector<Point2> image;  // X(0,0) -> W', image of the straight part
  Point2 w_prime;            // where the image leaves the arc about G
  bool empty = true;
};

inline CornerACut corner_a_cut(const Landmarks& lm, const BuildOptions& opt) {
  CornerACut cut;
  const CornerParams cp = corner_params(lm);
  if (cp.theta <= kEps) return cut;
  cut.path = taut_path(cp);
  // The wrap arc has s = theta throughout, so its image lies on the arc
  // about L(-theta) = G and ends at P.
  cut.image = detail::image_polyline(cp, cut.path.end, cut.path.tangent_point, opt);
  cut.image.front() = cut.path.end;  // the map fixes X(0,0)
  if (cut.path.straight()) cut.image.back() = lm["P"];
  cut.w_prime = cut.image.back();
  cut.empty = false;
  return cut;
}

inline BoundaryChain region_ah(const Landmarks& lm, const CornerACut& cut) {
  if (cut.empty) return {};
  detail::ChainBuilder b;
  b.arc(lm["E_3"], cut.path.start, lm["X"], Orientation::ccw);
  b.arc(lm["G"], lm["X"], cut.w_prime, Orientation::ccw);
  std::vector<Point2> back(cut.image.rbegin(), cut.image.rend());
  b.polyline(back);
  const auto fwd = cut.path.elements();
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) b.element(reversed_element(*it));
  return std::move(b).finish();
}

inline BoundaryChain build_region_AH(SlantAngle sigma, const BuildOptions& opt = {}) {
  const Landmarks lm = build_landmarks(sigma);
  return region_ah(lm, corner_a_cut(lm, opt));
}

// -- Region E_H -------------------------------------------------------------------------

struct CornerECut {
  Point2 u, t;
  std::optional<Point2> tangent_point;  // hull = U -> tangent point -> arc about S -> T
  Point2 s_center;
  bool empty = true;

  std::vector<Element> hull() const {
    std::vector<Element> v;
    if (!tangent_point) {
      v.push_back(LineSeg{u, t});
      return v;
    }
    if (dist(u, *tangent_point) > kCollapse) v.push_back(LineSeg{u, *tangent_point});
    if (dist(*tangent_point, t) > kCollapse) {
      v.push_back(CircArc::between(s_center, 1.0, *tangent_point, t, Orientation::ccw));
    }
    return v;
  }
};

// Adds R, S, T and U to the landmarks (when they exist) and works out the
// hull curve that replaces the corner of S(sigma) between U and T.
inline CornerECut corner_e_cut(Landmarks& lm, double sigma) {
  using hexagon::corner;
  CornerECut cut;
  if (sigma >= kFullStageLimit) return cut;
  const auto r = line_intersection(lm["F_2"], lm["F_3"], corner('F'), corner('C'));
  if (!r) return cut;
  lm.set("R", *r);
  // S is the root on edge CB, above the removed corner C.
  std::optional<Point2> s;
  const Point2 c3 = lm["C_3"];
  const Point2 b1 = corner('B');
  for (Point2 q : circle_line_intersection(*r, 1.0, corner('C'), b1)) {
    const double f = dot(q - c3, b1 - c3) / dot(b1 - c3, b1 - c3);
    if (f >= -1e-12 && f <= 1 + 1e-12) s = q;
  }
  if (!s) return cut;
  lm.set("S", *s);
  const auto t_pts = circle_circle_intersection(*s, 1.0, lm["B_3"], 1.0);
  if (t_pts.empty()) return cut;
  const Point2 t = nearest_of(t_pts, lm["J"]);
  lm.set("T", t);
  const hexagon::SideLine pal0 = hexagon::side_line(hexagon::corner_angle('E'));
  const auto [p0, p1] = pal0.two_points();
  const auto u_pts = circle_line_intersection(lm["C_3"], 1.0, p0, p1);
  if (u_pts.empty()) return cut;
  const Point2 u = nearest_of(u_pts, lm["J"]);
  lm.set("U", u);

  // The construction needs T on arc JI about B_3 and U on arc HJ about C_3;
  // at very small slants T runs past I and there is nothing to remove.
  const Point2 b3 = lm["B_3"];
  const Point2 cc3 = lm["C_3"];
  const double ft = detail::ccw_fraction(angle_of(lm["J"] - b3), angle_of(lm["I"] - b3), angle_of(t - b3));
  const double fu = detail::ccw_fraction(angle_of(lm["H"] - cc3), angle_of(lm["J"] - cc3), angle_of(u - cc3));
  if (!(ft > 0 && ft <= 1) || !(fu >= 0 && fu < 1)) return cut;
  if (dist(t, lm["J"]) <= kCollapse || dist(u, lm["J"]) <= kCollapse) return cut;

  cut.u = u;
  cut.t = t;
  cut.s_center = *s;
  // Tangent from U to the circle about S, touching where the counterclockwise
  // direction points away from U.
  for (Point2 tp : tangent_points(*s, 1.0, u)) {
    if (dot(perp(tp - *s), tp - u) <= 0) continue;
    const double sweep = wrap_positive(angle_of(t - *s) - angle_of(tp - *s));
    if (sweep > 0 && sweep < kPi) cut.tangent_point = tp;
  }
  cut.empty = false;
  return cut;
}

inline BoundaryChain region_eh(const Landmarks& lm, const CornerECut& cut) {
  if (cut.empty) return {};
  detail::ChainBuilder b;
  b.arc(lm["C_3"], cut.u, lm["J"], Orientation::ccw);
  b.arc(lm["B_3"], lm["J"], cut.t, Orientation::ccw);
  const auto h = cut.hull();
  for (auto it = h.rbegin(); it != h.rend(); ++it) b.element(reversed_element(*it));
  return std::move(b).finish();
}

inline BoundaryChain build_region_EH(SlantAngle sigma) {
  if (!sigma.admits_full()) return {};
  Landmarks lm = build_landmarks(sigma);
  const CornerECut cut = corner_e_cut(lm, sigma.radians());
  return region_eh(lm, cut);
}

// -- Full construction -------------------------------------------------------------------

struct CoverConstruction {
  double sigma = 0.0;
  Landmarks landmarks;
  BoundaryChain hexagon;
  BoundaryChain tri_c, tri_e;  // corners cut off by the rotated copy
  BoundaryChain pal;
  BoundaryChain c_s, e_s, a_s;
  BoundaryChain sprague;
  BoundaryChain a_h, e_h;
  BoundaryChain full;  // empty when sigma >= 10 deg

  const BoundaryChain& cover(CoverStage stage) const {
    switch (stage) {
      case CoverStage::Hexagon: return hexagon;
      case CoverStage::Pal: return pal;
      case CoverStage::Sprague: return sprague;
      case CoverStage::Full: break;
    }
    if (full.empty()) throw RangeError("E_H undefined; construction limited to σ < 10°");
    return full;
  }
};

inline CoverConstruction build_construction(SlantAngle sigma, const BuildOptions& opt = {}) {
  CoverConstruction out;
  out.sigma = sigma.radians();
  out.landmarks = build_landmarks(sigma);
  Landmarks& lm = out.landmarks;
  out.hexagon = hexagon::chain();
  out.tri_c = hexagon::corner_region('C', sigma.radians(), false);
  out.tri_e = hexagon::corner_region('E', sigma.radians(), false);
  out.pal = pal_chain(lm);
  auto regions = sprague_regions(lm);
  out.c_s = std::move(regions.c_s);
  out.e_s = std::move(regions.e_s);
  out.a_s = std::move(regions.a_s);
  out.sprague = s_chain(lm);
  if (!sigma.admits_full()) return out;

  const CornerACut acut = corner_a_cut(lm, opt);
  const CornerECut ecut = corner_e_cut(lm, sigma.radians());
  out.a_h = region_ah(lm, acut);
  out.e_h = region_eh(lm, ecut);

  auto pieces = detail::s_chain_pieces(lm);
  if (!acut.empty) {
    detail::ChainBuilder b;
    b.arc(lm["E_3"], lm["Q"], acut.path.start, Orientation::ccw);
    for (const auto& e : acut.path.elements()) b.element(e);
    b.polyline(acut.image);
    b.arc(lm["G"], acut.w_prime, lm["P"], Orientation::ccw);
    pieces.near_a = detail::elements_of(std::move(b));
  }
  if (!ecut.empty) {
    detail::ChainBuilder b;
    b.arc(lm["C_3"], lm["H"], ecut.u, Orientation::ccw);
    for (const auto& e : ecut.hull()) b.element(e);
    b.arc(lm["B_3"], ecut.t, lm["I"], Orientation::ccw);
    pieces.near_e = detail::elements_of(std::move(b));
  }
  out.full = detail::join({&pieces.near_a, &pieces.f_side, &pieces.near_e, &pieces.rest});
  return out;
}

inline BoundaryChain build_cover(SlantAngle sigma, CoverStage stage, const BuildOptions& opt = {}) {
  if (stage == CoverStage::Full && !sigma.admits_full()) {
    throw RangeError("E_H undefined; construction limited to σ < 10°");
  }
  if (stage == CoverStage::Hexagon) return hexagon::chain();
  const CoverConstruction c = build_construction(sigma, opt);
  return c.cover(stage);
}

}  // namespace ucover

#endif  // UCOVER_CONSTRUCTION_HPP_
