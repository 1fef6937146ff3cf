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

#ifndef UCOVER_FIT_HPP_
#define UCOVER_FIT_HPP_

// Pose search for putting a convex body inside a convex cover.
//
// For a fixed rotation the best translation solves a small linear program:
// minimise z subject to u_k . t - b_k <= z over sampled directions u_k, where
// b_k is the support gap h_cover(u_k) - h_body(u_k). That is bisection on z
// over a sorted half-plane intersection. Rotations are scanned on a grid and
// the best few are polished, then the final pose is scored pointwise with the
// exact signed distance to the cover boundary.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <utility>
#include <vector>

#include "ucover/chain.hpp"
#include "ucover/geometry.hpp"
#include "ucover/isometry.hpp"
#include "ucover/orbiform.hpp"

namespace ucover {

// -- Signed distance to a convex chain ------------------------------------------

struct NearestOnElement {
  Point2 q;
  double distance = 0;
  bool at_start = false;
  bool at_end = false;
};

inline NearestOnElement nearest_on_element(const Element& e, Point2 p) {
  NearestOnElement r;
  if (const auto* s = std::get_if<LineSeg>(&e)) {
    const Vec2 d = s->b - s->a;
    const double t = dot(p - s->a, d) / dot(d, d);
    if (t <= 0) {
      r.q = s->a;
      r.at_start = true;
    } else if (t >= 1) {
      r.q = s->b;
      r.at_end = true;
    } else {
      r.q = s->a + t * d;
    }
  } else {
    const auto& arc = std::get<CircArc>(e);
    const Vec2 v = p - arc.center;
    if (norm(v) > 0 && arc.spans_angle(angle_of(v))) {
      r.q = arc.center + arc.radius * normalized(v);
    } else {
      const Point2 a = arc.start(), b = arc.end();
      if (dist(p, a) <= dist(p, b)) {
        r.q = a;
        r.at_start = true;
      } else {
        r.q = b;
        r.at_end = true;
      }
    }
  }
  r.distance = dist(p, r.q);
  return r;
}

// Outward normal of a counterclockwise element at one of its points.
inline Vec2 outward_normal(const Element& e, Point2 q) {
  if (const auto* s = std::get_if<LineSeg>(&e)) {
    const Vec2 d = normalized(s->b - s->a);
    return {d.y, -d.x};
  }
  const auto& arc = std::get<CircArc>(e);
  const Vec2 n = normalized(q - arc.center);
  return arc.orientation == Orientation::ccw ? n : -n;
}

// Nearest-element index over a closed convex chain: a bounding-box tree
// over runs of consecutive elements. Consecutive elements are spatially
// close, so splitting by index gives tight boxes without any sorting.
class ChainLocator {
 public:
  explicit ChainLocator(BoundaryChain chain) : chain_(std::move(chain)) {
    if (chain_.empty()) throw GeometryError("empty cover chain");
    nodes_.reserve(2 * chain_.size() / kLeaf + 2);
    build(0, static_cast<std::uint32_t>(chain_.size()));
  }

  const BoundaryChain& chain() const { return chain_; }

  // Positive outside, negative inside.
  double signed_distance(Point2 p) const {
    const auto [idx, near] = nearest(p);
    const auto& es = chain_.elements();
    const std::size_t n = es.size();
    Vec2 normal;
    if (near.at_start) {
      normal = outward_normal(es[(idx + n - 1) % n], near.q) + outward_normal(es[idx], near.q);
    } else if (near.at_end) {
      normal = outward_normal(es[idx], near.q) + outward_normal(es[(idx + 1) % n], near.q);
    } else {
      normal = outward_normal(es[idx], near.q);
    }
    return dot(p - near.q, normal) > 0 ? near.distance : -near.distance;
  }

 private:
  static constexpr std::uint32_t kLeaf = 8;

  struct Node {
    BBox box;
    std::uint32_t lo = 0, hi = 0;    // element range
    std::int32_t left = -1, right = -1;
  };

  std::int32_t build(std::uint32_t lo, std::uint32_t hi) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({});
    Node n;
    n.lo = lo;
    n.hi = hi;
    if (hi - lo <= kLeaf) {
      for (std::uint32_t i = lo; i < hi; ++i) {
        const BBox eb = bbox_of(chain_[i]);
        n.box.add({eb.xmin, eb.ymin});
        n.box.add({eb.xmax, eb.ymax});
      }
    } else {
      const std::uint32_t mid = lo + (hi - lo) / 2;
      n.left = build(lo, mid);
      n.right = build(mid, hi);
      for (const std::int32_t c : {n.left, n.right}) {
        const BBox& cb = nodes_[static_cast<std::size_t>(c)].box;
        n.box.add({cb.xmin, cb.ymin});
        n.box.add({cb.xmax, cb.ymax});
      }
    }
    nodes_[static_cast<std::size_t>(id)] = n;
    return id;
  }

  static double box_distance(const BBox& b, Point2 p) {
    const double dx = std::max({b.xmin - p.x, 0.0, p.x - b.xmax});
    const double dy = std::max({b.ymin - p.y, 0.0, p.y - b.ymax});
    return std::hypot(dx, dy);
  }

  std::pair<std::size_t, NearestOnElement> nearest(Point2 p) const {
    const auto& es = chain_.elements();
    std::size_t best_i = 0;
    NearestOnElement best;
    best.distance = std::numeric_limits<double>::infinity();
    std::array<std::int32_t, 64> stack{};
    std::size_t top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const Node& n = nodes_[static_cast<std::size_t>(stack[--top])];
      if (box_distance(n.box, p) >= best.distance) continue;
      if (n.left < 0) {
        for (std::uint32_t i = n.lo; i < n.hi; ++i) {
          const NearestOnElement c = nearest_on_element(es[i], p);
          if (c.distance < best.distance) {
            best = c;
            best_i = i;
          }
        }
        continue;
      }
      // Push the farther child first so the nearer one is searched first.
      const double dl = box_distance(nodes_[static_cast<std::size_t>(n.left)].box, p);
      const double dr = box_distance(nodes_[static_cast<std::size_t>(n.right)].box, p);
      if (dl < dr) {
        stack[top++] = n.right;
        stack[top++] = n.left;
      } else {
        stack[top++] = n.left;
        stack[top++] = n.right;
      }
    }
    return {best_i, best};
  }

  BoundaryChain chain_;
  std::vector<Node> nodes_;
};

// -- Translation subproblem --------------------------------------------------------

namespace detail {

struct HalfPlane {
  Vec2 u;      // outward normal
  double c;    // u . t <= c
  double ang;  // angle of u
};

inline Point2 meet(const HalfPlane& a, const HalfPlane& b) {
  const double det = cross(a.u, b.u);
  return {(a.c * b.u.y - b.c * a.u.y) / det, (a.u.x * b.c - b.u.x * a.c) / det};
}

inline bool outside(const HalfPlane& h, Point2 p) { return dot(h.u, p) > h.c + 1e-15; }

// Vertices of the intersection of half-planes sorted by angle, or empty.
inline std::vector<Point2> intersect_halfplanes(const std::vector<HalfPlane>& hs) {
  std::deque<const HalfPlane*> dq;
  for (const auto& h : hs) {
    while (dq.size() >= 2 && outside(h, meet(*dq[dq.size() - 2], *dq.back()))) dq.pop_back();
    while (dq.size() >= 2 && outside(h, meet(*dq[0], *dq[1]))) dq.pop_front();
    dq.push_back(&h);
  }
  while (dq.size() >= 3 && outside(*dq[0], meet(*dq[dq.size() - 2], *dq.back()))) dq.pop_back();
  while (dq.size() >= 3 && outside(*dq.back(), meet(*dq[0], *dq[1]))) dq.pop_front();
  std::vector<Point2> out;
  if (dq.size() < 3) return out;
  for (std::size_t i = 0; i < dq.size(); ++i) {
    const HalfPlane& a = *dq[i];
    const HalfPlane& b = *dq[(i + 1) % dq.size()];
    // Consecutive boundary lines must turn left by less than a half turn.
    if (!(cross(a.u, b.u) > 0)) return {};
    out.push_back(meet(a, b));
  }
  return out;
}

inline Point2 centroid(const std::vector<Point2>& pts) {
  Point2 c{};
  for (Point2 p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

}  // namespace detail

// Directions u_k sorted by angle with per-direction cover support h_K(u_k);
// the first `uniform` entries are evenly spaced, starting at angle 0.
struct DirectionSet {
  std::vector<double> angle;
  std::vector<Vec2> u;
  std::vector<double> h_cover;
  std::size_t uniform = 0;
};

inline DirectionSet make_directions(const BoundaryChain& cover, std::size_t uniform,
                                    const std::vector<double>& extra = {}) {
  std::vector<double> ang;
  for (std::size_t k = 0; k < uniform; ++k) ang.push_back(kTwoPi * k / uniform);
  for (double a : extra) ang.push_back(wrap_positive(a));
  std::sort(ang.begin(), ang.end());
  DirectionSet d;
  for (double a : ang) {
    if (!d.angle.empty() && a - d.angle.back() < 1e-12) continue;
    d.angle.push_back(a);
  }
  d.uniform = uniform;
  for (double a : d.angle) {
    d.u.push_back(unit_from_angle(a));
    d.h_cover.push_back(support(cover, d.u.back()));
  }
  return d;
}

struct TranslationFit {
  Vec2 t;
  double z = 0;  // max_k u_k . t - b_k
};

// Minimises max_k (u_k . t - b_k) over t.
inline TranslationFit solve_translation(const DirectionSet& d, const std::vector<double>& b) {
  const std::size_t m = d.u.size();
  // Opposite uniform directions give a lower bound.
  double lo = -std::numeric_limits<double>::infinity();
  {
    std::vector<double> bu;
    for (std::size_t k = 0; k < m; ++k) {
      const double a = d.angle[k] * d.uniform / kTwoPi;
      if (std::abs(a - std::round(a)) < 1e-9) bu.push_back(b[k]);
    }
    const std::size_t half = bu.size() / 2;
    for (std::size_t k = 0; k < half; ++k) lo = std::max(lo, -(bu[k] + bu[k + half]) / 2);
  }
  auto z_at = [&](Vec2 t) {
    double z = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) z = std::max(z, dot(d.u[k], t) - b[k]);
    return z;
  };
  TranslationFit best{{0, 0}, z_at({0, 0})};
  double hi = best.z;
  lo = std::min(lo, hi);
  std::vector<detail::HalfPlane> hs(m);
  for (std::size_t k = 0; k < m; ++k) hs[k] = {d.u[k], 0.0, d.angle[k]};
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    for (std::size_t k = 0; k < m; ++k) hs[k].c = b[k] + mid;
    const auto poly = detail::intersect_halfplanes(hs);
    if (poly.empty()) {
      lo = mid;
      continue;
    }
    hi = mid;
    const Vec2 t = detail::centroid(poly);
    const double z = z_at(t);
    if (z < best.z) best = {t, z};
  }
  return best;
}

// -- Pose search ----------------------------------------------------------------------

struct FitOptions {
  std::size_t rotation_steps = 720;  // also the number of coarse directions; even
  std::size_t fine_directions = 4096;
  std::size_t candidates = 6;
  std::size_t samples = 2048;
  bool allow_reflection = true;
  double success_tolerance = 1e-6;
  // Cover elements at least this long contribute their normals as extra
  // directions; they are where h_K has kinks.
  double kink_min_length = 1e-4;
};

struct FitResult {
  Isometry pose;
  double max_violation = std::numeric_limits<double>::infinity();
  std::size_t samples = 0;

  bool success(double tol = 1e-6) const { return max_violation <= tol; }
};

// Precomputed data for one cover, reusable across bodies.
class FitContext {
 public:
  explicit FitContext(const BoundaryChain& cover, FitOptions opt = {})
      : opt_(opt), locator_(cover) {
    if (opt_.rotation_steps < 4 || opt_.rotation_steps % 2) throw RangeError("rotation_steps must be even");
    coarse_ = make_directions(cover, opt_.rotation_steps);
    std::vector<double> kinks;
    for (const auto& e : cover.elements()) {
      if (const auto* s = std::get_if<LineSeg>(&e)) {
        if (s->length() >= opt_.kink_min_length) kinks.push_back(angle_of(outward_normal(e, s->a)));
      } else {
        const auto& arc = std::get<CircArc>(e);
        kinks.push_back(angle_of(outward_normal(e, arc.start())));
        kinks.push_back(angle_of(outward_normal(e, arc.end())));
      }
    }
    fine_ = make_directions(cover, opt_.fine_directions, kinks);
  }

  const FitOptions& options() const { return opt_; }
  const ChainLocator& locator() const { return locator_; }

  // Largest signed distance of the posed samples outside the cover.
  double max_violation(const std::vector<Point2>& pts, const Isometry& pose) const {
    double v = -std::numeric_limits<double>::infinity();
    for (Point2 p : pts) v = std::max(v, locator_.signed_distance(pose(p)));
    return v;
  }

  // Best translation for a rotation, scored on the fine directions.
  TranslationFit translation_for(const Orbiform& body, double rotation, bool reflect) const {
    std::vector<double> b(fine_.u.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      const double a = reflect ? rotation - fine_.angle[k] : fine_.angle[k] - rotation;
      b[k] = fine_.h_cover[k] - body.support(a);
    }
    return solve_translation(fine_, b);
  }

  struct Candidate {
    double z;  // coarse support score
    std::size_t r;
    bool reflect;
  };

  // Local minima over the rotation grid of the coarse support score, best
  // first.
  std::vector<Candidate> candidates(const Orbiform& body) const {
    const std::size_t n = opt_.rotation_steps;
    // Rotations are multiples of the grid step, so every lookup of the body
    // support lands on a grid angle.
    // Angles past pi are written as negatives so that a mirrored body sees
    // exactly negated arguments and the search stays mirror-symmetric.
    std::vector<double> hb(n);
    const auto nd = static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      hb[k] = body.support(2 * k <= n ? kTwoPi * static_cast<double>(k) / nd
                                      : -(kTwoPi * static_cast<double>(n - k) / nd));
    }
    std::vector<Candidate> cand;
    const int flags = opt_.allow_reflection ? 2 : 1;
    std::vector<double> b(n);
    for (int f = 0; f < flags; ++f) {
      const bool reflect = f == 1;
      std::vector<double> z(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t idx = reflect ? (r + n - k) % n : (k + n - r) % n;
          b[k] = coarse_.h_cover[k] - hb[idx];
        }
        z[r] = solve_translation(coarse_, b).z;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (z[r] <= z[(r + n - 1) % n] && z[r] <= z[(r + 1) % n]) cand.push_back({z[r], r, reflect});
      }
    }
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& c) {
      return a.z != c.z ? a.z < c.z : (a.r != c.r ? a.r < c.r : !a.reflect);
    });
    return cand;
  }

  // Golden-section polish of the rotation within one grid step of a
  // candidate, then the best translation, scored pointwise.
  FitResult refine(const Orbiform& body, const std::vector<Point2>& pts, const Candidate& c) const {
    const double step = kTwoPi / static_cast<double>(opt_.rotation_steps);
    const double invphi = (std::sqrt(5.0) - 1) / 2;
    double lo = c.r * step - step, hi = c.r * step + step;
    auto zf = [&](double rho) { return translation_for(body, rho, c.reflect).z; };
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = zf(x1), f2 = zf(x2);
    while (hi - lo > 1e-9) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = zf(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = zf(x2);
      }
    }
    const double rho = f1 <= f2 ? x1 : x2;
    const TranslationFit tf = translation_for(body, rho, c.reflect);
    FitResult r;
    r.pose = {rho, tf.t, c.reflect};
    r.max_violation = max_violation(pts, r.pose);
    r.samples = pts.size();
    return r;
  }

  FitResult fit(const Orbiform& body) const {
    const auto pts = body.samples(opt_.samples);
    auto cand = candidates(body);
    if (cand.size() > opt_.candidates) cand.resize(opt_.candidates);
    FitResult best;
    best.samples = pts.size();
    const double good = opt_.success_tolerance * 1e-3;
    for (const auto& c : cand) {
      const FitResult r = refine(body, pts, c);
      if (r.max_violation < best.max_violation) best = r;
      if (best.max_violation <= good) break;
    }
    if (best.max_violation > good) polish(pts, best);
    return best;
  }

  // Every distinct pose, one per promising grid minimum, that fits within
  // the success tolerance.
  std::vector<FitResult> all_fits(const Orbiform& body, std::size_t limit = 24) const {
    const auto pts = body.samples(opt_.samples);
    auto cand = candidates(body);
    if (cand.size() > limit) cand.resize(limit);
    std::vector<FitResult> out;
    for (const auto& c : cand) {
      // A coarse score this far above zero never polishes down to a fit.
      if (c.z > 1e-3) break;
      FitResult r = refine(body, pts, c);
      if (r.max_violation > opt_.success_tolerance && r.max_violation < 1e-4) polish(pts, r);
      if (r.max_violation <= opt_.success_tolerance) out.push_back(r);
    }
    return out;
  }

 private:
  // Pattern search on (rotation, tx, ty) against the pointwise violation.
  void polish(const std::vector<Point2>& pts, FitResult& r) const {
    double step = 1e-3;
    int evals = 0;
    while (step > 1e-11 && evals < 4000) {
      bool improved = false;
      for (int axis = 0; axis < 3 && !improved; ++axis) {
        for (double sgn : {1.0, -1.0}) {
          Isometry p = r.pose;
          if (axis == 0) p.rotation += sgn * step;
          if (axis == 1) p.translation.x += sgn * step;
          if (axis == 2) p.translation.y += sgn * step;
          const double v = max_violation(pts, p);
          ++evals;
          if (v < r.max_violation) {
            r.pose = p;
            r.max_violation = v;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  FitOptions opt_;
  ChainLocator locator_;
  DirectionSet coarse_;
  DirectionSet fine_;
};

inline FitResult fit(const Orbiform& body, const BoundaryChain& cover, const FitOptions& opt = {}) {
  return FitContext(cover, opt).fit(body);
}

}  // namespace ucover

#endif  // UCOVER_FIT_HPP_
