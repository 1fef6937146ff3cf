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

#ifndef UCOVER_CASE_RULES_HPP_
#define UCOVER_CASE_RULES_HPP_

// Numerical checks of the statements about bodies sitting inside S(sigma):
//  - no body enters both A_H and E_H;
//  - a body entering E_H stays out of the corner regions C' and B';
//  - a body entering E_H but not A' can be reflected in the line CF to a
//    position in S(sigma) clear of both A_H and E_H.
// A body of constant width sits in S(sigma) only at isolated rotations, so
// each body is checked at every rotation where it fits, and at the corners of
// whatever translation freedom it has there.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucover/chain.hpp"
#include "ucover/construction.hpp"
#include "ucover/fit.hpp"
#include "ucover/hexagon.hpp"
#include "ucover/isometry.hpp"
#include "ucover/orbiform.hpp"
#include "ucover/slant.hpp"

namespace ucover {

struct NamedRegion {
  std::string name;
  BoundaryChain chain;
  std::vector<Point2> interior;  // sample points well inside the region
};

// A_H, E_H and the twelve corner regions at one slant angle.
class RuleRegions {
 public:
  explicit RuleRegions(const CoverConstruction& c) {
    add("A_H", c.a_h);
    add("E_H", c.e_h);
    for (char k : std::string_view("ABCDEF")) {
      add(std::string(1, k), hexagon::corner_region(k, c.sigma, false));
      add(std::string(1, k) + "'", hexagon::corner_region(k, c.sigma, true));
    }
  }

  const std::vector<NamedRegion>& regions() const { return regions_; }
  const NamedRegion* find(const std::string& name) const {
    for (const auto& r : regions_) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

 private:
  void add(const std::string& name, const BoundaryChain& chain) {
    NamedRegion r{name, chain, {}};
    if (!chain.empty()) {
      const BBox b = chain.bbox();
      const int g = 24;
      for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
          const Point2 p{b.xmin + (b.xmax - b.xmin) * (i + 0.5) / g, b.ymin + (b.ymax - b.ymin) * (j + 0.5) / g};
          if (point_in_chain(chain, p, 1e-7) == Location::inside) r.interior.push_back(p);
        }
      }
    }
    regions_.push_back(std::move(r));
  }

  std::vector<NamedRegion> regions_;
};

struct CaseOptions {
  double containment_tolerance = 1e-6;
  // A point counts as inside a region only this far from its boundary.
  double depth = 1e-7;
};

struct RuleViolation {
  std::string rule;  // "a_h_and_e_h", "e_h_and_c_prime", "e_h_and_b_prime" or "e_h_reflection"
  Isometry pose;
  std::vector<std::string> entered;
};

struct CaseReport {
  FitResult fit;                       // fit into S(sigma)
  std::vector<std::string> entered;    // regions entered in the fitted pose
  std::size_t probes = 0;              // poses examined, all inside S(sigma)
  std::size_t entered_a_h = 0;
  std::size_t entered_e_h = 0;
  std::size_t reflection_checks = 0;
  std::vector<RuleViolation> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// Is the point (in cover coordinates) strictly inside the posed body?
inline bool body_contains(const Orbiform& body, const Isometry& inv_pose, Point2 q, double depth) {
  const Point2 p = inv_pose(q);
  if (body.is_reuleaux()) {
    // A Reuleaux polygon is the intersection of the unit disks about its vertices.
    for (Point2 v : std::get<ReuleauxPolygon>(body.representation()).vertices) {
      if (dist(p, v) > 1.0 - depth) return false;
    }
    return true;
  }
  const std::size_t n = 512;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = kTwoPi * i / n;
    if (dot(unit_from_angle(a), p) > body.support(a) - depth) return false;
  }
  return true;
}

inline bool enters(const NamedRegion& r, const Orbiform& body, const std::vector<Point2>& posed,
                   const Isometry& inv_pose, double depth) {
  if (r.chain.empty()) return false;
  const BBox b = r.chain.bbox();
  for (Point2 p : posed) {
    if (!b.contains(p)) continue;
    if (point_in_chain(r.chain, p, depth) == Location::inside) return true;
  }
  for (Point2 q : r.interior) {
    if (body_contains(body, inv_pose, q, depth)) return true;
  }
  return false;
}

}  // namespace detail

class CaseChecker {
 public:
  CaseChecker(SlantAngle sigma, CaseOptions opt = {}, FitOptions fit_opt = {})
      : opt_(opt), construction_(make_construction(sigma)), regions_(construction_),
        s_fit_(construction_.sprague, fit_opt), dirs_(make_directions(construction_.sprague, 1024)) {}

  const CoverConstruction& construction() const { return construction_; }
  const RuleRegions& regions() const { return regions_; }

  std::vector<std::string> entered(const Orbiform& body, const std::vector<Point2>& pts,
                                   const Isometry& pose) const {
    std::vector<Point2> posed(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) posed[i] = pose(pts[i]);
    const Isometry inv = inverse(pose);
    std::vector<std::string> out;
    for (const auto& r : regions_.regions()) {
      if (detail::enters(r, body, posed, inv, opt_.depth)) out.push_back(r.name);
    }
    return out;
  }

  CaseReport check(const Orbiform& body) const {
    CaseReport rep;
    const auto pts = body.samples(s_fit_.options().samples);
    const auto fits = s_fit_.all_fits(body);
    if (fits.empty()) {
      rep.fit = s_fit_.fit(body);
      return rep;
    }
    rep.fit = *std::min_element(fits.begin(), fits.end(), [](const FitResult& a, const FitResult& b) {
      return a.max_violation < b.max_violation;
    });
    rep.entered = entered(body, pts, rep.fit.pose);
    for (const auto& f : fits) {
      examine(body, pts, f.pose, rep);
      // Pushing the body to the extremes of its translation freedom.
      for (Vec2 t : feasible_vertices(body, f.pose.rotation, f.pose.reflect)) {
        examine(body, pts, {f.pose.rotation, t, f.pose.reflect}, rep);
      }
    }
    return rep;
  }

 private:
  static CoverConstruction make_construction(SlantAngle sigma) {
    if (!sigma.admits_full()) throw RangeError("E_H undefined; construction limited to σ < 10°");
    BuildOptions bo;
    bo.image_sagitta = 1e-9;
    return build_construction(sigma, bo);
  }

  // Vertices of {t : body posed at (rho, t) fits by support}, pulled slightly
  // inwards so they are strictly feasible.
  std::vector<Vec2> feasible_vertices(const Orbiform& body, double rho, bool reflect) const {
    const DirectionSet& d = dirs_;
    std::vector<detail::HalfPlane> hs(d.u.size());
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const double a = reflect ? rho - d.angle[k] : d.angle[k] - rho;
      hs[k] = {d.u[k], d.h_cover[k] - body.support(a), d.angle[k]};
    }
    auto poly = detail::intersect_halfplanes(hs);
    if (poly.empty()) return {};
    const Point2 c = detail::centroid(poly);
    for (auto& v : poly) v = lerp(v, c, 1e-6);
    return poly;
  }

  static bool has(const std::vector<std::string>& v, const char* name) {
    return std::find(v.begin(), v.end(), name) != v.end();
  }

  void examine(const Orbiform& body, const std::vector<Point2>& pts, const Isometry& pose,
               CaseReport& rep) const {
    if (s_fit_.max_violation(pts, pose) > opt_.containment_tolerance) return;
    ++rep.probes;
    const auto in = entered(body, pts, pose);
    const bool ah = has(in, "A_H"), eh = has(in, "E_H");
    rep.entered_a_h += ah;
    rep.entered_e_h += eh;
    auto fail = [&](const char* rule) { rep.violations.push_back({rule, pose, in}); };
    if (ah && eh) fail("a_h_and_e_h");
    if (eh && has(in, "C'")) fail("e_h_and_c_prime");
    if (eh && has(in, "B'")) fail("e_h_and_b_prime");
    if (eh && !has(in, "A'")) {
      ++rep.reflection_checks;
      // Reflection in the centre line through C and F.
      const Isometry mirror = Isometry::reflection_across({0, 0}, hexagon::corner_angle('C'));
      const Isometry moved = compose(mirror, pose);
      const auto in2 = entered(body, pts, moved);
      const bool fits = s_fit_.max_violation(pts, moved) <= opt_.containment_tolerance;
      if (!fits || has(in2, "A_H") || has(in2, "E_H")) fail("e_h_reflection");
    }
  }

  CaseOptions opt_;
  CoverConstruction construction_;
  RuleRegions regions_;
  FitContext s_fit_;
  DirectionSet dirs_;
};

inline CaseReport check_case_rules(const Orbiform& body, SlantAngle sigma, const CaseOptions& opt = {}) {
  return CaseChecker(sigma, opt).check(body);
}

}  // namespace ucover

#endif  // UCOVER_CASE_RULES_HPP_
