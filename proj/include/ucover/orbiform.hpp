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

#ifndef UCOVER_ORBIFORM_HPP_
#define UCOVER_ORBIFORM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ucover/chain.hpp"
#include "ucover/geometry.hpp"
#include "ucover/isometry.hpp"

namespace ucover {

// Vertices in star order: consecutive vertices (cyclically) are a unit apart
// and the arc about vertex j joins its two star neighbours.
struct ReuleauxPolygon {
  std::vector<Point2> vertices;
};

struct SupportTerm {
  int k = 3;  // odd, >= 3
  double amplitude = 0.0;
  double phase = 0.0;
};

// h(phi) = 1/2 + sum amplitude * cos(k phi + phase). Odd harmonics cancel in
// h(phi) + h(phi + pi), so the width is exactly 1.
struct SupportBody {
  std::vector<SupportTerm> terms;
};

class Orbiform {
 public:
  using Representation = std::variant<ReuleauxPolygon, SupportBody>;

  static Orbiform from_reuleaux(ReuleauxPolygon p) {
    const std::size_t n = p.vertices.size();
    if (n < 3 || n % 2 == 0) throw RangeError("Reuleaux polygon needs an odd number (>= 3) of vertices");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = dist(p.vertices[j], p.vertices[(j + 1) % n]);
      if (std::abs(d - 1.0) > 1e-9) throw GeometryError("Reuleaux star edges must have unit length");
    }
    Orbiform o;
    o.rep_ = std::move(p);
    o.chain_ = reuleaux_chain(std::get<ReuleauxPolygon>(o.rep_));
    return o;
  }

  static Orbiform from_support(SupportBody b) {
    for (const auto& t : b.terms) {
      if (t.k < 3 || t.k % 2 == 0) throw RangeError("support harmonics must be odd and >= 3");
      if (!std::isfinite(t.amplitude) || !std::isfinite(t.phase)) throw RangeError("non-finite coefficient");
    }
    Orbiform o;
    o.rep_ = std::move(b);
    if (o.min_radius_of_curvature(4096) < 0) throw RangeError("amplitudes too large");
    return o;
  }

  const Representation& representation() const { return rep_; }
  bool is_reuleaux() const { return std::holds_alternative<ReuleauxPolygon>(rep_); }
  std::string kind() const { return is_reuleaux() ? "reuleaux" : "support"; }

  // Support function in direction u(phi).
  double support(double phi) const {
    if (is_reuleaux()) return ucover::support(chain_, unit_from_angle(phi));
    const auto& b = std::get<SupportBody>(rep_);
    double h = 0.5;
    for (const auto& t : b.terms) h += t.amplitude * std::cos(t.k * phi + t.phase);
    return h;
  }

  // h + h'' at phi; non-negative exactly when the body is convex.
  double radius_of_curvature(double phi) const {
    const auto& b = std::get<SupportBody>(rep_);
    double r = 0.5;
    for (const auto& t : b.terms) {
      r += t.amplitude * (1.0 - t.k * t.k) * std::cos(t.k * phi + t.phase);
    }
    return r;
  }

  double min_radius_of_curvature(std::size_t n) const {
    if (is_reuleaux()) return 0.0;
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = std::min(m, radius_of_curvature(kTwoPi * i / n));
    return m;
  }

  // Boundary point whose outward normal is u(phi).
  Point2 boundary_point(double phi) const {
    if (is_reuleaux()) {
      const Vec2 u = unit_from_angle(phi);
      Point2 best{};
      double hb = -std::numeric_limits<double>::infinity();
      for (const auto& e : chain_.elements()) {
        const auto& arc = std::get<CircArc>(e);
        if (arc.spans_angle(phi)) return arc.point_at_angle(phi);
        for (Point2 q : {arc.start(), arc.end()}) {
          if (dot(q, u) > hb) {
            hb = dot(q, u);
            best = q;
          }
        }
      }
      return best;
    }
    const auto& b = std::get<SupportBody>(rep_);
    double h = 0.5, dh = 0.0;
    for (const auto& t : b.terms) {
      h += t.amplitude * std::cos(t.k * phi + t.phase);
      dh -= t.amplitude * t.k * std::sin(t.k * phi + t.phase);
    }
    const double c = std::cos(phi), s = std::sin(phi);
    return {h * c - dh * s, h * s + dh * c};
  }

  // At least n boundary points, taken at outward normals on a grid that is
  // symmetric about angle 0, so a body and its mirror image are sampled at
  // mirrored points. Reuleaux samples also include the vertices.
  std::vector<Point2> samples(std::size_t n) const {
    if (n == 0) return {};
    if (!is_reuleaux()) {
      std::vector<Point2> pts(n);
      for (std::size_t i = 0; i < n; ++i) pts[i] = boundary_point(symmetric_angle(i, n));
      return pts;
    }
    // The arcs of a Reuleaux polygon span normals of total angle pi, so a
    // grid of 2n angles leaves at least n - (vertex count) arc points.
    const auto& v = std::get<ReuleauxPolygon>(rep_).vertices;
    std::vector<Point2> pts(v.begin(), v.end());
    const std::size_t grid = 2 * n;
    for (std::size_t i = 0; i < grid; ++i) {
      const double phi = symmetric_angle(i, grid);
      for (const auto& e : chain_.elements()) {
        const auto& arc = std::get<CircArc>(e);
        if (arc.spans_angle(phi)) {
          pts.push_back(arc.point_at_angle(phi));
          break;
        }
      }
    }
    return pts;
  }

  double area() const {
    if (is_reuleaux()) return chain_area(chain_);
    // Trapezoid rule is exact for trigonometric polynomials of this degree.
    int kmax = 1;
    for (const auto& t : std::get<SupportBody>(rep_).terms) kmax = std::max(kmax, t.k);
    const std::size_t n = 8 * static_cast<std::size_t>(kmax) + 64;
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double phi = kTwoPi * i / n;
      double h = 0.5, dh = 0.0;
      for (const auto& t : std::get<SupportBody>(rep_).terms) {
        h += t.amplitude * std::cos(t.k * phi + t.phase);
        dh -= t.amplitude * t.k * std::sin(t.k * phi + t.phase);
      }
      a += h * h - dh * dh;
    }
    return 0.5 * a * kTwoPi / n;
  }

  // Largest deviation of h(phi) + h(phi + pi) from 1 over n directions.
  double width_error(std::size_t n = 360) const {
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double phi = kTwoPi * i / n;
      e = std::max(e, std::abs(support(phi) + support(phi + kPi) - 1.0));
    }
    return e;
  }

  // Mirror image across the x-axis.
  Orbiform mirrored() const {
    if (is_reuleaux()) {
      ReuleauxPolygon p = std::get<ReuleauxPolygon>(rep_);
      for (auto& v : p.vertices) v.y = -v.y;
      return from_reuleaux(std::move(p));
    }
    SupportBody b = std::get<SupportBody>(rep_);
    for (auto& t : b.terms) t.phase = -t.phase;
    return from_support(std::move(b));
  }

  // Counterclockwise boundary; only for Reuleaux polygons.
  const BoundaryChain& chain() const { return chain_; }

 private:
  // 2 pi i / n, written as a negative angle past the half-way point so that
  // angles i and n - i are exact negatives of each other.
  static double symmetric_angle(std::size_t i, std::size_t n) {
    const auto d = static_cast<double>(n);
    return 2 * i <= n ? kTwoPi * static_cast<double>(i) / d : -(kTwoPi * static_cast<double>(n - i) / d);
  }

  static BoundaryChain reuleaux_chain(const ReuleauxPolygon& p) {
    const auto& v = p.vertices;
    const std::size_t n = v.size();
    // The arc about v[j] runs from v[j+1] to v[j-1]; the next arc starts
    // where this one ends, which is the arc about v[j-2].
    std::vector<Element> es;
    std::size_t j = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const Point2 from = v[(j + 1) % n];
      const Point2 to = v[(j + n - 1) % n];
      es.push_back(CircArc::minor(v[j], 1.0, from, to));
      j = (j + n - 2) % n;
    }
    BoundaryChain chain(std::move(es));
    if (signed_area(chain) < 0) chain = reversed(chain);
    for (const auto& e : chain.elements()) {
      if (std::get<CircArc>(e).orientation != Orientation::ccw) {
        throw GeometryError("Reuleaux star polygon is not convex");
      }
    }
    return chain;
  }

  Representation rep_;
  BoundaryChain chain_;
};

namespace detail {

// Star polygon with edge directions u(psi_j), psi_j = j*pi - a_j, for
// 0 = a_0 < a_1 < ... < a_{n-1} < pi. The last edge is implied by closure.
inline std::vector<Point2> star_vertices(const std::vector<double>& a) {
  std::vector<Point2> v{{0.0, 0.0}};
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    v.push_back(v.back() + unit_from_angle(static_cast<double>(j) * kPi - a[j]));
  }
  return v;
}

inline ReuleauxPolygon centred(std::vector<Point2> v) {
  Point2 c{};
  for (Point2 p : v) c += p;
  c = c / static_cast<double>(v.size());
  for (auto& p : v) p -= c;
  return {std::move(v)};
}

}  // namespace detail

inline Orbiform regular_reuleaux(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw RangeError("Reuleaux polygon needs an odd n >= 3");
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = kPi * j / n;
  return Orbiform::from_reuleaux(detail::centred(detail::star_vertices(a)));
}

// Random Reuleaux polygon of width 1; deterministic in the seed. The angles
// a_1 .. a_{n-3} are drawn sorted, and the last two are solved from closure.
inline Orbiform reuleaux_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0) throw RangeError("Reuleaux polygon needs an odd n >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double min_gap = 0.15 * kPi / n;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<double> a{0.0};
    for (std::size_t j = 1; j + 2 < n; ++j) a.push_back(unif(rng) * kPi);
    std::sort(a.begin(), a.end());
    Vec2 w{};
    for (std::size_t j = 0; j < a.size(); ++j) w -= unit_from_angle(static_cast<double>(j) * kPi - a[j]);
    const double len = norm(w);
    if (len >= 2.0 || len < 1e-9) continue;
    const double beta = angle_of(w);
    const double gamma = std::acos(len / 2.0);
    bool ok = false;
    for (double g : {gamma, -gamma}) {
      // n is odd, so psi_{n-2} = pi - a_{n-2} and psi_{n-1} = -a_{n-1} mod 2 pi.
      const double am = wrap_positive(kPi - (beta + g));
      const double al = wrap_positive(-(beta - g));
      std::vector<double> full = a;
      full.push_back(am);
      full.push_back(al);
      bool sorted = full.back() < kPi - min_gap;
      for (std::size_t j = 1; j < full.size() && sorted; ++j) sorted = full[j] - full[j - 1] > min_gap;
      if (!sorted) continue;
      a = std::move(full);
      ok = true;
      break;
    }
    if (!ok) continue;
    auto v = detail::star_vertices(a);
    // Random orientation so the fit does not always start from one pose.
    const double rot = unif(rng) * kTwoPi;
    const Isometry r{rot, {}, false};
    for (auto& p : v) p = r(p);
    return Orbiform::from_reuleaux(detail::centred(std::move(v)));
  }
  throw GeometryError("could not sample a Reuleaux polygon");
}

inline Orbiform support_body(std::vector<SupportTerm> terms) {
  return Orbiform::from_support(SupportBody{std::move(terms)});
}

// Random support body: one to three odd harmonics with
// sum |a| (k^2 - 1) <= 0.475, which keeps h + h'' >= 0.025.
inline Orbiform random_support_body(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int count = 1 + static_cast<int>(unif(rng) * 3.0);
  std::vector<SupportTerm> terms;
  std::vector<double> weight;
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    const int k = 3 + 2 * static_cast<int>(unif(rng) * 4.0);
    const double w = 0.05 + unif(rng);
    terms.push_back({k, 0.0, unif(rng) * kTwoPi});
    weight.push_back(w);
    total += w;
  }
  const double budget = 0.475 * (0.2 + 0.8 * unif(rng));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double k2 = static_cast<double>(terms[i].k) * terms[i].k - 1.0;
    terms[i].amplitude = budget * weight[i] / total / k2;
  }
  return support_body(std::move(terms));
}

}  // namespace ucover

#endif  // UCOVER_ORBIFORM_HPP_
