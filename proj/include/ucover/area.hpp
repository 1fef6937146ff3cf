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

#ifndef UCOVER_AREA_HPP_
#define UCOVER_AREA_HPP_

#include <cmath>
#include <cstddef>
#include <functional>
#include <sstream>
#include <vector>

#include "ucover/chain.hpp"
#include "ucover/construction.hpp"
#include "ucover/slant.hpp"

namespace ucover {

inline constexpr double kAreaCrossCheck = 1e-11;

inline double region_area(const BoundaryChain& c) { return c.empty() ? 0.0 : chain_area(c); }

// Both ways of getting the area of one stage: Green's theorem on the cover
// itself, and the hexagon minus every piece removed on the way there.
struct AreaBreakdown {
  double hexagon = 0, tri_c = 0, tri_e = 0, c_s = 0, e_s = 0, a_s = 0, a_h = 0, e_h = 0;
  double green = 0;

  double decomposition(CoverStage stage) const {
    double a = hexagon;
    if (stage == CoverStage::Hexagon) return a;
    a -= tri_c + tri_e;
    if (stage == CoverStage::Pal) return a;
    a -= c_s + e_s + a_s;
    if (stage == CoverStage::Sprague) return a;
    return a - a_h - e_h;
  }
};

inline AreaBreakdown area_breakdown(const CoverConstruction& c, CoverStage stage) {
  AreaBreakdown b;
  b.hexagon = region_area(c.hexagon);
  b.tri_c = region_area(c.tri_c);
  b.tri_e = region_area(c.tri_e);
  b.c_s = region_area(c.c_s);
  b.e_s = region_area(c.e_s);
  b.a_s = region_area(c.a_s);
  b.a_h = region_area(c.a_h);
  b.e_h = region_area(c.e_h);
  b.green = chain_area(c.cover(stage));
  return b;
}

inline double checked_area(const AreaBreakdown& b, CoverStage stage) {
  const double d = b.decomposition(stage);
  if (!(std::abs(d - b.green) <= kAreaCrossCheck)) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "area cross-check failed: green " << b.green << " vs decomposition " << d;
    throw GeometryError(msg.str());
  }
  return b.green;
}

inline double area_of(SlantAngle sigma, CoverStage stage, const BuildOptions& opt = {}) {
  if (stage == CoverStage::Full && !sigma.admits_full()) {
    throw RangeError("E_H undefined; construction limited to σ < 10°");
  }
  const CoverConstruction c = build_construction(sigma, opt);
  return checked_area(area_breakdown(c, stage), stage);
}

struct SweepRow {
  double sigma = 0;  // radians
  double area_pal = 0;
  double area_sprague = 0;
  double area_full = 0;
};

inline SweepRow sweep_row(SlantAngle sigma, const BuildOptions& opt = {}) {
  const CoverConstruction c = build_construction(sigma, opt);
  SweepRow r{sigma.radians(), 0, 0, 0};
  r.area_pal = checked_area(area_breakdown(c, CoverStage::Pal), CoverStage::Pal);
  r.area_sprague = checked_area(area_breakdown(c, CoverStage::Sprague), CoverStage::Sprague);
  r.area_full = checked_area(area_breakdown(c, CoverStage::Full), CoverStage::Full);
  return r;
}

// Evenly spaced rows from lo to hi radians inclusive.
inline std::vector<SweepRow> sweep(double lo, double hi, std::size_t steps, const BuildOptions& opt = {}) {
  if (steps < 2) throw RangeError("sweep needs at least 2 steps");
  if (!(lo >= 0.0 && lo < hi && hi < kFullStageLimit)) {
    throw RangeError("sweep range must satisfy 0 <= lo < hi < 10 deg");
  }
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(steps - 1);
    rows.push_back(sweep_row(SlantAngle(i + 1 == steps ? hi : lo + f * (hi - lo)), opt));
  }
  return rows;
}

struct MinResult {
  double sigma_star = 0;  // radians
  double area_star = 0;
  double lo = 0, hi = 0;  // final bracket, radians
  std::size_t evaluations = 0;
};

// Golden-section search on [lo, hi]. An interior value above both ends means
// the function is not unimodal there.
inline MinResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                                double tol) {
  if (!(tol > 0)) throw RangeError("tolerance must be positive");
  if (!(lo < hi)) throw RangeError("empty bracket");
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  MinResult r;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  r.evaluations = 2;
  const double ceiling = std::max(f_lo, f_hi);
  auto eval = [&](double x) {
    const double v = f(x);
    ++r.evaluations;
    if (v > ceiling) throw GeometryError("bracket not unimodal");
    return v;
  };
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  r.lo = a;
  r.hi = b;
  if (fc <= fd) {
    r.sigma_star = c;
    r.area_star = fc;
  } else {
    r.sigma_star = d;
    r.area_star = fd;
  }
  return r;
}

// Minimises area(H(sigma)) over [lo, hi] radians.
inline MinResult minimize(double lo, double hi, double tol, const BuildOptions& opt = {}) {
  if (!(lo >= 0 && hi < kFullStageLimit)) throw RangeError("minimize bracket must lie in [0, 10 deg)");
  return golden_section(
      [&opt](double s) { return area_of(SlantAngle(s), CoverStage::Full, opt); }, lo, hi, tol);
}

}  // namespace ucover

#endif  // UCOVER_AREA_HPP_
