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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ucover/construction.hpp"
#include "ucover/fit.hpp"
#include "ucover/isometry.hpp"

namespace ucover {
namespace {

using hexagon::corner;

const std::vector<double> kSampleDegrees{0.0, 0.5, 1.0, 1.5494, 3.0, 5.0, 9.0};

SlantAngle Deg(double d) { return SlantAngle::from_degrees(d); }

double Tri(Point2 a, Point2 b, Point2 c) { return 0.5 * std::abs(cross(b - a, c - a)); }

void ExpectNear(Point2 a, Point2 b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
}

TEST(Slant, Range) {
  EXPECT_NO_THROW(Deg(0));
  EXPECT_NO_THROW(Deg(29.9));
  EXPECT_THROW(Deg(30), RangeError);
  EXPECT_THROW(Deg(-0.1), RangeError);
  EXPECT_TRUE(Deg(9.99).admits_full());
  EXPECT_FALSE(Deg(10).admits_full());
}

TEST(Hexagon, Corners) {
  const auto [chain, lm] = build_hexagon();
  ExpectNear(lm["A_1"], {0, 0.5773502692}, 1e-10);
  ExpectNear(lm["D_1"], {0, -0.5773502692}, 1e-10);
  EXPECT_NEAR(chain_area(chain), 0.8660254038, 1e-10);
  for (char c : std::string("ABCDEF")) EXPECT_NEAR(norm(corner(c)), 1 / std::sqrt(3.0), 1e-15);
  // Clockwise labelling from the top.
  EXPECT_GT(corner('B').x, 0);
  EXPECT_LT(corner('F').x, 0);
  EXPECT_NEAR(distance_to_line(corner('A'), corner('D'), corner('E')) + 0, 1.0, 1e-15);
}

TEST(Pal, AreaAtZero) {
  const auto [chain, lm] = build_pal(Deg(0));
  EXPECT_EQ(chain.size(), 8u);
  EXPECT_NEAR(chain_area(chain), 2 - 2 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(dist(lm["C_2"], lm["C_3"]), dist(lm["E_2"], lm["E_3"]), 1e-14);
}

TEST(Pal, AreaAtTwoDegreesFromLineIntersections) {
  const double s = deg_to_rad(2.0);
  auto cut = [&](double normal_deg, char a, char b) {
    const Vec2 n = unit_from_angle(deg_to_rad(normal_deg) + s);
    const Point2 base = 0.5 * n;
    return *line_intersection(base, base + perp(n), corner(a), corner(b));
  };
  const double tri_c = Tri(corner('C'), cut(-30, 'B', 'C'), cut(-30, 'C', 'D'));
  const double tri_e = Tri(corner('E'), cut(-150, 'D', 'E'), cut(-150, 'E', 'F'));
  const double expected = 3 * std::sqrt(3.0) / 6 - tri_c - tri_e;
  EXPECT_NEAR(chain_area(build_pal(Deg(2)).first), expected, 1e-14);
}

TEST(Pal, LandmarksOnBoundaryOrCutLines) {
  for (double d : kSampleDegrees) {
    const auto [chain, lm] = build_pal(Deg(d));
    for (const char* k : {"C_2", "C_3", "E_2", "E_3", "F_2", "F_3", "B_2", "B_3"}) {
      EXPECT_EQ(point_in_chain(build_hexagon().first, lm[k], 1e-10), Location::boundary) << k << " at " << d;
    }
  }
}

TEST(Pal, OutOfRange) { EXPECT_THROW(build_pal(SlantAngle::from_degrees(31)), RangeError); }

TEST(Pal, ReflectionAcrossCentreLineThroughM) {
  for (double d : {0.0, 2.0, 7.0}) {
    const BoundaryChain p = build_pal(Deg(d)).first;
    const Point2 m = midpoint(corner('D'), corner('E'));
    const BoundaryChain q = apply_isometry(Isometry::reflection_across({0, 0}, angle_of(m)), p);
    EXPECT_NEAR(chain_area(q), chain_area(p), 1e-12);
  }
}

TEST(Landmarks, WidthConstraints) {
  for (double d : kSampleDegrees) {
    const SlantAngle s = Deg(d);
    const Landmarks lm = build_landmarks(s);
    const auto c_cut = hexagon::side_line(deg_to_rad(-30) + s.radians());
    const auto e_cut = hexagon::side_line(deg_to_rad(-150) + s.radians());
    EXPECT_NEAR(std::abs(c_cut.offset(lm["F_2"])), 1, 1e-10) << d;
    EXPECT_NEAR(std::abs(c_cut.offset(lm["F_3"])), 1, 1e-10) << d;
    EXPECT_NEAR(std::abs(e_cut.offset(lm["B_2"])), 1, 1e-10) << d;
    EXPECT_NEAR(std::abs(e_cut.offset(lm["B_3"])), 1, 1e-10) << d;
  }
}

TEST(Landmarks, UnitDistances) {
  for (double d : kSampleDegrees) {
    const Landmarks lm = build_landmarks(Deg(d));
    EXPECT_NEAR(dist(lm["F_3"], lm["G"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["F_3"], lm["K"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["B_3"], lm["I"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["C_3"], lm["H"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["G"], lm["P"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["E_3"], lm["Q"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["J"], lm["B_3"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["J"], lm["C_3"]), 1, 1e-10) << d;
    EXPECT_NEAR(distance_to_line(lm["C_3"], corner('E'), corner('F')), 1, 1e-10) << d;
    EXPECT_NEAR(distance_to_line(lm["G"], corner('F'), corner('A')), 1, 1e-10) << d;
    EXPECT_NEAR(distance_to_line(lm["E_3"], corner('A'), corner('B')), 1, 1e-10) << d;
    EXPECT_NEAR(lm.tau, dist(lm["M"], lm["E_3"]), 1e-15) << d;
  }
}

TEST(Landmarks, TangencyFeetLieOnTheirLines) {
  const Landmarks lm = build_landmarks(Deg(1));
  EXPECT_LT(distance_to_line(lm["K"], lm["C_2"], lm["C_3"]), 1e-12);
  EXPECT_LT(distance_to_line(lm["I"], lm["E_2"], lm["E_3"]), 1e-12);
  EXPECT_LT(distance_to_line(lm["H"], corner('E'), corner('F')), 1e-12);
  EXPECT_LT(distance_to_line(lm["P"], corner('F'), corner('A')), 1e-12);
  EXPECT_LT(distance_to_line(lm["Q"], corner('A'), corner('B')), 1e-12);
  EXPECT_LT(distance_to_line(lm["G"], corner('D'), corner('C')), 1e-12);
}

TEST(ThetaTau, TauAtZeroFromDirectConstruction) {
  const Vec2 n = unit_from_angle(deg_to_rad(-150));
  const Point2 e3 = *line_intersection(0.5 * n, 0.5 * n + perp(n), corner('D'), corner('E'));
  const auto [theta, tau] = compute_theta_tau(Deg(0));
  EXPECT_NEAR(tau, dist(midpoint(corner('D'), corner('E')), e3), 1e-14);
  EXPECT_NEAR(theta, 0, 1e-12);
}

TEST(ThetaTau, Consistency) {
  for (double d : kSampleDegrees) {
    const Landmarks lm = build_landmarks(Deg(d));
    EXPECT_GE(lm.theta, 0);
    EXPECT_GE(lm.tau, 0);
    ExpectNear(point_L(-lm.theta), lm["G"], 1e-10);
    ExpectNear(point_N(lm.tau), lm["E_3"], 1e-10);
  }
}

TEST(Params, PointL) {
  const Landmarks lm = build_landmarks(Deg(1.5494));
  for (double s : {-lm.theta, 0.0, lm.theta}) {
    EXPECT_NEAR(dist(point_L(s), detail::anchor_W(s)), 1, 1e-12);
    EXPECT_LT(distance_to_line(point_L(s), corner('D'), corner('C')), 1e-12);
  }
  for (int i = -10; i <= 10; ++i) {
    const double s = lm.theta * i / 10.0;
    EXPECT_LE(dist(point_L(s + 1e-6), point_L(s)), 1e-4);
  }
  try {
    point_L(0.6);
    FAIL() << "expected an error";
  } catch (const RangeError& e) {
    EXPECT_STREQ(e.what(), "parameter out of construction range");
  }
}

TEST(Params, PointN) {
  const Point2 m = midpoint(corner('D'), corner('E'));
  ExpectNear(point_N(0), m, 0);
  for (double t : {-0.2, -0.05, 0.1, 0.25}) EXPECT_NEAR(dist(point_N(t), m), std::abs(t), 1e-15);
  EXPECT_THROW(point_N(0.3), RangeError);
}

TEST(Params, PointXLandmarks) {
  for (double d : kSampleDegrees) {
    const Landmarks lm = build_landmarks(Deg(d));
    ExpectNear(point_X(-lm.theta, lm.tau), lm["X"], 1e-9);
    const Point2 p = point_X(-lm.theta, -lm.tau);
    ExpectNear(p, lm["P"], 1e-9);
    EXPECT_EQ(point_in_chain(build_hexagon().first, p, 1e-9), Location::boundary);
  }
}

TEST(Params, PointXOnBothCircles) {
  const Landmarks lm = build_landmarks(Deg(3));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 200; ++i) {
    const double s = lm.theta * u(rng), t = lm.tau * u(rng);
    const Point2 x = point_X(s, t);
    EXPECT_NEAR(dist(x, point_L(s)), 1, 1e-12);
    EXPECT_NEAR(dist(x, point_N(t)), 1, 1e-12);
  }
}

TEST(Params, InvertRoundTrip) {
  const Landmarks lm = build_landmarks(Deg(1.5494));
  const CornerParams cp = corner_params(lm);
  const ParamCoords z = cp.invert_X(point_X(0, 0));
  EXPECT_NEAR(z.s, 0, 1e-9);
  EXPECT_NEAR(z.t, 0, 1e-9);
  const ParamCoords x = cp.invert_X(lm["X"]);
  EXPECT_NEAR(x.s, -lm.theta, 1e-9);
  EXPECT_NEAR(x.t, lm.tau, 1e-9);
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double s = lm.theta * (-1 + 2.0 * i / 19), t = lm.tau * (-1 + 2.0 * j / 19);
      const ParamCoords c = cp.invert_X(point_X(s, t));
      EXPECT_LE(dist(point_X(c.s, c.t), point_X(s, t)), 1e-9);
      EXPECT_NEAR(c.s, s, 1e-9);
      EXPECT_NEAR(c.t, t, 1e-9);
    }
  }
  try {
    cp.invert_X(corner('A'));
    FAIL() << "expected an error";
  } catch (const RangeError& e) {
    EXPECT_STREQ(e.what(), "point outside region R");
  }
}

TEST(Sprague, DegenerateAtZero) {
  const SpragueRegions r = build_sprague_regions(Deg(0));
  EXPECT_NEAR(r.c_s.empty() ? 0.0 : chain_area(r.c_s), 0, 1e-10);
  EXPECT_NEAR(r.e_s.empty() ? 0.0 : chain_area(r.e_s), 0, 1e-10);
  EXPECT_NEAR(chain_area(r.a_s), (2 - 2 / std::sqrt(3.0)) - 0.84413770, 5e-8);
}

TEST(Sprague, CoverAtZero) {
  const BoundaryChain s = build_S(Deg(0));
  EXPECT_NEAR(chain_area(s), 0.84413770, 5e-8);
  int arcs = 0;
  for (const auto& e : s.elements()) arcs += std::holds_alternative<CircArc>(e);
  EXPECT_EQ(arcs, 2);
}

TEST(Sprague, SmallestAtZero) { EXPECT_GT(chain_area(build_S(Deg(1.5))), chain_area(build_S(Deg(0)))); }

TEST(Sprague, AreaIsPalMinusRegions) {
  for (double d : kSampleDegrees) {
    const SpragueRegions r = build_sprague_regions(Deg(d));
    auto area = [](const BoundaryChain& c) { return c.empty() ? 0.0 : chain_area(c); };
    const double expected = chain_area(build_pal(Deg(d)).first) - area(r.c_s) - area(r.e_s) - area(r.a_s);
    EXPECT_NEAR(chain_area(build_S(Deg(d))), expected, 1e-12) << d;
  }
}

TEST(RegionAH, StraightPathForLargeSlant) {
  const CornerParams cp = corner_params(build_landmarks(Deg(8)));
  EXPECT_TRUE(taut_path(cp).straight());
}

TEST(RegionAH, WrapsForSmallSlant) {
  // Near the optimum the chord dips into the circle about L(theta).
  const CornerParams cp = corner_params(build_landmarks(Deg(1.5494)));
  const TautPath p = taut_path(cp);
  ASSERT_FALSE(p.straight());
  EXPECT_NEAR(dist(p.tangent_point, point_L(cp.theta)), 1, 1e-12);
  EXPECT_NEAR(dot(p.end - p.tangent_point, p.tangent_point - point_L(cp.theta)), 0, 1e-12);
}

TEST(RegionAH, InsideParameterRegion) {
  for (double d : {0.5, 1.5494, 4.0, 8.0}) {
    const Landmarks lm = build_landmarks(Deg(d));
    const CornerParams cp = corner_params(lm);
    const BoundaryChain ah = build_region_AH(Deg(d));
    ASSERT_FALSE(ah.empty()) << d;
    const auto pts = sample_boundary(ah, 1000);
    for (Point2 p : pts) EXPECT_TRUE(cp.in_region(invert_X_unchecked(p), 1e-9)) << d;
  }
}

TEST(RegionAH, ImageIsAnInvolution) {
  const Landmarks lm = build_landmarks(Deg(1.5494));
  const CornerParams cp = corner_params(lm);
  const CornerACut cut = corner_a_cut(lm, {});
  EXPECT_GT(chain_area(region_ah(lm, cut)), 0);
  std::vector<Point2> pts;
  for (const auto& e : cut.path.elements()) {
    for (int i = 0; i <= 50; ++i) pts.push_back(point_on(e, i / 50.0));
  }
  for (std::size_t i = 0; i < cut.image.size(); i += 97) pts.push_back(cut.image[i]);
  for (Point2 p : pts) EXPECT_LE(dist(cp.image(cp.image(p)), p), 1e-9);
}

TEST(RegionAH, EmptyAtZero) { EXPECT_TRUE(build_region_AH(Deg(0)).empty()); }

TEST(RegionEH, DefiningArcs) {
  for (double d : {1.0, 1.5494, 3.0, 5.0, 9.0}) {
    Landmarks lm = build_landmarks(Deg(d));
    const CornerECut cut = corner_e_cut(lm, deg_to_rad(d));
    ASSERT_FALSE(cut.empty) << d;
    EXPECT_NEAR(dist(lm["T"], lm["S"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["S"], lm["R"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["T"], lm["B_3"]), 1, 1e-10) << d;
    EXPECT_NEAR(dist(lm["U"], lm["C_3"]), 1, 1e-10) << d;
    EXPECT_LT(distance_to_line(lm["R"], corner('F'), corner('C')), 1e-12);
    EXPECT_LT(distance_to_line(lm["R"], lm["F_2"], lm["F_3"]), 1e-12);
    EXPECT_LT(distance_to_line(lm["S"], corner('C'), corner('B')), 1e-12);
  }
}

TEST(RegionEH, VanishesTowardsTenDegrees) {
  double prev = 1;
  for (double d : {6.0, 8.0, 9.0, 9.9}) {
    const double a = chain_area(build_region_EH(Deg(d)));
    EXPECT_GT(a, 0) << d;
    EXPECT_LT(a, prev) << d;
    prev = a;
  }
  EXPECT_TRUE(build_region_EH(Deg(10)).empty());
  EXPECT_TRUE(build_region_EH(Deg(12)).empty());
}

TEST(RegionEH, SmallerThanAHAtOptimum) {
  const double eh = chain_area(build_region_EH(Deg(1.5494)));
  const double ah = chain_area(build_region_AH(Deg(1.5494)));
  EXPECT_GT(eh, 0);
  EXPECT_LT(eh, ah);
}

TEST(Cover, AreaOrdering) {
  const CoverConstruction c = build_construction(Deg(1.5));
  const double h = chain_area(c.hexagon), p = chain_area(c.pal), s = chain_area(c.sprague), f = chain_area(c.full);
  EXPECT_GT(h, p);
  EXPECT_GT(p, s);
  EXPECT_GT(s, f);
}

TEST(Cover, FullAtOptimum) {
  EXPECT_LE(chain_area(build_cover(Deg(1.5494), CoverStage::Full)), 0.8440935944 + 1e-9);
}

TEST(Cover, FullAtZeroIsSprague) {
  const double full = chain_area(build_cover(Deg(0), CoverStage::Full));
  const double s = chain_area(build_cover(Deg(0), CoverStage::Sprague));
  EXPECT_LE(full, s);
  EXPECT_NEAR(s, 0.84413770, 5e-8);
}

TEST(Cover, FullRejectedFromTenDegrees) {
  try {
    build_cover(Deg(12), CoverStage::Full);
    FAIL() << "expected an error";
  } catch (const RangeError& e) {
    EXPECT_STREQ(e.what(), "E_H undefined; construction limited to σ < 10°");
  }
  EXPECT_NO_THROW(build_cover(Deg(12), CoverStage::Sprague));
}

TEST(Cover, ConvexAndValid) {
  for (double d : {0.0, 0.01, 0.0666, 0.07, 0.5, 1.0, 1.5494, 2.0, 3.0, 5.0, 7.0, 9.0, 9.9, 9.999}) {
    const BoundaryChain h = build_cover(Deg(d), CoverStage::Full);
    EXPECT_TRUE(convexity_check(h)) << d;
    EXPECT_NO_THROW(validate(h)) << d;
  }
}

TEST(Cover, RemovedRegionsAreDisjoint) {
  const CoverConstruction c = build_construction(Deg(1.5494));
  const std::vector<const BoundaryChain*> regions{&c.tri_c, &c.tri_e, &c.c_s, &c.e_s, &c.a_s, &c.a_h, &c.e_h};
  std::vector<ChainLocator> loc;
  for (const auto* r : regions) {
    ASSERT_FALSE(r->empty());
    loc.emplace_back(*r);
  }
  std::mt19937_64 rng(43);
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const BBox b = regions[i]->bbox();
    std::uniform_real_distribution<double> ux(b.xmin, b.xmax), uy(b.ymin, b.ymax);
    int n = 0;
    for (long tries = 0; n < 10000 && tries < 50000000; ++tries) {
      const Point2 p{ux(rng), uy(rng)};
      if (!(loc[i].signed_distance(p) < -1e-12)) continue;
      ++n;
      for (std::size_t j = 0; j < regions.size(); ++j) {
        if (j == i || !regions[j]->bbox().contains(p)) continue;
        EXPECT_GE(loc[j].signed_distance(p), -1e-12) << i << " in " << j;
      }
    }
    EXPECT_EQ(n, 10000) << i;
  }
}

}  // namespace
}  // namespace ucover
