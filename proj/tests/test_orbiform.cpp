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
#include <vector>

#include <gtest/gtest.h>

#include "ucover/orbiform.hpp"

namespace ucover {
namespace {

double Diameter(const std::vector<Point2>& pts) {
  double d = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, dist(pts[i], pts[j]));
  }
  return d;
}

// Second difference of the support function.
double CurvatureFd(const Orbiform& b, double phi) {
  const double h = 1e-4;
  return b.support(phi) + (b.support(phi + h) - 2 * b.support(phi) + b.support(phi - h)) / (h * h);
}

TEST(Reuleaux, RegularTriangleArea) {
  EXPECT_NEAR(regular_reuleaux(3).area(), (kPi - std::sqrt(3.0)) / 2, 1e-12);
  EXPECT_NEAR(regular_reuleaux(3).area(), 0.7047709230, 1e-9);
}

TEST(Reuleaux, EveryTriangleIsRegular) {
  // A width-1 Reuleaux triangle is determined up to isometry.
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    EXPECT_NEAR(reuleaux_polygon(3, seed).area(), (kPi - std::sqrt(3.0)) / 2, 1e-12) << seed;
  }
}

TEST(Reuleaux, RegularTriangleDiameter) {
  EXPECT_NEAR(Diameter(regular_reuleaux(3).samples(10000)), 1.0, 1e-9);
}

TEST(Reuleaux, ConstantWidthForRandomPolygons) {
  for (std::size_t n : {3u, 5u, 7u, 9u, 11u}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Orbiform b = reuleaux_polygon(n, seed);
      EXPECT_LE(b.width_error(360), 1e-10) << n << ' ' << seed;
      EXPECT_TRUE(convexity_check(b.chain())) << n << ' ' << seed;
      EXPECT_EQ(b.chain().size(), n);
    }
  }
}

TEST(Reuleaux, AreaBetweenTriangleAndDisk) {
  for (std::size_t n : {5u, 7u, 9u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const double a = reuleaux_polygon(n, seed).area();
      EXPECT_GT(a, (kPi - std::sqrt(3.0)) / 2);
      EXPECT_LT(a, kPi / 4);
    }
  }
}

TEST(Reuleaux, DeterministicInSeed) {
  const auto a = reuleaux_polygon(7, 5).samples(64), b = reuleaux_polygon(7, 5).samples(64);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(dist(a[i], b[i]), 0.0);
  EXPECT_GT(dist(reuleaux_polygon(7, 6).samples(64)[0], a[0]), 0.0);
}

TEST(Reuleaux, EvenOrSmallCountsRejected) {
  EXPECT_THROW(reuleaux_polygon(4, 1), RangeError);
  EXPECT_THROW(reuleaux_polygon(1, 1), RangeError);
  EXPECT_THROW(regular_reuleaux(6), RangeError);
}

TEST(Reuleaux, BadStarEdgesRejected) {
  ReuleauxPolygon p{{{0, 0}, {1, 0}, {0.5, 0.5}}};
  EXPECT_THROW(Orbiform::from_reuleaux(p), GeometryError);
}

TEST(SupportBodyTest, EmptyListIsTheDisk) {
  const Orbiform d = support_body({});
  EXPECT_NEAR(d.area(), kPi / 4, 1e-12);
  EXPECT_LE(d.width_error(), 1e-15);
  for (int i = 0; i < 36; ++i) {
    const double phi = kTwoPi * i / 36;
    const Point2 p = d.boundary_point(phi);
    EXPECT_NEAR(p.x, 0.5 * std::cos(phi), 1e-15);
    EXPECT_NEAR(p.y, 0.5 * std::sin(phi), 1e-15);
  }
}

TEST(SupportBodyTest, SingleHarmonicHasConstantWidth) {
  const Orbiform b = support_body({{3, 0.02, 0.4}});
  EXPECT_LE(b.width_error(360), 1e-10);
  EXPECT_GE(b.min_radius_of_curvature(4096), 0);
}

TEST(SupportBodyTest, BoundaryPointMatchesSupportFormula) {
  const Orbiform b = support_body({{3, 0.015, 0.2}, {7, 0.002, 1.1}});
  const double e = 1e-6;
  for (int i = 0; i < 72; ++i) {
    const double phi = kTwoPi * i / 72;
    const double h = b.support(phi), dh = (b.support(phi + e) - b.support(phi - e)) / (2 * e);
    const Point2 p = b.boundary_point(phi);
    EXPECT_NEAR(p.x, h * std::cos(phi) - dh * std::sin(phi), 1e-9);
    EXPECT_NEAR(p.y, h * std::sin(phi) + dh * std::cos(phi), 1e-9);
    // The point lies on the supporting line.
    EXPECT_NEAR(dot(p, unit_from_angle(phi)), h, 1e-15);
  }
}

TEST(SupportBodyTest, AreaMatchesPolygonOfSamples) {
  const Orbiform b = support_body({{5, 0.01, 0.3}});
  const auto pts = b.samples(20000);
  double a = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) a += cross(pts[i], pts[(i + 1) % pts.size()]);
  EXPECT_NEAR(b.area(), a / 2, 1e-7);
}

TEST(SupportBodyTest, AmplitudesTooLarge) {
  try {
    support_body({{3, 0.2, 0}});
    FAIL() << "expected an error";
  } catch (const RangeError& e) {
    EXPECT_STREQ(e.what(), "amplitudes too large");
  }
  EXPECT_THROW(support_body({{4, 0.01, 0}}), RangeError);
  EXPECT_THROW(support_body({{1, 0.01, 0}}), RangeError);
}

TEST(SupportBodyTest, RandomBodiesAreValid) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Orbiform b = random_support_body(seed);
    EXPECT_LE(b.width_error(360), 1e-10) << seed;
    for (int i = 0; i < 360; ++i) EXPECT_GE(CurvatureFd(b, kTwoPi * i / 360), -1e-9) << seed;
    EXPECT_GE(b.min_radius_of_curvature(4096), 0.02) << seed;
    EXPECT_NEAR(Diameter(b.samples(720)), 1.0, 1e-4) << seed;
  }
}

TEST(Mirror, KeepsWidthAndArea) {
  for (const Orbiform& b : {reuleaux_polygon(5, 3), random_support_body(8)}) {
    const Orbiform m = b.mirrored();
    EXPECT_NEAR(m.area(), b.area(), 1e-12);
    EXPECT_LE(m.width_error(), 1e-10);
    for (int i = 0; i < 36; ++i) {
      const double phi = kTwoPi * i / 36;
      EXPECT_NEAR(m.support(phi), b.support(-phi), 1e-12);
    }
  }
}

}  // namespace
}  // namespace ucover
