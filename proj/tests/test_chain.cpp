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

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ucover/chain.hpp"
#include "ucover/hexagon.hpp"
#include "ucover/isometry.hpp"

namespace ucover {
namespace {

BoundaryChain UnitSquare() {
  const std::array<Point2, 4> p{Point2{0, 0}, Point2{1, 0}, Point2{1, 1}, Point2{0, 1}};
  return polygon_chain(p);
}

BoundaryChain Circle(Point2 c, double r, int pieces) {
  BoundaryChain out;
  for (int i = 0; i < pieces; ++i) {
    out.push_back(CircArc{c, r, kTwoPi * i / pieces, kTwoPi * (i + 1) / pieces, Orientation::ccw});
  }
  return out;
}

// Lens of two unit arcs: a convex chain with both arcs and corners.
BoundaryChain Lens() {
  BoundaryChain out;
  const Point2 top{0.5, std::sqrt(3.0) / 2}, bottom{0.5, -std::sqrt(3.0) / 2};
  out.push_back(CircArc::minor({0, 0}, 1, bottom, top));
  out.push_back(CircArc::minor({1, 0}, 1, top, bottom));
  return out;
}

TEST(ChainArea, UnitSquare) { EXPECT_NEAR(chain_area(UnitSquare()), 1.0, 1e-15); }

TEST(ChainArea, CircleFromFourArcs) { EXPECT_NEAR(chain_area(Circle({0.3, -0.2}, 1, 4)), kPi, 1e-12); }

TEST(ChainArea, Hexagon) { EXPECT_NEAR(chain_area(hexagon::chain()), 0.8660254038, 1e-10); }

TEST(ChainArea, Lens) {
  EXPECT_NEAR(chain_area(Lens()), 2 * kPi / 3 - std::sqrt(3.0) / 2, 1e-14);
}

TEST(ChainArea, OpenChainIsInvalid) {
  BoundaryChain c = UnitSquare();
  BoundaryChain open(std::vector<Element>(c.elements().begin(), c.elements().end() - 1));
  try {
    chain_area(open);
    FAIL() << "expected an error";
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "invalid chain");
  }
}

TEST(ChainArea, BowTieIsInvalid) {
  const std::array<Point2, 4> p{Point2{0, 0}, Point2{1, 1}, Point2{1, 0}, Point2{0, 1}};
  EXPECT_FALSE(is_simple(polygon_chain(p)));
  EXPECT_THROW(chain_area(polygon_chain(p)), GeometryError);
}

TEST(ChainArea, ReversalNegatesSignedArea) {
  const BoundaryChain h = hexagon::chain();
  EXPECT_NEAR(signed_area(reversed(h)), -signed_area(h), 1e-15);
  EXPECT_NEAR(signed_area(reversed(Lens())), -signed_area(Lens()), 1e-15);
}

TEST(ChainArea, InvariantUnderIsometries) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  for (const BoundaryChain& c : {hexagon::chain(), Lens(), Circle({0, 0}, 0.7, 3), UnitSquare()}) {
    const double a = chain_area(c);
    for (int i = 0; i < 20; ++i) {
      const Isometry iso{u(rng), {u(rng), u(rng)}, i % 2 == 1};
      const BoundaryChain moved = apply_isometry(iso, c);
      EXPECT_NEAR(chain_area(moved), a, 1e-12);
      EXPECT_GT(signed_area(moved), 0);  // reflections keep the orientation
    }
  }
}

TEST(ChainArea, IdentityIsometryKeepsChain) {
  const BoundaryChain c = apply_isometry(Isometry::identity(), Lens());
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(dist(start_of(c[0]), start_of(Lens()[0])), 0, 1e-15);
}

TEST(Closure, HexagonAndCircleAreClosed) {
  EXPECT_TRUE(is_closed(hexagon::chain()));
  EXPECT_TRUE(is_closed(Circle({0, 0}, 1, 3)));
  EXPECT_NO_THROW(validate(Lens()));
  EXPECT_THROW(validate(reversed(Lens())), GeometryError);
}

TEST(PointInChain, HexagonExamples) {
  const BoundaryChain h = hexagon::chain();
  EXPECT_EQ(point_in_chain(h, {0, 0}), Location::inside);
  EXPECT_EQ(point_in_chain(h, {0, 1 / std::sqrt(3.0)}), Location::boundary);
  EXPECT_EQ(point_in_chain(h, {0, 1}), Location::outside);
}

TEST(PointInChain, AgreesWithHalfPlanesForHexagon) {
  const BoundaryChain h = hexagon::chain();
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 2000; ++i) {
    const Point2 p{u(rng), u(rng)};
    double worst = -1;
    for (int k = 0; k < 6; ++k) worst = std::max(worst, dot(unit_from_angle(k * kPi / 3), p) - 0.5);
    if (std::abs(worst) < 1e-9) continue;
    EXPECT_EQ(point_in_chain(h, p) == Location::inside, worst < 0);
  }
}

TEST(PointInChain, AgreesWithDisksForLens) {
  const BoundaryChain c = Lens();
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1, 1.5);
  for (int i = 0; i < 2000; ++i) {
    const Point2 p{u(rng), u(rng)};
    const double m = std::max(dist(p, {0, 0}), dist(p, {1, 0})) - 1;
    if (std::abs(m) < 1e-9) continue;
    EXPECT_EQ(point_in_chain(c, p) == Location::inside, m < 0);
  }
}

TEST(PointInChain, MidpointsOfInsidePointsStayInside) {
  const BoundaryChain c = Lens();
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.2, 1.2);
  std::vector<Point2> inside;
  while (inside.size() < 60) {
    const Point2 p{u(rng), u(rng)};
    if (point_in_chain(c, p) == Location::inside) inside.push_back(p);
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      EXPECT_EQ(point_in_chain(c, midpoint(inside[i], inside[j])), Location::inside);
    }
  }
}

TEST(Convexity, Examples) {
  EXPECT_TRUE(convexity_check(hexagon::chain()));
  EXPECT_TRUE(convexity_check(Circle({0, 0}, 1, 4)));
  EXPECT_TRUE(convexity_check(Lens()));
  std::array<Point2, 6> dented{hexagon::corner('A'), hexagon::corner('F'), hexagon::corner('E'),
                               hexagon::corner('D'), hexagon::corner('C'), hexagon::corner('B')};
  dented[1] = 0.2 * dented[1];  // push corner F inwards
  EXPECT_FALSE(convexity_check(polygon_chain(dented)));
}

TEST(Convexity, ClockwiseArcIsNotConvex) {
  BoundaryChain c;
  const Point2 a{0, 0}, b{1, 0};
  c.push_back(LineSeg{a, b});
  // An arc bulging into the region.
  c.push_back(CircArc::minor({0.5, 1.0}, std::sqrt(1.25), b, a));
  EXPECT_FALSE(convexity_check(c));
}

TEST(Support, MatchesSampledMaximum) {
  const BoundaryChain c = Lens();
  const auto pts = sample_boundary(c, 20000);
  for (int k = 0; k < 36; ++k) {
    const Vec2 u = unit_from_angle(kTwoPi * k / 36);
    double h = -1e9;
    for (Point2 p : pts) h = std::max(h, dot(p, u));
    EXPECT_GE(support(c, u), h - 1e-12);
    EXPECT_LE(support(c, u), h + 1e-6);
  }
}

TEST(Arcs, SweepAndEndpoints) {
  const CircArc a = CircArc::minor({0, 0}, 2, {2, 0}, {0, 2});
  EXPECT_EQ(a.orientation, Orientation::ccw);
  EXPECT_NEAR(a.sweep(), kPi / 2, 1e-15);
  EXPECT_NEAR(a.reversed().sweep(), -kPi / 2, 1e-15);
  EXPECT_NEAR(a.length(), kPi, 1e-15);
  EXPECT_THROW(CircArc::between({0, 0}, 1, {2, 0}, {0, 1}, Orientation::ccw), GeometryError);
}

}  // namespace
}  // namespace ucover
