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

#ifndef UCOVER_REGRESSION_HPP_
#define UCOVER_REGRESSION_HPP_

// Seeded corpus of constant-width bodies and the per-body covering check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "ucover/case_rules.hpp"
#include "ucover/fit.hpp"
#include "ucover/orbiform.hpp"
#include "ucover/slant.hpp"

namespace ucover {

struct CorpusBody {
  std::uint64_t seed = 0;
  std::string type;   // "reuleaux" or "support"
  std::size_t n = 0;  // vertex count for Reuleaux polygons
  Orbiform body;
};

// Body i of the corpus started at `base`: even indices are Reuleaux polygons
// cycling through 3, 5, 7, 9 vertices, odd ones are support bodies.
inline CorpusBody corpus_body(std::uint64_t base, std::size_t i) {
  static constexpr std::array<std::size_t, 4> kCounts{3, 5, 7, 9};
  const std::uint64_t seed = base + i;
  if (i % 2 == 0) {
    const std::size_t n = kCounts[(i / 2) % kCounts.size()];
    return {seed, "reuleaux", n, reuleaux_polygon(n, seed)};
  }
  return {seed, "support", 0, random_support_body(seed)};
}

struct BodyVerdict {
  FitResult fit;     // into H(sigma)
  CaseReport cases;  // inside S(sigma)
  bool fits(double tol) const { return fit.success(tol); }
};

class Verifier {
 public:
  explicit Verifier(SlantAngle sigma, FitOptions fit_opt = {}, CaseOptions case_opt = {})
      : cases_(sigma, case_opt, fit_opt), h_fit_(cases_.construction().full, fit_opt) {}

  const CoverConstruction& construction() const { return cases_.construction(); }
  const FitOptions& fit_options() const { return h_fit_.options(); }

  BodyVerdict run(const Orbiform& body) const { return {h_fit_.fit(body), cases_.check(body)}; }

 private:
  CaseChecker cases_;
  FitContext h_fit_;
};

}  // namespace ucover

#endif  // UCOVER_REGRESSION_HPP_
