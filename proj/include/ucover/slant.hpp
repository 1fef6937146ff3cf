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

#ifndef UCOVER_SLANT_HPP_
#define UCOVER_SLANT_HPP_

#include <cmath>
#include <sstream>
#include <string>

#include "ucover/geometry.hpp"

namespace ucover {

// Slant covers exist for sigma in [0, 30 deg); the corner-E reduction only
// below 10 deg.
inline constexpr double kSlantLimit = kPi / 6.0;
inline constexpr double kFullStageLimit = kPi / 18.0;

class SlantAngle {
 public:
  explicit SlantAngle(double radians) : radians_(radians) {
    if (!std::isfinite(radians) || radians < 0.0 || radians >= kSlantLimit) {
      std::ostringstream msg;
      msg << "slant angle " << rad_to_deg(radians) << " deg outside [0, 30) deg";
      throw RangeError(msg.str());
    }
  }
  static SlantAngle from_degrees(double deg) { return SlantAngle(deg_to_rad(deg)); }

  double radians() const { return radians_; }
  double degrees() const { return rad_to_deg(radians_); }
  bool admits_full() const { return radians_ < kFullStageLimit; }

 private:
  double radians_;
};

// Pal is the hexagon with corners C and E cut; Sprague removes C_S, E_S and
// A_S from it; Full additionally removes A_H and E_H.
enum class CoverStage { Hexagon, Pal, Sprague, Full };

inline std::string to_string(CoverStage s) {
  switch (s) {
    case CoverStage::Hexagon: return "hexagon";
    case CoverStage::Pal: return "pal";
    case CoverStage::Sprague: return "sprague";
    case CoverStage::Full: return "full";
  }
  return "unknown";
}

inline CoverStage stage_from_string(const std::string& s) {
  if (s == "hexagon") return CoverStage::Hexagon;
  if (s == "pal") return CoverStage::Pal;
  if (s == "sprague") return CoverStage::Sprague;
  if (s == "full") return CoverStage::Full;
  throw RangeError("unknown stage '" + s + "' (expected hexagon, pal, sprague or full)");
}

}  // namespace ucover

#endif  // UCOVER_SLANT_HPP_
