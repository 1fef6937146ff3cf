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

#ifndef UCOVER_LANDMARKS_HPP_
#define UCOVER_LANDMARKS_HPP_

#include <map>
#include <string>

#include "ucover/geometry.hpp"

namespace ucover {

// Named construction points for one slant angle. Hexagon corners are A_1 ..
// F_1; cut endpoints carry subscripts 2 and 3 (C_3 on edge BC, C_2 on CD,
// E_3 on DE, E_2 on EF, F_3 on EF, F_2 on FA, B_3 on AB, B_2 on BC).
class Landmarks {
 public:
  void set(const std::string& label, Point2 p) { points_[label] = p; }
  bool contains(const std::string& label) const { return points_.count(label) != 0; }
  Point2 at(const std::string& label) const {
    const auto it = points_.find(label);
    if (it == points_.end()) throw RangeError("unknown landmark " + label);
    return it->second;
  }
  Point2 operator[](const std::string& label) const { return at(label); }
  const std::map<std::string, Point2>& points() const { return points_; }

  double theta = 0.0;
  double tau = 0.0;

 private:
  std::map<std::string, Point2> points_;
};

}  // namespace ucover

#endif  // UCOVER_LANDMARKS_HPP_
