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

#ifndef UCOVER_UCOVER_HPP_
#define UCOVER_UCOVER_HPP_

#include "ucover/area.hpp"
#include "ucover/case_rules.hpp"
#include "ucover/chain.hpp"
#include "ucover/construction.hpp"
#include "ucover/fit.hpp"
#include "ucover/geometry.hpp"
#include "ucover/hexagon.hpp"
#include "ucover/io.hpp"
#include "ucover/isometry.hpp"
#include "ucover/landmarks.hpp"
#include "ucover/orbiform.hpp"
#include "ucover/regression.hpp"
#include "ucover/slant.hpp"

#endif  // UCOVER_UCOVER_HPP_
