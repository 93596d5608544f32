// Copyright 2026 The gmacwt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <string>

#include "gmacwt/model.hpp"

namespace gmacwt::detail {

// Fixed-point rendering for CSV and report output.  snprintf keeps the byte
// stream identical across platforms (std::to_string has locale quirks and
// no precision control).
inline std::string format_fixed(double x, int precision) {
  if (x == 0.0) x = 0.0;  // normalize -0.0 so output never flips sign on noise
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, x);
  return buffer;
}

// Renders a coalition as its 1-based member list ("1;3;4"), the way rows are
// labeled in exported tables.
inline std::string member_list(Coalition s, int count) {
  std::string out;
  for (int l = 0; l < count; ++l) {
    if (!coalition_contains(s, l)) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(l + 1);
  }
  return out;
}

}  // namespace gmacwt::detail
