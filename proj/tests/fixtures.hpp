// Copyright 2026 The revgreedy Authors.
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

#include <string>
#include <vector>

#include "revgreedy/metric_space.hpp"

namespace revgreedy::testing {

// Three unit-weight points a, b, c on a line with gaps 1 and 1.
inline MetricSpace line3() {
  return MetricSpace::FromMatrix({{1.0, "a"}, {1.0, "b"}, {1.0, "c"}},
                                 {0, 1, 2,  //
                                  1, 0, 1,  //
                                  2, 1, 0},
                                 false);
}

// d(a,c) = 5 but d(a,b) + d(b,c) = 2.
inline MetricSpace bad_triangle() {
  return MetricSpace::FromMatrix({{1.0, "a"}, {1.0, "b"}, {1.0, "c"}},
                                 {0, 1, 5,  //
                                  1, 0, 1,  //
                                  5, 1, 0},
                                 false);
}

inline PointId star_x(int i) { return static_cast<PointId>(i); }
inline PointId star_y(int j, int i) { return static_cast<PointId>(j + i); }

inline FacilitySet star_ys(int j) {
  std::vector<PointId> ys;
  for (int i = 1; i <= j; ++i) ys.push_back(star_y(j, i));
  return FacilitySet(ys);
}

inline FacilitySet ids(PointId first, PointId last) {
  std::vector<PointId> out;
  for (PointId id = first; id <= last; ++id) out.push_back(id);
  return FacilitySet(out);
}

}  // namespace revgreedy::testing
