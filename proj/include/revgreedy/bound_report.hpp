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

namespace revgreedy {

// Outcome of a single inequality or axiom check. `holds` is decided with the
// tolerance of the space the check ran on (see tolerance_for()).
struct BoundReport {
  std::string check;
  bool holds = true;
  std::string witness;
  double lhs = 0.0;
  double rhs = 0.0;

  double slack() const { return rhs - lhs; }
};

}  // namespace revgreedy
