// Copyright 2026 The cibn Authors
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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace cibn {

/// Tolerance used when checking that conditional rows are normalized.
inline constexpr double kRowSumTolerance = 1e-9;

/// A dense conditional probability table.
///
/// `probs` holds one row per combination of parent states, in row-major
/// order over the declared parent list with the rightmost parent varying
/// fastest. Each row has one entry per child state, in child state order.
/// A parentless variable has a single row: its marginal distribution.
struct ConditionalTable {
  std::string child;
  std::vector<std::string> parents;
  std::vector<double> probs;

  /// True iff every row has exactly one entry equal to 1.
  bool deterministic(int child_card) const {
    if (child_card <= 0 || probs.size() % child_card != 0) return false;
    for (std::size_t r = 0; r * child_card < probs.size(); ++r) {
      int ones = 0;
      for (int s = 0; s < child_card; ++s) {
        double p = probs[r * child_card + s];
        if (p == 1.0) ++ones;
        else if (p != 0.0) return false;
      }
      if (ones != 1) return false;
    }
    return true;
  }
};

}  // namespace cibn
