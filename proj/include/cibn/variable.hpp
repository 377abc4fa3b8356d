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

#include <string>
#include <vector>

namespace cibn {

/// A named discrete variable with an ordered list of state labels.
///
/// Boolean variables use the canonical order {"false", "true"}.
/// Integer-ranged variables use contiguous decimal labels from low to high.
struct Variable {
  std::string name;
  std::vector<std::string> states;

  int cardinality() const { return static_cast<int>(states.size()); }

  /// Index of a state label, or -1 if the label is unknown.
  int state_index(const std::string& label) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == label) return static_cast<int>(i);
    return -1;
  }
};

inline Variable boolean_variable(std::string name) {
  return Variable{std::move(name), {"false", "true"}};
}

inline Variable integer_variable(std::string name, int low, int high) {
  Variable v{std::move(name), {}};
  v.states.reserve(static_cast<std::size_t>(high - low + 1));
  for (int k = low; k <= high; ++k) v.states.push_back(std::to_string(k));
  return v;
}

}  // namespace cibn
