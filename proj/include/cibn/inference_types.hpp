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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cibn {

/// Observed states, keyed by variable name. The ordered map keeps iteration
/// (and therefore every downstream computation) deterministic.
using Evidence = std::map<std::string, std::string>;

/// A normalized probability vector over one variable's states.
struct Distribution {
  std::string variable;
  std::vector<std::string> states;
  std::vector<double> probs;
};

/// Work counters for one elimination run.
///
/// multiply_add_count totals the scalar multiplications and additions spent
/// in sum-product steps and the final join. max_factor_entries is the
/// largest factor table materialized by the engine, i.e. the elimination
/// results and the final joined factor; input tables are only read through,
/// never copied into a product, because each step fuses the factor product
/// with the marginalization of its variable.
struct CostReport {
  std::uint64_t multiply_add_count = 0;
  std::uint64_t max_factor_entries = 0;
  std::vector<std::string> elimination_order;
};

}  // namespace cibn
