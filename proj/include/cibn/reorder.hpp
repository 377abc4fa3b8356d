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

#include <set>
#include <string>
#include <vector>

#include "cibn/error.hpp"
#include "cibn/family.hpp"

namespace cibn {

/// Permutation of cause indices 1..n that moves the causes a case series
/// will observe to the end of the chain, so the marginal over everything
/// before them is computed once. Both blocks keep their relative order.
/// Returned as the original index for each new position.
inline std::vector<int> reorder_causes(int n, const std::set<int>& evidence_causes) {
  for (int j : evidence_causes)
    if (j < 1 || j > n)
      throw SpecError("cause index " + std::to_string(j) + " out of range 1.." +
                      std::to_string(n));
  std::vector<int> perm;
  perm.reserve(n);
  for (int j = 1; j <= n; ++j)
    if (!evidence_causes.count(j)) perm.push_back(j);
  for (int j = 1; j <= n; ++j)
    if (evidence_causes.count(j)) perm.push_back(j);
  return perm;
}

inline std::vector<int> reorder_causes(const FamilySpec& spec,
                                       const std::set<int>& evidence_causes) {
  return reorder_causes(family_cause_count(spec), evidence_causes);
}

namespace detail {

inline void check_permutation(int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n)
    throw SpecError("malformed permutation: expected " + std::to_string(n) + " entries");
  std::vector<char> seen(n + 1, 0);
  for (int j : perm) {
    if (j < 1 || j > n || seen[j]) throw SpecError("malformed permutation");
    seen[j] = 1;
  }
}

}  // namespace detail

/// Reindexes a spec's per-cause parameters: new position p takes the
/// parameters of original cause perm[p]. Commutativity of the combining
/// function makes the effect distribution and index-matched posteriors
/// invariant under this.
inline NoisyOrSpec apply_permutation(const NoisyOrSpec& spec, const std::vector<int>& perm) {
  detail::check_permutation(spec.n, perm);
  NoisyOrSpec out = spec;
  for (int p = 0; p < spec.n; ++p) {
    out.q[p] = spec.q[perm[p] - 1];
    out.cause_priors[p] = spec.cause_priors[perm[p] - 1];
  }
  return out;
}

inline NoisyAdderSpec apply_permutation(const NoisyAdderSpec& spec,
                                        const std::vector<int>& perm) {
  detail::check_permutation(spec.n, perm);
  NoisyAdderSpec out = spec;
  for (int p = 0; p < spec.n; ++p) {
    out.q[p] = spec.q[perm[p] - 1];
    out.cause_priors[p] = spec.cause_priors[perm[p] - 1];
  }
  return out;
}

inline FamilySpec apply_permutation(const FamilySpec& spec, const std::vector<int>& perm) {
  if (const auto* gate = std::get_if<NoisyOrSpec>(&spec))
    return apply_permutation(*gate, perm);
  return apply_permutation(std::get<NoisyAdderSpec>(spec), perm);
}

}  // namespace cibn
