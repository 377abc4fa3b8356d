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
#include <variant>
#include <vector>

#include "cibn/encoding.hpp"
#include "cibn/error.hpp"
#include "cibn/noisy_adder.hpp"
#include "cibn/noisy_or.hpp"

namespace cibn {

using FamilySpec = std::variant<NoisyOrSpec, NoisyAdderSpec>;

inline int family_cause_count(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return s.n; }, spec);
}

inline bool family_is_adder(const FamilySpec& spec) {
  return std::holds_alternative<NoisyAdderSpec>(spec);
}

/// The encodings a family supports; only the adder has an explicit-sum form.
inline std::vector<Encoding> family_encodings(const FamilySpec& spec) {
  if (family_is_adder(spec))
    return {Encoding::atemporal, Encoding::temporal, Encoding::explicit_sum};
  return {Encoding::atemporal, Encoding::temporal};
}

inline BeliefNetwork build_family(const FamilySpec& spec, Encoding encoding) {
  if (const auto* gate = std::get_if<NoisyOrSpec>(&spec)) {
    switch (encoding) {
      case Encoding::atemporal: return build_atemporal_noisy_or(*gate);
      case Encoding::temporal: return build_temporal_noisy_or(*gate);
      case Encoding::explicit_sum:
        throw SpecError("noisy-or has no explicit-sum encoding");
    }
  }
  const auto& adder = std::get<NoisyAdderSpec>(spec);
  switch (encoding) {
    case Encoding::atemporal: return build_atemporal_noisy_adder(adder);
    case Encoding::temporal: return build_temporal_noisy_adder(adder);
    case Encoding::explicit_sum: return build_explicit_temporal_adder(adder);
  }
  throw SpecError("unknown encoding");
}

inline std::string family_effect_name(const FamilySpec& spec, Encoding encoding) {
  const int n = family_cause_count(spec);
  return family_is_adder(spec) ? noisy_adder_effect_name(encoding, n)
                               : noisy_or_effect_name(encoding, n);
}

}  // namespace cibn
