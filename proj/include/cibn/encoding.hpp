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

#include "cibn/error.hpp"

namespace cibn {

/// How a causal-independence family is laid out as a network.
///
/// atemporal: per-cause contribution variables feeding one deterministic
///     combining node. temporal: a chain absorbing one cause per step.
/// explicit_sum: the chain with the contribution variables reintroduced and
///     the combining function spelled out as deterministic sum nodes.
enum class Encoding { atemporal, temporal, explicit_sum };

inline std::string to_string(Encoding e) {
  switch (e) {
    case Encoding::atemporal: return "atemporal";
    case Encoding::temporal: return "temporal";
    case Encoding::explicit_sum: return "explicit";
  }
  return "?";
}

inline Encoding encoding_from_string(const std::string& s) {
  if (s == "atemporal") return Encoding::atemporal;
  if (s == "temporal") return Encoding::temporal;
  if (s == "explicit") return Encoding::explicit_sum;
  throw SpecError("unknown encoding " + s + " (expected atemporal|temporal|explicit)");
}

}  // namespace cibn
