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

#include <cstddef>
#include <string>
#include <vector>

#include "cibn/encoding.hpp"
#include "cibn/error.hpp"
#include "cibn/network.hpp"

namespace cibn {

/// Parameters of a noisy OR-gate: n boolean causes, activation probability
/// q_j for each present cause, a leak probability q_0 for the effect firing
/// with every cause absent, and a prior p(c_j = true) per cause.
struct NoisyOrSpec {
  int n = 0;
  std::vector<double> q;
  double leak = 0.0;
  std::vector<double> cause_priors;

  void check() const {
    if (n < 1) throw SpecError("noisy-or spec: cause count must be >= 1");
    if (static_cast<int>(q.size()) != n)
      throw SpecError("noisy-or spec: expected " + std::to_string(n) + " q values");
    if (static_cast<int>(cause_priors.size()) != n)
      throw SpecError("noisy-or spec: expected " + std::to_string(n) + " cause priors");
    auto unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!unit(leak)) throw SpecError("noisy-or spec: leak outside [0,1]");
    for (double v : q)
      if (!unit(v)) throw SpecError("noisy-or spec: q outside [0,1]");
    for (double v : cause_priors)
      if (!unit(v)) throw SpecError("noisy-or spec: cause prior outside [0,1]");
  }
};

/// Largest table a gate builder will materialize (the deterministic
/// combiner's table grows exponentially in the cause count).
inline constexpr std::size_t kMaxBuiltTableEntries = std::size_t{1} << 24;

namespace detail {

inline void add_prior(BeliefNetwork& net, const Variable& v, std::vector<double> probs) {
  net.variables.push_back(v);
  net.tables.push_back({v.name, {}, std::move(probs)});
}

}  // namespace detail

/// Gate encoding: causes c0..cn (c0 is the always-on leak cause), boolean
/// contributions i0..in with p(ij=true|cj=true)=q_j and p(ij=true|cj=false)=0,
/// and the deterministic node e = i0 v ... v in.
inline BeliefNetwork build_atemporal_noisy_or(const NoisyOrSpec& spec) {
  spec.check();
  const int n = spec.n;
  BeliefNetwork net;

  detail::add_prior(net, boolean_variable("c0"), {0.0, 1.0});  // clamped on
  for (int j = 1; j <= n; ++j)
    detail::add_prior(net, boolean_variable("c" + std::to_string(j)),
                      {1.0 - spec.cause_priors[j - 1], spec.cause_priors[j - 1]});

  for (int j = 0; j <= n; ++j) {
    const double qj = j == 0 ? spec.leak : spec.q[j - 1];
    Variable v = boolean_variable("i" + std::to_string(j));
    net.variables.push_back(v);
    net.tables.push_back({v.name, {"c" + std::to_string(j)}, {1.0, 0.0, 1.0 - qj, qj}});
  }

  const std::size_t rows = std::size_t{1} << (n + 1);
  if (rows * 2 > kMaxBuiltTableEntries)
    throw CapError("atemporal combiner table too large for n = " + std::to_string(n));
  Variable effect = boolean_variable("e");
  ConditionalTable t{effect.name, {}, {}};
  for (int j = 0; j <= n; ++j) t.parents.push_back("i" + std::to_string(j));
  t.probs.resize(rows * 2);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool fired = r != 0;  // any parent true; rightmost parent is bit 0
    t.probs[r * 2 + 0] = fired ? 0.0 : 1.0;
    t.probs[r * 2 + 1] = fired ? 1.0 : 0.0;
  }
  net.variables.push_back(effect);
  net.tables.push_back(std::move(t));
  return net;
}

/// Chain encoding: e0 carries the leak, each step e_j absorbs cause c_j with
/// p(ej=t|e_{j-1}=t) = 1, p(ej=t|f,f) = 0 and p(ej=t|f, cj=t) = q_j.
inline BeliefNetwork build_temporal_noisy_or(const NoisyOrSpec& spec) {
  spec.check();
  const int n = spec.n;
  BeliefNetwork net;

  for (int j = 1; j <= n; ++j)
    detail::add_prior(net, boolean_variable("c" + std::to_string(j)),
                      {1.0 - spec.cause_priors[j - 1], spec.cause_priors[j - 1]});
  detail::add_prior(net, boolean_variable("e0"), {1.0 - spec.leak, spec.leak});

  for (int j = 1; j <= n; ++j) {
    const double qj = spec.q[j - 1];
    Variable v = boolean_variable("e" + std::to_string(j));
    net.variables.push_back(v);
    // Rows over (e_{j-1}, c_j), c_j fastest: ff, ft, tf, tt.
    net.tables.push_back({v.name,
                          {"e" + std::to_string(j - 1), "c" + std::to_string(j)},
                          {1.0, 0.0, 1.0 - qj, qj, 0.0, 1.0, 0.0, 1.0}});
  }
  return net;
}

/// Two chain effects driven by one shared cause set; the layout in which
/// undirected cycles survive the chain transformation. Used to exercise the
/// cycle detector. Both chains reuse the spec's q values.
inline BeliefNetwork build_two_effect_temporal_noisy_or(const NoisyOrSpec& spec) {
  spec.check();
  const int n = spec.n;
  BeliefNetwork net;

  for (int j = 1; j <= n; ++j)
    detail::add_prior(net, boolean_variable("c" + std::to_string(j)),
                      {1.0 - spec.cause_priors[j - 1], spec.cause_priors[j - 1]});
  for (const std::string prefix : {"a", "b"}) {
    detail::add_prior(net, boolean_variable(prefix + "0"), {1.0 - spec.leak, spec.leak});
    for (int j = 1; j <= n; ++j) {
      const double qj = spec.q[j - 1];
      Variable v = boolean_variable(prefix + std::to_string(j));
      net.variables.push_back(v);
      net.tables.push_back({v.name,
                            {prefix + std::to_string(j - 1), "c" + std::to_string(j)},
                            {1.0, 0.0, 1.0 - qj, qj, 0.0, 1.0, 0.0, 1.0}});
    }
  }
  return net;
}

inline std::string noisy_or_effect_name(Encoding encoding, int n) {
  if (encoding == Encoding::atemporal) return "e";
  if (encoding == Encoding::temporal) return "e" + std::to_string(n);
  throw SpecError("noisy-or has no explicit-sum encoding");
}

}  // namespace cibn
