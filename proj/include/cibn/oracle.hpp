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

#include "cibn/error.hpp"
#include "cibn/inference_types.hpp"
#include "cibn/network.hpp"

namespace cibn {

/// Default ceiling on the joint state space enumerated by the oracle.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

struct MarginalSet {
  std::map<std::string, Distribution> marginals;
  double evidence_probability = 1.0;
};

namespace detail {

struct Enumerator {
  const CompiledNetwork& net;
  std::vector<int> observed;              // state per var, -1 unobserved
  std::vector<std::vector<std::size_t>> parent_strides;
  std::vector<int> assign;
  std::vector<int> queries;
  std::vector<std::vector<double>> acc;   // per query var, per state
  double total = 0.0;

  explicit Enumerator(const CompiledNetwork& n) : net(n) {
    const int count = net.size();
    observed.assign(count, -1);
    assign.assign(count, 0);
    parent_strides.resize(count);
    for (int v = 0; v < count; ++v) {
      std::size_t stride = static_cast<std::size_t>(net.cards[v]);
      auto& ps = parent_strides[v];
      ps.assign(net.parents[v].size(), 0);
      for (int d = static_cast<int>(ps.size()) - 1; d >= 0; --d) {
        ps[d] = stride;
        stride *= static_cast<std::size_t>(net.cards[net.parents[v][d]]);
      }
    }
  }

  void run(int depth, double weight) {
    if (depth == net.size()) {
      total += weight;
      for (std::size_t i = 0; i < queries.size(); ++i)
        acc[i][assign[queries[i]]] += weight;
      return;
    }
    const int v = net.topo[depth];
    std::size_t row = 0;
    const auto& parents = net.parents[v];
    for (std::size_t d = 0; d < parents.size(); ++d)
      row += static_cast<std::size_t>(assign[parents[d]]) * parent_strides[v][d];
    const double* table = net.cpts[v]->probs.data() + row;
    if (observed[v] >= 0) {
      const double w = weight * table[observed[v]];
      if (w > 0.0) {
        assign[v] = observed[v];
        run(depth + 1, w);
      }
      return;
    }
    for (int s = 0; s < net.cards[v]; ++s) {
      const double w = weight * table[s];
      if (w > 0.0) {    // zero branches contribute nothing to any sum
        assign[v] = s;
        run(depth + 1, w);
      }
    }
  }
};

}  // namespace detail

/// Brute-force enumeration of the full joint, producing the posterior of
/// every requested variable in one pass. This is the oracle every other
/// engine is tested against; it shares no code with variable elimination.
inline MarginalSet enumerate_marginals(const CompiledNetwork& net, const Evidence& evidence,
                                       const std::vector<std::string>& queries,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  if (net.joint_size > static_cast<double>(cap))
    throw CapError("joint too large: " + detail::format_double_short(net.joint_size) +
                   " states exceeds cap " + std::to_string(cap));

  detail::Enumerator en(net);
  for (const auto& [name, state] : evidence) {
    int v = net.require_var(name);
    en.observed[v] = net.require_state(v, state);
  }
  for (const auto& q : queries) {
    int v = net.require_var(q);
    en.queries.push_back(v);
    en.acc.emplace_back(net.cards[v], 0.0);
  }
  en.run(0, 1.0);

  if (en.total <= 0.0) throw EvidenceError("impossible evidence: p(evidence) = 0");

  MarginalSet out;
  out.evidence_probability = en.total;
  for (std::size_t i = 0; i < en.queries.size(); ++i) {
    const int v = en.queries[i];
    Distribution d;
    d.variable = net.variable(v).name;
    d.states = net.variable(v).states;
    d.probs.resize(net.cards[v]);
    for (int s = 0; s < net.cards[v]; ++s) d.probs[s] = en.acc[i][s] / en.total;
    out.marginals.emplace(d.variable, std::move(d));
  }
  return out;
}

struct PosteriorResult {
  Distribution posterior;
  double evidence_probability = 1.0;
};

inline PosteriorResult enumerate_posterior(const CompiledNetwork& net, const std::string& query,
                                           const Evidence& evidence,
                                           std::uint64_t cap = kDefaultEnumerationCap) {
  MarginalSet set = enumerate_marginals(net, evidence, {query}, cap);
  return {set.marginals.at(query), set.evidence_probability};
}

}  // namespace cibn
