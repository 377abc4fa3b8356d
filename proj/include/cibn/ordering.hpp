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

#include "cibn/factor.hpp"
#include "cibn/inference_types.hpp"
#include "cibn/network.hpp"

namespace cibn {

struct MinFillResult {
  std::vector<int> order;       // variable ids to eliminate, in order
  std::vector<int> step_fill;   // fill edges added by each step
};

/// Greedy min-fill over the interaction graph induced by the given factor
/// scopes: vertices are the scoped variables minus `keep`, each scope is a
/// clique, eliminating a vertex connects its remaining neighbors. Ties go to
/// the variable declared first.
inline MinFillResult min_fill_order(const std::vector<std::vector<int>>& scopes,
                                    int var_count, const std::vector<char>& keep) {
  std::vector<std::vector<char>> adj(var_count, std::vector<char>(var_count, 0));
  std::vector<char> present(var_count, 0);
  for (const auto& scope : scopes) {
    for (int v : scope) present[v] = 1;
    for (std::size_t i = 0; i < scope.size(); ++i)
      for (std::size_t j = i + 1; j < scope.size(); ++j)
        adj[scope[i]][scope[j]] = adj[scope[j]][scope[i]] = 1;
  }

  std::vector<int> candidates;
  for (int v = 0; v < var_count; ++v)
    if (present[v] && !keep[v]) candidates.push_back(v);
  std::vector<char> remaining = present;

  auto fill_of = [&](int v) {
    std::vector<int> nbrs;
    for (int u = 0; u < var_count; ++u)
      if (remaining[u] && u != v && adj[v][u]) nbrs.push_back(u);
    int fill = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!adj[nbrs[i]][nbrs[j]]) ++fill;
    return fill;
  };

  MinFillResult result;
  std::vector<char> done(var_count, 0);
  for (std::size_t step = 0; step < candidates.size(); ++step) {
    int best = -1, best_fill = 0;
    for (int v : candidates) {
      if (done[v]) continue;
      int fill = fill_of(v);
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> nbrs;
    for (int u = 0; u < var_count; ++u)
      if (remaining[u] && u != best && adj[best][u]) nbrs.push_back(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        adj[nbrs[i]][nbrs[j]] = adj[nbrs[j]][nbrs[i]] = 1;
    remaining[best] = 0;
    done[best] = 1;
    result.order.push_back(best);
    result.step_fill.push_back(best_fill);
  }
  return result;
}

namespace detail {

inline std::vector<std::vector<int>> sliced_scopes(const CompiledNetwork& net,
                                                   const std::vector<int>& observed) {
  std::vector<std::vector<int>> scopes;
  for (int v = 0; v < net.size(); ++v) {
    std::vector<int> scope;
    for (int p : net.parents[v])
      if (observed[p] < 0) scope.push_back(p);
    if (observed[v] < 0) scope.push_back(v);
    if (!scope.empty()) scopes.push_back(std::move(scope));
  }
  return scopes;
}

inline std::vector<int> observed_states(const CompiledNetwork& net, const Evidence& evidence) {
  std::vector<int> observed(net.size(), -1);
  for (const auto& [name, state] : evidence) {
    int v = net.require_var(name);
    observed[v] = net.require_state(v, state);
  }
  return observed;
}

}  // namespace detail

/// Deterministic greedy min-fill ordering of all variables other than the
/// query and the evidence, computed on the evidence-sliced moral graph.
inline std::vector<std::string> min_fill_ordering(const CompiledNetwork& net,
                                                  const std::string& query,
                                                  const Evidence& evidence) {
  std::vector<int> observed = detail::observed_states(net, evidence);
  std::vector<char> keep(net.size(), 0);
  int q = net.require_var(query);
  keep[q] = 1;
  MinFillResult r = min_fill_order(detail::sliced_scopes(net, observed), net.size(), keep);
  std::vector<std::string> names;
  for (int v : r.order) names.push_back(net.variable(v).name);
  return names;
}

}  // namespace cibn
