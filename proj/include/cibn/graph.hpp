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
#include <optional>
#include <string>
#include <vector>

#include "cibn/error.hpp"
#include "cibn/network.hpp"

namespace cibn {

/// Simple undirected graph over the network's variables (by declaration id).
struct UndirectedGraph {
  std::vector<std::string> names;
  std::vector<std::vector<char>> adj;

  int size() const { return static_cast<int>(names.size()); }

  void add_edge(int u, int v) {
    if (u == v) return;
    adj[u][v] = adj[v][u] = 1;
  }

  bool has_edge(int u, int v) const { return adj[u][v] != 0; }

  bool has_edge(const std::string& a, const std::string& b) const {
    int u = -1, v = -1;
    for (int i = 0; i < size(); ++i) {
      if (names[i] == a) u = i;
      if (names[i] == b) v = i;
    }
    if (u < 0 || v < 0) throw SpecError("unknown variable in edge query");
    return has_edge(u, v);
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (int u = 0; u < size(); ++u)
      for (int v = u + 1; v < size(); ++v) e += adj[u][v] ? 1 : 0;
    return e;
  }
};

namespace detail {

inline UndirectedGraph empty_graph(const BeliefNetwork& net) {
  UndirectedGraph g;
  for (const auto& v : net.variables) g.names.push_back(v.name);
  g.adj.assign(g.names.size(), std::vector<char>(g.names.size(), 0));
  return g;
}

inline std::vector<std::vector<int>> parent_ids(const BeliefNetwork& net) {
  std::vector<std::vector<int>> parents(net.variables.size());
  for (const ConditionalTable& t : net.tables) {
    int c = net.var_index(t.child);
    if (c < 0) throw SpecError("table for unknown variable " + t.child);
    for (const auto& p : t.parents) {
      int pi = net.var_index(p);
      if (pi < 0) throw SpecError("dangling parent " + p + " of " + t.child);
      parents[c].push_back(pi);
    }
  }
  return parents;
}

}  // namespace detail

/// The network's edges with directions dropped.
inline UndirectedGraph skeleton_graph(const BeliefNetwork& net) {
  UndirectedGraph g = detail::empty_graph(net);
  auto parents = detail::parent_ids(net);
  for (std::size_t c = 0; c < parents.size(); ++c)
    for (int p : parents[c]) g.add_edge(static_cast<int>(c), p);
  return g;
}

/// Undirected edges plus an edge between every pair of co-parents.
inline UndirectedGraph moral_graph(const BeliefNetwork& net) {
  UndirectedGraph g = skeleton_graph(net);
  auto parents = detail::parent_ids(net);
  for (const auto& ps : parents)
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) g.add_edge(ps[i], ps[j]);
  return g;
}

/// Finds a chordless cycle of length >= 4, if one exists. Enumerates induced
/// paths anchored at the cycle's minimum vertex; the work cap guards against
/// pathological dense inputs.
inline std::optional<std::vector<int>> find_chordless_cycle(
    const UndirectedGraph& g, std::uint64_t work_cap = 50'000'000) {
  const int n = g.size();

  // Forest check: no cycles at all is the common case for chain models.
  {
    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    bool cyclic = false;
    for (int u = 0; u < n && !cyclic; ++u)
      for (int v = u + 1; v < n && !cyclic; ++v)
        if (g.has_edge(u, v)) {
          int ru = find(u), rv = find(v);
          if (ru == rv) cyclic = true;
          else root[ru] = rv;
        }
    if (!cyclic) return std::nullopt;
  }

  std::uint64_t work = 0;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  // Extends an induced path whose vertices all exceed path[0] except the
  // anchor itself; closing back to the anchor yields a chordless cycle.
  auto dfs = [&](auto&& self, int anchor) -> bool {
    if (++work > work_cap) throw CapError("chordless cycle search budget exceeded");
    int last = path.back();
    for (int w = anchor + 1; w < n; ++w) {
      if (on_path[w] || !g.has_edge(last, w)) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i)
        if (i > 0 && g.has_edge(path[i], w)) chord = true;
      if (chord) continue;
      const bool closes = g.has_edge(anchor, w);
      if (closes) {
        if (path.size() >= 3) {
          path.push_back(w);
          return true;
        }
        continue;  // would be a triangle (or the anchor edge itself)
      }
      path.push_back(w);
      on_path[w] = 1;
      if (self(self, anchor)) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  };

  for (int anchor = 0; anchor < n; ++anchor) {
    for (int second = anchor + 1; second < n; ++second) {
      if (!g.has_edge(anchor, second)) continue;
      path = {anchor, second};
      std::fill(on_path.begin(), on_path.end(), 0);
      on_path[anchor] = on_path[second] = 1;
      if (dfs(dfs, anchor)) return path;
    }
  }
  return std::nullopt;
}

struct ProblemCycleReport {
  bool found = false;
  std::vector<std::string> cycle;  // witness, in traversal order
};

/// Detects the residual-intractability signature: a chordless undirected
/// cycle of length >= 4 in the network's skeleton. Single-effect chains are
/// trees and never trigger it; models in which several effects share causes
/// do.
inline ProblemCycleReport has_problem_cycles(const BeliefNetwork& net) {
  UndirectedGraph g = skeleton_graph(net);
  ProblemCycleReport report;
  if (auto cycle = find_chordless_cycle(g)) {
    report.found = true;
    for (int v : *cycle) report.cycle.push_back(g.names[v]);
  }
  return report;
}

}  // namespace cibn
