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

#include <deque>
#include <string>
#include <vector>

#include "cibn/error.hpp"
#include "cibn/network.hpp"

namespace cibn {

struct DSeparationResult {
  bool separated = true;
  /// One active path from x to y when not separated, as variable names.
  std::vector<std::string> active_path;
};

/// Standard d-separation: every undirected path from x to y must be blocked
/// by z (chains and forks blocked by conditioning; colliders blocked unless
/// the collider or one of its descendants is conditioned on). Implemented as
/// a reachability search over (node, entry-direction) states so that a
/// witness path can be reconstructed.
inline DSeparationResult d_separated(const BeliefNetwork& net,
                                     const std::vector<std::string>& x,
                                     const std::vector<std::string>& y,
                                     const std::vector<std::string>& z) {
  const int n = static_cast<int>(net.variables.size());
  std::vector<std::vector<int>> parents(n), children(n);
  for (const ConditionalTable& t : net.tables) {
    int c = net.var_index(t.child);
    if (c < 0) throw SpecError("table for unknown variable " + t.child);
    for (const auto& p : t.parents) {
      int pi = net.var_index(p);
      if (pi < 0) throw SpecError("dangling parent " + p + " of " + t.child);
      parents[c].push_back(pi);
      children[pi].push_back(c);
    }
  }

  auto resolve = [&](const std::vector<std::string>& names) {
    std::vector<int> ids;
    for (const auto& name : names) {
      int id = net.var_index(name);
      if (id < 0) throw SpecError("unknown variable " + name);
      ids.push_back(id);
    }
    return ids;
  };
  std::vector<int> xs = resolve(x), ys = resolve(y), zs = resolve(z);

  std::vector<char> in_x(n, 0), in_y(n, 0), in_z(n, 0);
  for (int v : xs) in_x[v] = 1;
  for (int v : ys) in_y[v] = 1;
  for (int v : zs) in_z[v] = 1;
  for (int v = 0; v < n; ++v)
    if (in_x[v] + in_y[v] + in_z[v] > 1)
      throw SpecError("x, y, z must be disjoint (variable " + net.variables[v].name + ")");

  // Nodes having some member of z among their descendants (inclusive).
  std::vector<char> opens_collider(n, 0);
  {
    std::deque<int> queue(zs.begin(), zs.end());
    for (int v : zs) opens_collider[v] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int p : parents[v])
        if (!opens_collider[p]) {
          opens_collider[p] = 1;
          queue.push_back(p);
        }
    }
  }

  // State: node * 2 + entry direction (0 = entered from a parent,
  // 1 = entered from a child). pred[] remembers the previous state; x-roots
  // are marked with the x node encoded below -2.
  enum { kFromParent = 0, kFromChild = 1 };
  const int kStates = 2 * n;
  std::vector<int> pred(kStates, -1);
  std::vector<char> seen(kStates, 0);
  std::deque<int> queue;

  auto push = [&](int node, int dir, int from_state) {
    int s = node * 2 + dir;
    if (seen[s]) return;
    seen[s] = 1;
    pred[s] = from_state;
    queue.push_back(s);
  };

  for (int v : xs) {
    for (int c : children[v]) push(c, kFromParent, -2 - v);
    for (int p : parents[v]) push(p, kFromChild, -2 - v);
  }

  int goal = -1;
  while (!queue.empty() && goal < 0) {
    int s = queue.front();
    queue.pop_front();
    int v = s / 2, dir = s % 2;
    if (in_y[v]) {
      goal = s;
      break;
    }
    if (dir == kFromParent) {
      if (!in_z[v])
        for (int c : children[v]) push(c, kFromParent, s);
      if (opens_collider[v])
        for (int p : parents[v]) push(p, kFromChild, s);
    } else {
      if (!in_z[v]) {
        for (int c : children[v]) push(c, kFromParent, s);
        for (int p : parents[v]) push(p, kFromChild, s);
      }
    }
  }

  DSeparationResult result;
  if (goal < 0) return result;

  result.separated = false;
  std::vector<std::string> rev;
  int s = goal;
  while (s >= 0) {
    rev.push_back(net.variables[s / 2].name);
    s = pred[s];
  }
  rev.push_back(net.variables[-s - 2].name);
  result.active_path.assign(rev.rbegin(), rev.rend());
  return result;
}

}  // namespace cibn
