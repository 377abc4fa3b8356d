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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cibn/error.hpp"
#include "cibn/table.hpp"
#include "cibn/variable.hpp"

namespace cibn {

/// A discrete belief network: variables in declaration order plus one
/// conditional table per variable. The raw struct makes no promises; run
/// validate() (or compile(), which insists on it) before inference.
/// A validated network is treated as immutable; all operations on it are
/// pure functions and safe to run concurrently.
struct BeliefNetwork {
  std::vector<Variable> variables;
  std::vector<ConditionalTable> tables;

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i].name == name) return static_cast<int>(i);
    return -1;
  }

  /// Index into `tables` of the table whose child is `name`, or -1.
  int table_index(const std::string& name) const {
    for (std::size_t i = 0; i < tables.size(); ++i)
      if (tables[i].child == name) return static_cast<int>(i);
    return -1;
  }
};

struct Violation {
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string format_double_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace detail

/// Structural and numeric checks. Violations are returned as data, never
/// thrown: dangling parents, duplicate names, missing or extra tables,
/// arity mismatches, entries outside [0,1], rows that do not sum to 1
/// within kRowSumTolerance, and directed cycles.
inline ValidationReport validate(const BeliefNetwork& net) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back({std::move(msg)}); };

  const int n = static_cast<int>(net.variables.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    const Variable& v = net.variables[i];
    if (index.count(v.name)) fail("duplicate variable " + v.name);
    index.emplace(v.name, i);
    if (v.states.size() < 2) fail("variable " + v.name + " has fewer than 2 states");
    std::unordered_set<std::string> seen;
    for (const auto& s : v.states)
      if (!seen.insert(s).second) fail("duplicate state " + s + " in " + v.name);
  }

  std::vector<int> tables_for(n, 0);
  std::vector<std::vector<int>> parent_ids(n);
  for (const ConditionalTable& t : net.tables) {
    auto it = index.find(t.child);
    if (it == index.end()) {
      fail("table for unknown variable " + t.child);
      continue;
    }
    const int child = it->second;
    if (++tables_for[child] > 1) {
      fail("multiple tables for " + t.child);
      continue;
    }

    bool resolved = true;
    std::unordered_set<std::string> pseen;
    std::vector<int> pids;
    for (const auto& p : t.parents) {
      auto pit = index.find(p);
      if (pit == index.end()) {
        fail("dangling parent " + p + " of " + t.child);
        resolved = false;
        continue;
      }
      if (pit->second == child) {
        fail("variable " + t.child + " is its own parent");
        resolved = false;
      }
      if (!pseen.insert(p).second) {
        fail("duplicate parent " + p + " of " + t.child);
        resolved = false;
      }
      pids.push_back(pit->second);
    }
    if (!resolved) continue;
    parent_ids[child] = pids;

    const int card = net.variables[child].cardinality();
    std::size_t rows = 1;
    for (int p : pids) rows *= static_cast<std::size_t>(net.variables[p].cardinality());
    if (t.probs.size() != rows * static_cast<std::size_t>(card)) {
      fail("table of " + t.child + " has " + std::to_string(t.probs.size()) +
           " entries, expected " + std::to_string(rows * card));
      continue;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      double sum = 0.0;
      bool in_range = true;
      for (int s = 0; s < card; ++s) {
        double p = t.probs[r * card + s];
        if (!(p >= 0.0 && p <= 1.0)) in_range = false;
        sum += p;
      }
      if (!in_range)
        fail("row " + std::to_string(r) + " of " + t.child + " has entries outside [0,1]");
      else if (std::abs(sum - 1.0) > kRowSumTolerance)
        fail("row " + std::to_string(r) + " of " + t.child + " sums to " +
             detail::format_double_short(sum));
    }
  }
  for (int i = 0; i < n; ++i)
    if (tables_for[i] == 0) fail("missing table for " + net.variables[i].name);

  // Acyclicity via Kahn's algorithm; leftover nodes contain a cycle.
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> children(n);
  for (int c = 0; c < n; ++c)
    for (int p : parent_ids[c]) {
      ++indeg[c];
      children[p].push_back(c);
    }
  std::vector<int> order;
  std::vector<char> removed(n, 0);
  for (;;) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[i] && indeg[i] == 0) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    removed[pick] = 1;
    order.push_back(pick);
    for (int c : children[pick]) --indeg[c];
  }
  if (static_cast<int>(order.size()) != n) {
    // Walk child edges inside the leftover set until a node repeats.
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[i]) {
        start = i;
        break;
      }
    std::vector<int> walk;
    std::vector<int> pos(n, -1);
    int cur = start;
    while (pos[cur] < 0) {
      pos[cur] = static_cast<int>(walk.size());
      walk.push_back(cur);
      for (int c : children[cur])
        if (!removed[c]) {
          cur = c;
          break;
        }
    }
    std::vector<int> cycle(walk.begin() + pos[cur], walk.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    std::string msg = "cycle ";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) msg += ",";
      msg += net.variables[cycle[i]].name;
    }
    fail(msg);
  }

  return report;
}

/// Parents-before-children order, deterministic: among ready variables the
/// one declared first is emitted first.
inline std::vector<std::string> topological_order(const BeliefNetwork& net) {
  const int n = static_cast<int>(net.variables.size());
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> children(n);
  for (const ConditionalTable& t : net.tables) {
    int c = net.var_index(t.child);
    if (c < 0) throw SpecError("table for unknown variable " + t.child);
    for (const auto& p : t.parents) {
      int pi = net.var_index(p);
      if (pi < 0) throw SpecError("dangling parent " + p);
      ++indeg[c];
      children[pi].push_back(c);
    }
  }
  std::vector<std::string> order;
  std::vector<char> removed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[i] && indeg[i] == 0) {
        pick = i;
        break;
      }
    if (pick < 0) throw SpecError("network has a directed cycle");
    removed[pick] = 1;
    order.push_back(net.variables[pick].name);
    for (int c : children[pick]) --indeg[c];
  }
  return order;
}

/// An indexed, validated view of a BeliefNetwork. All inference operates on
/// this; construction fails with the first validation violation.
struct CompiledNetwork {
  const BeliefNetwork* net = nullptr;
  std::unordered_map<std::string, int> index;
  std::vector<int> cards;
  std::vector<std::vector<int>> parents;      // parent variable ids, declared order
  std::vector<const ConditionalTable*> cpts;  // one per variable
  std::vector<int> topo;                      // variable ids, parents first
  double joint_size = 1.0;                    // product of all cardinalities

  int size() const { return static_cast<int>(cards.size()); }

  int var(const std::string& name) const {
    auto it = index.find(name);
    return it == index.end() ? -1 : it->second;
  }

  int require_var(const std::string& name) const {
    int id = var(name);
    if (id < 0) throw SpecError("unknown variable " + name);
    return id;
  }

  const Variable& variable(int id) const { return net->variables[id]; }

  int require_state(int id, const std::string& label) const {
    int s = variable(id).state_index(label);
    if (s < 0)
      throw SpecError("unknown state " + label + " of variable " + variable(id).name);
    return s;
  }
};

inline CompiledNetwork compile(const BeliefNetwork& net) {
  ValidationReport report = validate(net);
  if (!report.ok())
    throw SpecError("invalid network: " + report.violations.front().message);

  CompiledNetwork cn;
  cn.net = &net;
  const int n = static_cast<int>(net.variables.size());
  cn.cards.resize(n);
  cn.parents.resize(n);
  cn.cpts.resize(n, nullptr);
  for (int i = 0; i < n; ++i) {
    cn.index.emplace(net.variables[i].name, i);
    cn.cards[i] = net.variables[i].cardinality();
    cn.joint_size *= cn.cards[i];
  }
  for (const ConditionalTable& t : net.tables) {
    int c = cn.index.at(t.child);
    cn.cpts[c] = &t;
    for (const auto& p : t.parents) cn.parents[c].push_back(cn.index.at(p));
  }
  for (const auto& name : topological_order(net)) cn.topo.push_back(cn.index.at(name));
  return cn;
}

}  // namespace cibn
