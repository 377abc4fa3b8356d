// Shared test utilities: independent oracles (convolution, closed forms,
// path-enumeration d-separation, brute-force cycle search) and seeded
// generators. Everything here is deliberately naive and shares no code with
// the engines under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cibn/cibn.hpp"

namespace support {

inline std::string fixture(const std::string& name) {
  return std::string(CIBN_FIXTURES_DIR) + "/" + name;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
  return dev;
}

// ---------------------------------------------------------------------------
// Distributions over integers, for adder checks.

using IntDist = std::map<int, double>;

inline IntDist int_dist(int low, const std::vector<double>& probs) {
  IntDist d;
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (probs[i] != 0.0) d[low + static_cast<int>(i)] = probs[i];
  return d;
}

inline IntDist convolve(const IntDist& a, const IntDist& b) {
  IntDist out;
  for (const auto& [ka, pa] : a)
    for (const auto& [kb, pb] : b) out[ka + kb] += pa * pb;
  return out;
}

inline IntDist saturate_above(const IntDist& a, int cap) {
  IntDist out;
  for (const auto& [k, p] : a) out[std::min(k, cap)] += p;
  return out;
}

// Probability vector of `d` over the label range of a variable.
inline std::vector<double> over_states(const IntDist& d, const cibn::Variable& var) {
  std::vector<double> probs(var.states.size(), 0.0);
  for (const auto& [k, p] : d) {
    int idx = var.state_index(std::to_string(k));
    REQUIRE(idx >= 0);
    probs[idx] += p;
  }
  return probs;
}

// ---------------------------------------------------------------------------
// Noisy-OR closed form.

inline double or_closed_form(double leak, const std::vector<double>& q,
                             const std::set<int>& present) {
  double miss = 1.0 - leak;
  for (int j : present) miss *= 1.0 - q[j - 1];
  return 1.0 - miss;
}

// ---------------------------------------------------------------------------
// d-separation by exhaustive path enumeration.

struct Dag {
  int n = 0;
  std::vector<std::vector<int>> parents, children;

  explicit Dag(const cibn::BeliefNetwork& net) {
    n = static_cast<int>(net.variables.size());
    parents.resize(n);
    children.resize(n);
    for (const auto& t : net.tables) {
      int c = net.var_index(t.child);
      for (const auto& p : t.parents) {
        int pi = net.var_index(p);
        parents[c].push_back(pi);
        children[pi].push_back(c);
      }
    }
  }

  bool edge_into(int from, int to) const {  // from -> to?
    return std::find(parents[to].begin(), parents[to].end(), from) != parents[to].end();
  }
};

inline bool path_active(const Dag& g, const std::vector<int>& path,
                        const std::vector<char>& in_z, const std::vector<char>& z_below) {
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const int v = path[i];
    const bool collider = g.edge_into(path[i - 1], v) && g.edge_into(path[i + 1], v);
    if (collider) {
      if (!z_below[v]) return false;
    } else {
      if (in_z[v]) return false;
    }
  }
  return true;
}

inline bool dsep_by_paths(const cibn::BeliefNetwork& net, const std::vector<std::string>& x,
                          const std::vector<std::string>& y,
                          const std::vector<std::string>& z) {
  Dag g(net);
  std::vector<char> in_x(g.n, 0), in_y(g.n, 0), in_z(g.n, 0);
  for (const auto& s : x) in_x[net.var_index(s)] = 1;
  for (const auto& s : y) in_y[net.var_index(s)] = 1;
  for (const auto& s : z) in_z[net.var_index(s)] = 1;

  // z_below[v]: v or some descendant of v is in z.
  std::vector<char> z_below = in_z;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.n; ++v)
      if (!z_below[v])
        for (int c : g.children[v])
          if (z_below[c]) {
            z_below[v] = 1;
            changed = true;
          }
  }

  std::vector<int> path;
  std::vector<char> used(g.n, 0);
  bool found = false;

  auto dfs = [&](auto&& self, int v) -> void {
    if (found) return;
    if (in_y[v] && path.size() >= 1) {
      std::vector<int> full = path;
      full.push_back(v);
      if (path_active(g, full, in_z, z_below)) found = true;
      return;
    }
    path.push_back(v);
    used[v] = 1;
    for (int next : g.children[v])
      if (!used[next]) self(self, next);
    for (int next : g.parents[v])
      if (!used[next]) self(self, next);
    used[v] = 0;
    path.pop_back();
  };

  for (int v = 0; v < g.n && !found; ++v)
    if (in_x[v]) dfs(dfs, v);
  return !found;
}

// ---------------------------------------------------------------------------
// Brute-force chordless cycle detection (tiny graphs only).

inline bool chordless_cycle_exists(const cibn::UndirectedGraph& g) {
  const int n = g.size();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  bool found = false;

  auto dfs = [&](auto&& self, int anchor) -> void {
    if (found) return;
    const int last = path.back();
    for (int w = anchor; w < n && !found; ++w) {
      if (w == anchor) {
        if (path.size() >= 4 && g.has_edge(last, anchor)) {
          bool chordless = true;
          for (std::size_t i = 0; i < path.size() && chordless; ++i)
            for (std::size_t j = i + 1; j < path.size(); ++j) {
              const bool consecutive =
                  j == i + 1 || (i == 0 && j + 1 == path.size());
              if (!consecutive && g.has_edge(path[i], path[j])) {
                chordless = false;
                break;
              }
            }
          if (chordless) found = true;
        }
        continue;
      }
      if (used[w] || !g.has_edge(last, w)) continue;
      path.push_back(w);
      used[w] = 1;
      self(self, anchor);
      used[w] = 0;
      path.pop_back();
    }
  };

  for (int anchor = 0; anchor < n && !found; ++anchor) {
    path = {anchor};
    std::fill(used.begin(), used.end(), 0);
    used[anchor] = 1;
    dfs(dfs, anchor);
  }
  return found;
}

// ---------------------------------------------------------------------------
// Seeded random small networks for property tests.

inline cibn::BeliefNetwork random_network(std::mt19937_64& rng, int max_vars = 7,
                                          int max_card = 3) {
  std::uniform_int_distribution<int> var_count(2, max_vars);
  std::uniform_int_distribution<int> card_pick(2, max_card);
  std::uniform_real_distribution<double> unit(0.05, 1.0);

  const int n = var_count(rng);
  cibn::BeliefNetwork net;
  for (int v = 0; v < n; ++v) {
    cibn::Variable var;
    var.name = "v" + std::to_string(v);
    const int card = card_pick(rng);
    for (int s = 0; s < card; ++s) var.states.push_back("s" + std::to_string(s));
    net.variables.push_back(var);
  }
  // Declaration order doubles as a topological order.
  for (int v = 0; v < n; ++v) {
    cibn::ConditionalTable t;
    t.child = net.variables[v].name;
    std::vector<int> pool;
    for (int p = 0; p < v; ++p) pool.push_back(p);
    std::shuffle(pool.begin(), pool.end(), rng);
    const int arity =
        std::min<int>(std::uniform_int_distribution<int>(0, 2)(rng), static_cast<int>(pool.size()));
    std::vector<int> ps(pool.begin(), pool.begin() + arity);
    std::sort(ps.begin(), ps.end());
    for (int p : ps) t.parents.push_back(net.variables[p].name);

    std::size_t rows = 1;
    for (int p : ps) rows *= net.variables[p].states.size();
    const std::size_t card = net.variables[v].states.size();
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<double> row(card);
      double sum = 0.0;
      for (double& x : row) sum += (x = unit(rng));
      for (double& x : row) t.probs.push_back(x / sum);
    }
    net.tables.push_back(std::move(t));
  }
  return net;
}

inline cibn::Evidence evidence_on_causes(int n, const std::set<int>& present) {
  cibn::Evidence ev;
  for (int j = 1; j <= n; ++j)
    ev["c" + std::to_string(j)] = present.count(j) ? "true" : "false";
  return ev;
}

}  // namespace support
