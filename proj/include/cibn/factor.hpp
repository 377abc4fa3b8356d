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
#include <cstdint>
#include <vector>

#include "cibn/error.hpp"
#include "cibn/network.hpp"

namespace cibn {

/// A dense nonnegative table over an ordered scope of variable ids.
/// Values are row-major with the last scope position varying fastest, so a
/// CPT becomes a factor with scope (parents..., child) and its table reused
/// unchanged.
struct Factor {
  std::vector<int> scope;
  std::vector<int> cards;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }

  bool contains(int var) const {
    return std::find(scope.begin(), scope.end(), var) != scope.end();
  }
};

struct CostCounter {
  std::uint64_t muls = 0;
  std::uint64_t adds = 0;
  std::uint64_t max_entries = 0;

  void saw(std::size_t entries) {
    if (entries > max_entries) max_entries = entries;
  }
};

inline Factor cpt_factor(const CompiledNetwork& net, int var) {
  Factor f;
  for (int p : net.parents[var]) {
    f.scope.push_back(p);
    f.cards.push_back(net.cards[p]);
  }
  f.scope.push_back(var);
  f.cards.push_back(net.cards[var]);
  f.values = net.cpts[var]->probs;
  return f;
}

/// Restricts a factor to the observed states in `observed` (-1 means
/// unobserved) and drops those dimensions.
inline Factor slice_factor(const Factor& f, const std::vector<int>& observed) {
  bool any = false;
  for (int v : f.scope)
    if (observed[v] >= 0) any = true;
  if (!any) return f;

  Factor out;
  std::size_t fixed_offset = 0;
  std::vector<std::size_t> kept_strides;
  std::size_t stride = 1;
  // Walk dimensions from fastest (last) to slowest to accumulate strides.
  for (int d = static_cast<int>(f.scope.size()) - 1; d >= 0; --d) {
    int v = f.scope[d];
    if (observed[v] >= 0) {
      fixed_offset += static_cast<std::size_t>(observed[v]) * stride;
    } else {
      out.scope.push_back(v);
      out.cards.push_back(f.cards[d]);
      kept_strides.push_back(stride);
    }
    stride *= static_cast<std::size_t>(f.cards[d]);
  }
  std::reverse(out.scope.begin(), out.scope.end());
  std::reverse(out.cards.begin(), out.cards.end());
  std::reverse(kept_strides.begin(), kept_strides.end());

  std::size_t total = 1;
  for (int c : out.cards) total *= static_cast<std::size_t>(c);
  out.values.resize(total);

  const int dims = static_cast<int>(out.cards.size());
  std::vector<int> digit(dims, 0);
  std::size_t src = fixed_offset;
  for (std::size_t i = 0; i < total; ++i) {
    out.values[i] = f.values[src];
    for (int d = dims - 1; d >= 0; --d) {
      src += kept_strides[d];
      if (++digit[d] < out.cards[d]) break;
      digit[d] = 0;
      src -= kept_strides[d] * static_cast<std::size_t>(out.cards[d]);
    }
  }
  return out;
}

namespace detail {

// Union of factor scopes in ascending variable id order.
inline void union_scope(const std::vector<const Factor*>& fs,
                        std::vector<int>& scope, std::vector<int>& cards,
                        const std::vector<int>& all_cards) {
  scope.clear();
  for (const Factor* f : fs)
    for (int v : f->scope)
      if (std::find(scope.begin(), scope.end(), v) == scope.end()) scope.push_back(v);
  std::sort(scope.begin(), scope.end());
  cards.resize(scope.size());
  for (std::size_t i = 0; i < scope.size(); ++i) cards[i] = all_cards[scope[i]];
}

// Stride of each union dimension inside a factor laid out row-major with
// the last scope position fastest; 0 for dimensions the factor lacks.
inline std::vector<std::size_t> strides_over(const std::vector<int>& uscope,
                                             const Factor& f) {
  std::vector<std::size_t> strides(uscope.size(), 0);
  std::size_t stride = 1;
  for (int d = static_cast<int>(f.scope.size()) - 1; d >= 0; --d) {
    auto it = std::find(uscope.begin(), uscope.end(), f.scope[d]);
    strides[it - uscope.begin()] = stride;
    stride *= static_cast<std::size_t>(f.cards[d]);
  }
  return strides;
}

// Shared odometer walk over the union scope: calls visit(offsets...) once
// per joint assignment, keeping one running offset per tracked stride set.
template <typename Visit>
inline void walk(const std::vector<int>& ucards,
                 std::vector<std::vector<std::size_t>>& stride_sets, Visit&& visit) {
  const int dims = static_cast<int>(ucards.size());
  const std::size_t tracks = stride_sets.size();
  std::vector<std::size_t> offsets(tracks, 0);
  std::vector<int> digit(dims, 0);
  std::size_t total = 1;
  for (int c : ucards) total *= static_cast<std::size_t>(c);

  for (std::size_t i = 0; i < total; ++i) {
    visit(offsets);
    for (int d = dims - 1; d >= 0; --d) {
      for (std::size_t t = 0; t < tracks; ++t) offsets[t] += stride_sets[t][d];
      if (++digit[d] < ucards[d]) break;
      digit[d] = 0;
      for (std::size_t t = 0; t < tracks; ++t)
        offsets[t] -= stride_sets[t][d] * static_cast<std::size_t>(ucards[d]);
    }
  }
}

}  // namespace detail

/// One sum-product step: multiplies the given factors pointwise over their
/// union scope and sums out `victim`, without materializing the full
/// product. Counts (k-1) multiplications and one accumulating addition per
/// union-scope cell.
inline Factor eliminate_variable(const std::vector<const Factor*>& fs, int victim,
                                 const std::vector<int>& all_cards, CostCounter& cc) {
  std::vector<int> uscope, ucards;
  detail::union_scope(fs, uscope, ucards, all_cards);

  Factor out;
  for (std::size_t i = 0; i < uscope.size(); ++i)
    if (uscope[i] != victim) {
      out.scope.push_back(uscope[i]);
      out.cards.push_back(ucards[i]);
    }
  std::size_t out_size = 1;
  for (int c : out.cards) out_size *= static_cast<std::size_t>(c);
  out.values.assign(out_size, 0.0);

  std::vector<std::vector<std::size_t>> strides;
  strides.reserve(fs.size() + 1);
  for (const Factor* f : fs) strides.push_back(detail::strides_over(uscope, *f));
  strides.push_back(detail::strides_over(uscope, out));  // victim dim -> 0

  std::size_t total = 1;
  for (int c : ucards) total *= static_cast<std::size_t>(c);
  const std::size_t k = fs.size();

  detail::walk(ucards, strides, [&](const std::vector<std::size_t>& off) {
    double prod = fs[0]->values[off[0]];
    for (std::size_t t = 1; t < k; ++t) prod *= fs[t]->values[off[t]];
    out.values[off[k]] += prod;
  });

  cc.muls += (k - 1) * total;
  cc.adds += total;
  cc.saw(out.size());
  return out;
}

/// Pointwise product of the remaining factors over their union scope.
inline Factor join_factors(const std::vector<const Factor*>& fs,
                           const std::vector<int>& all_cards, CostCounter& cc) {
  std::vector<int> uscope, ucards;
  detail::union_scope(fs, uscope, ucards, all_cards);

  Factor out;
  out.scope = uscope;
  out.cards = ucards;
  std::size_t total = 1;
  for (int c : ucards) total *= static_cast<std::size_t>(c);
  out.values.assign(total, 0.0);

  std::vector<std::vector<std::size_t>> strides;
  for (const Factor* f : fs) strides.push_back(detail::strides_over(uscope, *f));
  strides.push_back(detail::strides_over(uscope, out));

  const std::size_t k = fs.size();
  detail::walk(ucards, strides, [&](const std::vector<std::size_t>& off) {
    double prod = fs[0]->values[off[0]];
    for (std::size_t t = 1; t < k; ++t) prod *= fs[t]->values[off[t]];
    out.values[off[k]] = prod;
  });

  cc.muls += (k - 1) * total;
  cc.saw(out.size());
  return out;
}

}  // namespace cibn
