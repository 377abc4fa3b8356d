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

#include <optional>
#include <string>
#include <vector>

#include "cibn/error.hpp"
#include "cibn/factor.hpp"
#include "cibn/inference_types.hpp"
#include "cibn/network.hpp"
#include "cibn/ordering.hpp"

namespace cibn {

struct QueryAnswer {
  Distribution posterior;
  double evidence_probability = 1.0;
  CostReport cost;
};

namespace detail {

// Slices every CPT factor on the evidence. Observed variables disappear
// from all scopes; slicing copies values but performs no arithmetic.
inline std::vector<Factor> sliced_factors(const CompiledNetwork& net,
                                          const std::vector<int>& observed) {
  std::vector<Factor> fs;
  fs.reserve(net.size());
  for (int v = 0; v < net.size(); ++v)
    fs.push_back(slice_factor(cpt_factor(net, v), observed));
  return fs;
}

// Runs the ordered sum-product steps in place over the factor pool.
inline void run_elimination(std::vector<Factor>& pool, const std::vector<int>& order,
                            const std::vector<int>& cards, CostCounter& cc) {
  std::vector<char> dead(pool.size(), 0);
  for (int victim : order) {
    std::vector<const Factor*> gathered;
    std::vector<std::size_t> gathered_idx;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!dead[i] && pool[i].contains(victim)) {
        gathered.push_back(&pool[i]);
        gathered_idx.push_back(i);
      }
    if (gathered.empty()) continue;
    Factor result = eliminate_variable(gathered, victim, cards, cc);
    for (std::size_t i : gathered_idx) dead[i] = 1;
    pool.push_back(std::move(result));
    dead.push_back(0);
  }
  std::vector<Factor> alive;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!dead[i]) alive.push_back(std::move(pool[i]));
  pool.swap(alive);
}

inline std::vector<int> resolve_ordering(const CompiledNetwork& net,
                                         const std::vector<std::string>& names, int query,
                                         const std::vector<int>& observed) {
  std::vector<char> expected(net.size(), 0);
  int expected_count = 0;
  for (int v = 0; v < net.size(); ++v)
    if (v != query && observed[v] < 0) {
      expected[v] = 1;
      ++expected_count;
    }
  std::vector<int> order;
  std::vector<char> seen(net.size(), 0);
  for (const auto& name : names) {
    int v = net.require_var(name);
    if (!expected[v] || seen[v])
      throw SpecError("malformed ordering: unexpected or repeated variable " + name);
    seen[v] = 1;
    order.push_back(v);
  }
  if (static_cast<int>(order.size()) != expected_count)
    throw SpecError("malformed ordering: expected " + std::to_string(expected_count) +
                    " variables, got " + std::to_string(order.size()));
  return order;
}

}  // namespace detail

/// Exact posterior by variable elimination. Evidence is applied by slicing
/// factors before any elimination step; the posterior is normalized at the
/// end and p(evidence) is exposed as the by-product. The optional ordering
/// must be a permutation of the non-query, non-evidence variables; by
/// default greedy min-fill is used.
inline QueryAnswer eliminate(const CompiledNetwork& net, const std::string& query,
                             const Evidence& evidence,
                             const std::optional<std::vector<std::string>>& ordering = std::nullopt) {
  const int q = net.require_var(query);
  std::vector<int> observed = detail::observed_states(net, evidence);

  std::vector<int> order;
  std::vector<std::string> order_names;
  if (ordering) {
    order = detail::resolve_ordering(net, *ordering, observed[q] >= 0 ? -1 : q, observed);
    order_names = *ordering;
  } else {
    std::vector<char> keep(net.size(), 0);
    if (observed[q] < 0) keep[q] = 1;
    MinFillResult mf =
        min_fill_order(detail::sliced_scopes(net, observed), net.size(), keep);
    order = mf.order;
    for (int v : order) order_names.push_back(net.variable(v).name);
  }

  CostCounter cc;
  std::vector<Factor> pool = detail::sliced_factors(net, observed);
  detail::run_elimination(pool, order, net.cards, cc);

  std::vector<const Factor*> rest;
  for (const Factor& f : pool) rest.push_back(&f);
  Factor joined = join_factors(rest, net.cards, cc);

  double p_ev = 0.0;
  for (double v : joined.values) p_ev += v;
  if (!(p_ev > 0.0)) throw EvidenceError("impossible evidence: p(evidence) = 0");

  QueryAnswer answer;
  answer.evidence_probability = p_ev;
  answer.posterior.variable = net.variable(q).name;
  answer.posterior.states = net.variable(q).states;
  answer.posterior.probs.assign(net.cards[q], 0.0);
  if (observed[q] >= 0) {
    answer.posterior.probs[observed[q]] = 1.0;  // evidence on the query itself
  } else {
    for (std::size_t i = 0; i < joined.values.size(); ++i)
      answer.posterior.probs[i] = joined.values[i] / p_ev;
  }
  answer.cost.multiply_add_count = cc.muls + cc.adds;
  answer.cost.max_factor_entries = cc.max_entries;
  answer.cost.elimination_order = std::move(order_names);
  return answer;
}

}  // namespace cibn
