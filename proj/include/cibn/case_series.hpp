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

#include "cibn/eliminate.hpp"
#include "cibn/error.hpp"
#include "cibn/network.hpp"

namespace cibn {

struct Case {
  std::string query;
  Evidence evidence;
};

struct SeriesResult {
  std::vector<Distribution> posteriors;
  std::vector<double> evidence_probs;
  CostReport aggregate;
};

/// Answers a batch of queries that all observe the same set of variables
/// (with per-case values). Variables outside the shared evidence set and the
/// query set are summed out once; each case then only slices and finishes
/// the small reduced factor set. For a single case this degenerates to a
/// plain eliminate call. The reduced factors are local to the call, so
/// concurrent series over one network do not share state.
inline SeriesResult case_series(const CompiledNetwork& net, const std::vector<Case>& cases) {
  if (cases.empty()) throw SpecError("case series requires at least one case");

  for (const Case& c : cases) {
    if (c.evidence.size() != cases.front().evidence.size())
      throw SpecError("inconsistent evidence sets across cases");
    auto it = cases.front().evidence.begin();
    for (const auto& [name, unused] : c.evidence) {
      if (name != it->first) throw SpecError("inconsistent evidence sets across cases");
      ++it;
    }
  }

  SeriesResult result;
  if (cases.size() == 1) {
    QueryAnswer a = eliminate(net, cases.front().query, cases.front().evidence);
    result.posteriors.push_back(std::move(a.posterior));
    result.evidence_probs.push_back(a.evidence_probability);
    result.aggregate = std::move(a.cost);
    return result;
  }

  std::vector<char> keep(net.size(), 0);
  for (const auto& [name, unused] : cases.front().evidence) keep[net.require_var(name)] = 1;
  for (const Case& c : cases) keep[net.require_var(c.query)] = 1;

  // Prefix pass: sum out everything not needed by any case, unsliced.
  CostCounter cc;
  std::vector<Factor> shared;
  {
    std::vector<std::vector<int>> scopes;
    for (int v = 0; v < net.size(); ++v) scopes.push_back(cpt_factor(net, v).scope);
    MinFillResult mf = min_fill_order(scopes, net.size(), keep);
    for (int v : mf.order) result.aggregate.elimination_order.push_back(net.variable(v).name);

    std::vector<Factor> pool;
    for (int v = 0; v < net.size(); ++v) pool.push_back(cpt_factor(net, v));
    detail::run_elimination(pool, mf.order, net.cards, cc);
    shared.swap(pool);
  }

  for (const Case& c : cases) {
    const int q = net.require_var(c.query);
    std::vector<int> observed = detail::observed_states(net, c.evidence);

    std::vector<Factor> pool;
    pool.reserve(shared.size());
    for (const Factor& f : shared) pool.push_back(slice_factor(f, observed));

    std::vector<std::vector<int>> scopes;
    for (const Factor& f : pool)
      if (!f.scope.empty()) scopes.push_back(f.scope);
    std::vector<char> case_keep(net.size(), 0);
    if (observed[q] < 0) case_keep[q] = 1;
    MinFillResult mf = min_fill_order(scopes, net.size(), case_keep);
    detail::run_elimination(pool, mf.order, net.cards, cc);

    std::vector<const Factor*> rest;
    for (const Factor& f : pool) rest.push_back(&f);
    Factor joined = join_factors(rest, net.cards, cc);

    double p_ev = 0.0;
    for (double v : joined.values) p_ev += v;
    if (!(p_ev > 0.0)) throw EvidenceError("impossible evidence: p(evidence) = 0");

    Distribution d;
    d.variable = net.variable(q).name;
    d.states = net.variable(q).states;
    d.probs.assign(net.cards[q], 0.0);
    if (observed[q] >= 0) {
      d.probs[observed[q]] = 1.0;
    } else {
      for (std::size_t i = 0; i < joined.values.size(); ++i)
        d.probs[i] = joined.values[i] / p_ev;
    }
    result.posteriors.push_back(std::move(d));
    result.evidence_probs.push_back(p_ev);
  }

  result.aggregate.multiply_add_count = cc.muls + cc.adds;
  result.aggregate.max_factor_entries = cc.max_entries;
  return result;
}

}  // namespace cibn
