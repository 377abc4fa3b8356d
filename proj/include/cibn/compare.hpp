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

#include <cmath>
#include <string>
#include <vector>

#include "cibn/eliminate.hpp"
#include "cibn/error.hpp"
#include "cibn/family.hpp"
#include "cibn/oracle.hpp"

namespace cibn {

struct CompareOptions {
  double tolerance = 1e-9;
  std::uint64_t oracle_cap = kDefaultEnumerationCap;
};

struct CompareLine {
  std::string item;
  double deviation = 0.0;
};

struct CompareReport {
  double max_deviation = 0.0;
  std::vector<CompareLine> lines;
  std::vector<std::string> sources;
  int oracle_runs = 0;
  bool within(double tol) const { return max_deviation <= tol; }
};

namespace detail {

inline std::string effect_name_of(const CompiledNetwork& net, int n) {
  if (net.var("e") >= 0) return "e";
  const std::string chained = "e" + std::to_string(n);
  if (net.var(chained) >= 0) return chained;
  throw SpecError("network has no recognizable effect variable");
}

}  // namespace detail

/// Builds every encoding of the family (plus an optional externally supplied
/// network over the same cause names) and compares, under a fixed evidence
/// battery, the effect distribution and all cause posteriors — engine
/// against engine, and each against the enumeration oracle wherever the
/// joint fits under the cap. Returns the largest absolute deviation found.
inline CompareReport compare_family(const FamilySpec& spec,
                                    const BeliefNetwork* external = nullptr,
                                    const CompareOptions& options = {}) {
  const int n = family_cause_count(spec);

  struct Source {
    std::string label;
    BeliefNetwork net;
    CompiledNetwork compiled;
    std::string effect;
  };
  std::vector<Source> sources;
  for (Encoding encoding : family_encodings(spec)) {
    Source s;
    s.label = to_string(encoding);
    s.net = build_family(spec, encoding);
    s.effect = family_effect_name(spec, encoding);
    sources.push_back(std::move(s));
  }
  if (external) {
    Source s;
    s.label = "given";
    s.net = *external;
    sources.push_back(std::move(s));
  }
  // Compile only once the vector has stopped reallocating: the compiled
  // views point into their Source's network.
  for (Source& s : sources) {
    s.compiled = compile(s.net);
    if (s.effect.empty()) s.effect = detail::effect_name_of(s.compiled, n);
  }

  CompareReport report;
  for (const Source& s : sources) report.sources.push_back(s.label);

  struct Item {
    std::string label;
    bool effect_evidence = false;  // observe effect at extreme, query causes
    std::vector<int> true_causes;  // otherwise: observed cause values
    bool observe_causes = false;
  };
  std::vector<Item> battery;
  battery.push_back({"p(effect), no evidence", false, {}, false});
  battery.push_back({"p(effect), all causes false", false, {}, true});
  {
    std::vector<int> all;
    for (int j = 1; j <= n; ++j) all.push_back(j);
    battery.push_back({"p(effect), all causes true", false, all, true});
  }
  for (int j = 1; j <= n; ++j)
    battery.push_back(
        {"p(effect), only c" + std::to_string(j) + " true", false, {j}, true});
  battery.push_back({"cause posteriors, effect at extreme", true, {}, false});

  for (const Item& item : battery) {
    // One result vector per queried variable, collected across all sources
    // and both engines.
    std::vector<std::string> queries;
    if (item.effect_evidence)
      for (int j = 1; j <= n; ++j) queries.push_back("c" + std::to_string(j));
    std::vector<std::vector<std::vector<double>>> collected(
        item.effect_evidence ? queries.size() : 1);

    for (const Source& s : sources) {
      Evidence evidence;
      if (item.observe_causes) {
        for (int j = 1; j <= n; ++j) evidence["c" + std::to_string(j)] = "false";
        for (int j : item.true_causes) evidence["c" + std::to_string(j)] = "true";
      }
      if (item.effect_evidence) {
        const int e = s.compiled.require_var(s.effect);
        evidence[s.effect] = s.compiled.variable(e).states.back();
      }

      if (item.effect_evidence) {
        for (std::size_t qi = 0; qi < queries.size(); ++qi)
          collected[qi].push_back(eliminate(s.compiled, queries[qi], evidence).posterior.probs);
        if (s.compiled.joint_size <= static_cast<double>(options.oracle_cap)) {
          MarginalSet oracle =
              enumerate_marginals(s.compiled, evidence, queries, options.oracle_cap);
          for (std::size_t qi = 0; qi < queries.size(); ++qi)
            collected[qi].push_back(oracle.marginals.at(queries[qi]).probs);
          ++report.oracle_runs;
        }
      } else {
        collected[0].push_back(eliminate(s.compiled, s.effect, evidence).posterior.probs);
        if (s.compiled.joint_size <= static_cast<double>(options.oracle_cap)) {
          collected[0].push_back(
              enumerate_posterior(s.compiled, s.effect, evidence, options.oracle_cap)
                  .posterior.probs);
          ++report.oracle_runs;
        }
      }
    }

    double dev = 0.0;
    for (const auto& slot : collected) {
      for (std::size_t a = 0; a < slot.size(); ++a)
        for (std::size_t b = a + 1; b < slot.size(); ++b) {
          if (slot[a].size() != slot[b].size())
            throw SpecError("state spaces disagree across encodings");
          for (std::size_t i = 0; i < slot[a].size(); ++i)
            dev = std::max(dev, std::abs(slot[a][i] - slot[b][i]));
        }
    }
    report.lines.push_back({item.label, dev});
    report.max_deviation = std::max(report.max_deviation, dev);
  }

  if (report.oracle_runs == 0)
    throw CapError("no encoding fits under the enumeration cap");
  return report;
}

}  // namespace cibn
