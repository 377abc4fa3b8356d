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
#include <string>
#include <vector>

#include "cibn/encoding.hpp"
#include "cibn/error.hpp"
#include "cibn/network.hpp"
#include "cibn/noisy_or.hpp"

namespace cibn {

/// Parameters of a noisy adder: each present cause contributes an integer in
/// [-l, +l] drawn from its q row; the effect is the sum of contributions plus
/// a leak contribution. q rows are indexed k + l for k in [-l, +l].
///
/// With `nonneg` set the family becomes the bounded nonnegative variant:
/// contributions live in [0, +l], the effect is capped to [0, +l], and
/// additions saturate at +l. Saturating addition of nonnegative terms is
/// associative, so all encodings stay equivalent, and fixed-size chain nodes
/// make inference cost linear in the cause count.
struct NoisyAdderSpec {
  int n = 0;
  int l = 1;
  std::vector<std::vector<double>> q;  // n rows of 2l+1 entries
  std::vector<double> leak;            // 2l+1 entries
  std::vector<double> cause_priors;
  bool nonneg = false;

  void check() const {
    if (n < 1) throw SpecError("adder spec: cause count must be >= 1");
    if (l < 1) throw SpecError("adder spec: contribution half-range must be >= 1");
    const std::size_t width = static_cast<std::size_t>(2 * l + 1);
    if (static_cast<int>(q.size()) != n)
      throw SpecError("adder spec: expected " + std::to_string(n) + " q rows");
    if (static_cast<int>(cause_priors.size()) != n)
      throw SpecError("adder spec: expected " + std::to_string(n) + " cause priors");
    auto check_row = [&](const std::vector<double>& row, const std::string& what) {
      if (row.size() != width)
        throw SpecError("adder spec: " + what + " must have " + std::to_string(width) +
                        " entries");
      double sum = 0.0;
      for (double v : row) {
        if (!(v >= 0.0 && v <= 1.0)) throw SpecError("adder spec: " + what + " outside [0,1]");
        sum += v;
      }
      if (std::abs(sum - 1.0) > kRowSumTolerance)
        throw SpecError("adder spec: " + what + " sums to " + detail::format_double_short(sum));
      if (nonneg)
        for (int k = -l; k < 0; ++k)
          if (row[k + l] != 0.0)
            throw SpecError("adder spec: " + what + " has mass below 0 in nonneg mode");
    };
    for (int j = 0; j < n; ++j) check_row(q[j], "q row " + std::to_string(j + 1));
    check_row(leak, "leak");
    for (double v : cause_priors)
      if (!(v >= 0.0 && v <= 1.0)) throw SpecError("adder spec: cause prior outside [0,1]");
  }

  // Contribution values, low to high: [-l, +l], or [0, +l] when nonneg.
  int contrib_low() const { return nonneg ? 0 : -l; }
  int contrib_high() const { return l; }

  // Range of chain node e_j (and of the effect for j = n).
  int stage_low(int j) const { return nonneg ? 0 : -(j + 1) * l; }
  int stage_high(int j) const { return nonneg ? l : (j + 1) * l; }

  double q_at(int j, int k) const { return q[j - 1][k + l]; }
  double leak_at(int k) const { return leak[k + l]; }
};

namespace detail {

inline std::vector<double> adder_leak_prior(const NoisyAdderSpec& spec) {
  std::vector<double> prior;
  for (int k = spec.contrib_low(); k <= spec.contrib_high(); ++k)
    prior.push_back(spec.leak_at(k));
  return prior;
}

inline std::vector<double> adder_contrib_rows(const NoisyAdderSpec& spec, int j) {
  // Rows over the single parent c_j: absent -> point mass at 0, present -> q row.
  std::vector<double> probs;
  for (int k = spec.contrib_low(); k <= spec.contrib_high(); ++k)
    probs.push_back(k == 0 ? 1.0 : 0.0);
  for (int k = spec.contrib_low(); k <= spec.contrib_high(); ++k)
    probs.push_back(spec.q_at(j, k));
  return probs;
}

inline int saturate(const NoisyAdderSpec& spec, int value, int stage) {
  if (!spec.nonneg) return value;
  return std::min(value, spec.stage_high(stage));
}

}  // namespace detail

/// Gate encoding: integer contributions i0..in (i0 drawn from the leak
/// distribution through the clamped cause c0) and the deterministic node
/// e = i0 + ... + in.
inline BeliefNetwork build_atemporal_noisy_adder(const NoisyAdderSpec& spec) {
  spec.check();
  const int n = spec.n;
  BeliefNetwork net;

  detail::add_prior(net, boolean_variable("c0"), {0.0, 1.0});
  for (int j = 1; j <= n; ++j)
    detail::add_prior(net, boolean_variable("c" + std::to_string(j)),
                      {1.0 - spec.cause_priors[j - 1], spec.cause_priors[j - 1]});

  const int lo = spec.contrib_low(), hi = spec.contrib_high();
  const int width = hi - lo + 1;
  for (int j = 0; j <= n; ++j) {
    Variable v = integer_variable("i" + std::to_string(j), lo, hi);
    std::vector<double> probs;
    if (j == 0) {
      // Contribution of the clamped leak cause.
      for (int k = lo; k <= hi; ++k) probs.push_back(k == 0 ? 1.0 : 0.0);
      for (int k = lo; k <= hi; ++k) probs.push_back(spec.leak_at(k));
    } else {
      probs = detail::adder_contrib_rows(spec, j);
    }
    net.variables.push_back(v);
    net.tables.push_back({v.name, {"c" + std::to_string(j)}, std::move(probs)});
  }

  const int elo = spec.stage_low(n), ehi = spec.stage_high(n);
  const int ecard = ehi - elo + 1;
  double rows_d = 1.0;
  for (int j = 0; j <= n; ++j) rows_d *= width;
  if (rows_d * ecard > static_cast<double>(kMaxBuiltTableEntries))
    throw CapError("atemporal sum table too large for n = " + std::to_string(n) +
                   ", l = " + std::to_string(spec.l));
  const std::size_t rows = static_cast<std::size_t>(rows_d);

  Variable effect = integer_variable("e", elo, ehi);
  ConditionalTable t{effect.name, {}, {}};
  for (int j = 0; j <= n; ++j) t.parents.push_back("i" + std::to_string(j));
  t.probs.assign(rows * ecard, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t rest = r;
    int sum = 0;
    for (int j = n; j >= 0; --j) {  // rightmost parent varies fastest
      sum += lo + static_cast<int>(rest % width);
      rest /= width;
    }
    sum = detail::saturate(spec, sum, n);
    t.probs[r * ecard + (sum - elo)] = 1.0;
  }
  net.variables.push_back(effect);
  net.tables.push_back(std::move(t));
  return net;
}

/// Chain encoding: e_j ranges over the stage-j window; a present cause
/// shifts the previous stage by a q-distributed amount, an absent cause
/// copies it.
inline BeliefNetwork build_temporal_noisy_adder(const NoisyAdderSpec& spec) {
  spec.check();
  const int n = spec.n;
  BeliefNetwork net;

  for (int j = 1; j <= n; ++j)
    detail::add_prior(net, boolean_variable("c" + std::to_string(j)),
                      {1.0 - spec.cause_priors[j - 1], spec.cause_priors[j - 1]});
  {
    Variable e0 = integer_variable("e0", spec.stage_low(0), spec.stage_high(0));
    detail::add_prior(net, e0, detail::adder_leak_prior(spec));
  }

  for (int j = 1; j <= n; ++j) {
    const int plo = spec.stage_low(j - 1), phi = spec.stage_high(j - 1);
    const int lo = spec.stage_low(j), hi = spec.stage_high(j);
    const int card = hi - lo + 1;
    Variable v = integer_variable("e" + std::to_string(j), lo, hi);
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(phi - plo + 1) * 2 * card);
    for (int m = plo; m <= phi; ++m) {
      // c_j = false: the trivial transition keeps the running sum.
      std::vector<double> row(card, 0.0);
      row[m - lo] = 1.0;
      probs.insert(probs.end(), row.begin(), row.end());
      // c_j = true: shifted copy of the q row.
      std::fill(row.begin(), row.end(), 0.0);
      for (int k = spec.contrib_low(); k <= spec.contrib_high(); ++k) {
        const int target = detail::saturate(spec, m + k, j);
        row[target - lo] += spec.q_at(j, k);
      }
      probs.insert(probs.end(), row.begin(), row.end());
    }
    net.variables.push_back(v);
    net.tables.push_back(
        {v.name, {"e" + std::to_string(j - 1), "c" + std::to_string(j)}, std::move(probs)});
  }
  return net;
}

/// Chain encoding with the contributions reintroduced and the addition made
/// explicit: stochastic i_j nodes under each cause, deterministic sum nodes
/// e_j = e_{j-1} + i_j. Exposes the commutativity of the combination to
/// reordering while keeping the chain's cost profile.
inline BeliefNetwork build_explicit_temporal_adder(const NoisyAdderSpec& spec) {
  spec.check();
  const int n = spec.n;
  BeliefNetwork net;

  for (int j = 1; j <= n; ++j)
    detail::add_prior(net, boolean_variable("c" + std::to_string(j)),
                      {1.0 - spec.cause_priors[j - 1], spec.cause_priors[j - 1]});

  const int lo = spec.contrib_low(), hi = spec.contrib_high();
  for (int j = 1; j <= n; ++j) {
    Variable v = integer_variable("i" + std::to_string(j), lo, hi);
    net.variables.push_back(v);
    net.tables.push_back(
        {v.name, {"c" + std::to_string(j)}, detail::adder_contrib_rows(spec, j)});
  }

  {
    Variable e0 = integer_variable("e0", spec.stage_low(0), spec.stage_high(0));
    detail::add_prior(net, e0, detail::adder_leak_prior(spec));
  }
  for (int j = 1; j <= n; ++j) {
    const int plo = spec.stage_low(j - 1), phi = spec.stage_high(j - 1);
    const int elo = spec.stage_low(j), ehi = spec.stage_high(j);
    const int card = ehi - elo + 1;
    Variable v = integer_variable("e" + std::to_string(j), elo, ehi);
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(phi - plo + 1) * (hi - lo + 1) * card);
    for (int m = plo; m <= phi; ++m)
      for (int k = lo; k <= hi; ++k) {
        std::vector<double> row(card, 0.0);
        row[detail::saturate(spec, m + k, j) - elo] = 1.0;
        probs.insert(probs.end(), row.begin(), row.end());
      }
    net.variables.push_back(v);
    net.tables.push_back(
        {v.name, {"e" + std::to_string(j - 1), "i" + std::to_string(j)}, std::move(probs)});
  }
  return net;
}

inline std::string noisy_adder_effect_name(Encoding encoding, int n) {
  return encoding == Encoding::atemporal ? "e" : "e" + std::to_string(n);
}

}  // namespace cibn
