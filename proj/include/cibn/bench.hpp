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
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cibn/eliminate.hpp"
#include "cibn/error.hpp"
#include "cibn/family.hpp"

namespace cibn {

enum class SweepFamily {
  or_temporal,
  or_atemporal,
  adder_temporal,
  adder_atemporal,
  adder_nonneg,
};

inline std::string to_string(SweepFamily f) {
  switch (f) {
    case SweepFamily::or_temporal: return "noisy-or-temporal";
    case SweepFamily::or_atemporal: return "noisy-or-atemporal";
    case SweepFamily::adder_temporal: return "adder-temporal";
    case SweepFamily::adder_atemporal: return "adder-atemporal";
    case SweepFamily::adder_nonneg: return "adder-nonneg";
  }
  return "?";
}

inline SweepFamily sweep_family_from_string(const std::string& s) {
  if (s == "noisy-or-temporal") return SweepFamily::or_temporal;
  if (s == "noisy-or-atemporal") return SweepFamily::or_atemporal;
  if (s == "adder-temporal") return SweepFamily::adder_temporal;
  if (s == "adder-atemporal") return SweepFamily::adder_atemporal;
  if (s == "adder-nonneg") return SweepFamily::adder_nonneg;
  throw SpecError("unknown sweep family " + s);
}

enum class FitModel { polynomial, exponential };
enum class SweepMetric { multiply_adds, max_factor_entries };
enum class SweepCheck { band, peak_pow2 };

/// One sweep: build the family at each axis value, run instrumented
/// elimination with the configured query/evidence, fit the growth of the
/// chosen counter. `axis` is 'n' (cause count; `l` fixed for adders) or 'l'
/// (contribution half-range; `n` fixed).
struct SweepConfig {
  SweepFamily family = SweepFamily::or_temporal;
  char axis = 'n';
  std::vector<int> values;
  int n = 8;                        // fixed cause count when axis == 'l'
  int l = 2;                        // fixed half-range when axis == 'n'
  std::uint64_t seed = 1;
  std::string query = "c1";
  std::string evidence = "effect-extreme";  // or "none"
  FitModel model = FitModel::polynomial;
  SweepMetric metric = SweepMetric::multiply_adds;
  SweepCheck check = SweepCheck::band;
  double band_lo = 0.0;
  double band_hi = 0.0;
};

struct SweepRow {
  int value = 0;  // the axis value (n or l)
  CostReport cost;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  double fitted = 0.0;
  bool pass = false;
};

/// Polynomial: least-squares slope of log cost against log size.
/// Exponential: mean ratio between successive costs along the grid.
inline double fit_growth(const std::vector<std::pair<double, double>>& points,
                         FitModel model) {
  if (points.size() < 3) throw SpecError("fit_growth: need at least 3 points");
  for (const auto& [x, y] : points)
    if (!(x > 0.0) || !(y > 0.0)) throw SpecError("fit_growth: degenerate input");

  if (model == FitModel::exponential) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      sum += points[i + 1].second / points[i].second;
    return sum / static_cast<double>(points.size() - 1);
  }

  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += std::log(x);
    my += std::log(y);
  }
  mx /= points.size();
  my /= points.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  return sxy / sxx;
}

namespace detail {

inline std::mt19937_64 sweep_rng(std::uint64_t seed, int n, int l) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(l)};
  return std::mt19937_64(seq);
}

}  // namespace detail

/// Deterministic per-(seed, n) gate spec with interior parameter values.
inline NoisyOrSpec random_or_spec(int n, std::uint64_t seed) {
  auto rng = detail::sweep_rng(seed, n, 0);
  std::uniform_real_distribution<double> u(0.2, 0.9);
  NoisyOrSpec spec;
  spec.n = n;
  spec.leak = std::uniform_real_distribution<double>(0.02, 0.2)(rng);
  for (int j = 0; j < n; ++j) spec.q.push_back(u(rng));
  for (int j = 0; j < n; ++j) spec.cause_priors.push_back(u(rng));
  return spec;
}

/// Deterministic per-(seed, n, l) adder spec; rows strictly positive on the
/// legal contribution range so every effect value stays reachable.
inline NoisyAdderSpec random_adder_spec(int n, int l, bool nonneg, std::uint64_t seed) {
  auto rng = detail::sweep_rng(seed, n, l + (nonneg ? 1000 : 0));
  std::uniform_real_distribution<double> u(0.1, 1.0);
  auto row = [&]() {
    std::vector<double> r(2 * l + 1, 0.0);
    double sum = 0.0;
    for (int k = nonneg ? 0 : -l; k <= l; ++k) sum += (r[k + l] = u(rng));
    for (double& v : r) v /= sum;
    return r;
  };
  NoisyAdderSpec spec;
  spec.n = n;
  spec.l = l;
  spec.nonneg = nonneg;
  for (int j = 0; j < n; ++j) spec.q.push_back(row());
  spec.leak = row();
  std::uniform_real_distribution<double> up(0.2, 0.8);
  for (int j = 0; j < n; ++j) spec.cause_priors.push_back(up(rng));
  return spec;
}

namespace detail {

inline FamilySpec sweep_spec(const SweepConfig& cfg, int value) {
  const int n = cfg.axis == 'n' ? value : cfg.n;
  const int l = cfg.axis == 'l' ? value : cfg.l;
  switch (cfg.family) {
    case SweepFamily::or_temporal:
    case SweepFamily::or_atemporal:
      return random_or_spec(n, cfg.seed);
    case SweepFamily::adder_temporal:
    case SweepFamily::adder_atemporal:
      return random_adder_spec(n, l, false, cfg.seed);
    case SweepFamily::adder_nonneg:
      return random_adder_spec(n, l, true, cfg.seed);
  }
  throw SpecError("unknown sweep family");
}

inline Encoding sweep_encoding(SweepFamily f) {
  return (f == SweepFamily::or_atemporal || f == SweepFamily::adder_atemporal)
             ? Encoding::atemporal
             : Encoding::temporal;
}

}  // namespace detail

/// Whether the sweep family uses the gate encoding, whose combiner table is
/// exponential in n; such sweeps are capped at n <= 16.
inline bool sweep_is_atemporal(SweepFamily f) {
  return f == SweepFamily::or_atemporal || f == SweepFamily::adder_atemporal;
}

inline SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.values.empty()) throw SpecError("sweep: no axis values");
  for (std::size_t i = 1; i < cfg.values.size(); ++i)
    if (cfg.values[i] <= cfg.values[i - 1])
      throw SpecError("sweep: axis values must be strictly increasing");
  if (sweep_is_atemporal(cfg.family)) {
    const int max_n = cfg.axis == 'n' ? cfg.values.back() : cfg.n;
    if (max_n > 16)
      throw CapError("atemporal sweeps are capped at n <= 16, got n = " +
                     std::to_string(max_n));
  }

  SweepResult result;
  result.config = cfg;
  for (int value : cfg.values) {
    FamilySpec spec = detail::sweep_spec(cfg, value);
    const Encoding encoding = detail::sweep_encoding(cfg.family);
    BeliefNetwork net = build_family(spec, encoding);
    CompiledNetwork cn = compile(net);

    Evidence evidence;
    if (cfg.evidence == "effect-extreme") {
      const std::string effect = family_effect_name(spec, encoding);
      evidence[effect] = cn.variable(cn.require_var(effect)).states.back();
    } else if (cfg.evidence != "none") {
      throw SpecError("unknown evidence pattern " + cfg.evidence);
    }

    QueryAnswer answer = eliminate(cn, cfg.query, evidence);
    result.rows.push_back({value, std::move(answer.cost)});
  }

  std::vector<std::pair<double, double>> points;
  for (const SweepRow& row : result.rows)
    points.emplace_back(static_cast<double>(row.value),
                        static_cast<double>(cfg.metric == SweepMetric::multiply_adds
                                                ? row.cost.multiply_add_count
                                                : row.cost.max_factor_entries));
  result.fitted = fit_growth(points, cfg.model);

  if (cfg.check == SweepCheck::peak_pow2) {
    result.pass = true;
    for (const SweepRow& row : result.rows)
      if (row.cost.max_factor_entries != (std::uint64_t{1} << row.value)) result.pass = false;
  } else {
    result.pass = result.fitted >= cfg.band_lo && result.fitted <= cfg.band_hi;
  }
  return result;
}

}  // namespace cibn
