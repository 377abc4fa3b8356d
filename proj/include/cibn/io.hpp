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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cibn/bench.hpp"
#include "cibn/error.hpp"
#include "cibn/family.hpp"
#include "cibn/network.hpp"

namespace cibn {

// Versioned format tags. Emitted numbers use the shortest decimal that
// parses back to the identical double, so emit -> parse -> emit is a fixed
// point at the byte level.
inline constexpr const char* kModelFormat = "belief-net/1";
inline constexpr const char* kFamilyFormat = "family-spec/1";
inline constexpr const char* kSweepFormat = "sweep-config/1";

struct ParsedModel {
  BeliefNetwork net;
  std::optional<FamilySpec> family;
};

namespace detail {

/// Drops leading "//" comment lines (cmd_reorder writes the permutation as
/// such a header above the JSON body).
inline std::string strip_comment_lines(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = text.find_first_not_of(" \t\r\n", pos);
    if (start == std::string::npos || text.compare(start, 2, "//") != 0) break;
    pos = text.find('\n', start);
    if (pos == std::string::npos) return "";
    ++pos;
  }
  return text.substr(pos);
}

inline nlohmann::json parse_json(const std::string& text, const char* format) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(strip_comment_lines(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
    throw ParseError("missing format tag");
  if (j["format"].get<std::string>() != format)
    throw ParseError("expected format " + std::string(format) + ", got " +
                     j["format"].get<std::string>());
  return j;
}

template <typename T>
inline T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("bad field ") + key);
  }
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

inline nlohmann::json family_to_json(const FamilySpec& spec) {
  nlohmann::json j;
  if (const auto* gate = std::get_if<NoisyOrSpec>(&spec)) {
    j["family"] = "noisy-or";
    j["n"] = gate->n;
    j["q"] = gate->q;
    j["leak"] = gate->leak;
    j["cause_priors"] = gate->cause_priors;
  } else {
    const auto& adder = std::get<NoisyAdderSpec>(spec);
    j["family"] = "noisy-adder";
    j["n"] = adder.n;
    j["l"] = adder.l;
    j["q"] = adder.q;
    j["leak"] = adder.leak;
    j["cause_priors"] = adder.cause_priors;
    j["nonneg"] = adder.nonneg;
  }
  return j;
}

inline FamilySpec family_from_json(const nlohmann::json& j) {
  const std::string kind = detail::field<std::string>(j, "family");
  if (kind == "noisy-or") {
    NoisyOrSpec spec;
    spec.n = detail::field<int>(j, "n");
    spec.q = detail::field<std::vector<double>>(j, "q");
    spec.leak = detail::field<double>(j, "leak");
    spec.cause_priors = detail::field<std::vector<double>>(j, "cause_priors");
    spec.check();
    return spec;
  }
  if (kind == "noisy-adder") {
    NoisyAdderSpec spec;
    spec.n = detail::field<int>(j, "n");
    spec.l = detail::field<int>(j, "l");
    spec.q = detail::field<std::vector<std::vector<double>>>(j, "q");
    spec.leak = detail::field<std::vector<double>>(j, "leak");
    spec.cause_priors = detail::field<std::vector<double>>(j, "cause_priors");
    if (j.contains("nonneg")) spec.nonneg = detail::field<bool>(j, "nonneg");
    spec.check();
    return spec;
  }
  throw ParseError("unknown family " + kind);
}

inline std::string write_family_file(const FamilySpec& spec,
                                     const std::vector<int>* permutation = nullptr) {
  nlohmann::json j = family_to_json(spec);
  j["format"] = kFamilyFormat;
  std::string out;
  if (permutation) {
    out += "// permutation: [";
    for (std::size_t i = 0; i < permutation->size(); ++i) {
      if (i) out += ",";
      out += std::to_string((*permutation)[i]);
    }
    out += "]\n";
  }
  out += j.dump(2);
  out += "\n";
  return out;
}

inline FamilySpec read_family_text(const std::string& text) {
  return family_from_json(detail::parse_json(text, kFamilyFormat));
}

inline FamilySpec read_family_file(const std::string& path) {
  return read_family_text(detail::read_text(path));
}

inline std::string write_model_file(const BeliefNetwork& net,
                                    const FamilySpec* family = nullptr) {
  nlohmann::json j;
  j["format"] = kModelFormat;
  j["variables"] = nlohmann::json::array();
  for (const Variable& v : net.variables)
    j["variables"].push_back({{"name", v.name}, {"states", v.states}});
  j["tables"] = nlohmann::json::array();
  for (const ConditionalTable& t : net.tables)
    j["tables"].push_back(
        {{"child", t.child}, {"parents", t.parents}, {"probs", t.probs}});
  if (family) j["family"] = family_to_json(*family);
  return j.dump(2) + "\n";
}

/// Parses and validates a model file; an invalid network is a semantic
/// error reported with its first violation.
inline ParsedModel read_model_text(const std::string& text) {
  nlohmann::json j = detail::parse_json(text, kModelFormat);
  ParsedModel out;
  for (const auto& vj : detail::field<nlohmann::json>(j, "variables")) {
    Variable v;
    v.name = detail::field<std::string>(vj, "name");
    v.states = detail::field<std::vector<std::string>>(vj, "states");
    out.net.variables.push_back(std::move(v));
  }
  for (const auto& tj : detail::field<nlohmann::json>(j, "tables")) {
    ConditionalTable t;
    t.child = detail::field<std::string>(tj, "child");
    t.parents = detail::field<std::vector<std::string>>(tj, "parents");
    t.probs = detail::field<std::vector<double>>(tj, "probs");
    out.net.tables.push_back(std::move(t));
  }
  if (j.contains("family")) out.family = family_from_json(j["family"]);

  ValidationReport report = validate(out.net);
  if (!report.ok())
    throw SpecError("invalid model: " + report.violations.front().message);
  return out;
}

inline ParsedModel read_model_file(const std::string& path) {
  return read_model_text(detail::read_text(path));
}

inline SweepConfig read_sweep_text(const std::string& text) {
  nlohmann::json j = detail::parse_json(text, kSweepFormat);
  SweepConfig cfg;
  cfg.family = sweep_family_from_string(detail::field<std::string>(j, "family"));
  const std::string axis = j.contains("axis") ? detail::field<std::string>(j, "axis") : "n";
  if (axis != "n" && axis != "l") throw ParseError("axis must be \"n\" or \"l\"");
  cfg.axis = axis[0];
  cfg.values = detail::field<std::vector<int>>(j, cfg.axis == 'n' ? "n_values" : "l_values");
  if (j.contains("n")) cfg.n = detail::field<int>(j, "n");
  if (j.contains("l")) cfg.l = detail::field<int>(j, "l");
  if (j.contains("seed")) cfg.seed = detail::field<std::uint64_t>(j, "seed");
  if (j.contains("query")) cfg.query = detail::field<std::string>(j, "query");
  if (j.contains("evidence")) cfg.evidence = detail::field<std::string>(j, "evidence");

  const auto& fit = j.contains("fit") ? j.at("fit") : nlohmann::json::object();
  if (fit.contains("model")) {
    const std::string m = detail::field<std::string>(fit, "model");
    if (m == "polynomial") cfg.model = FitModel::polynomial;
    else if (m == "exponential") cfg.model = FitModel::exponential;
    else throw ParseError("fit model must be polynomial|exponential");
  }
  if (fit.contains("metric")) {
    const std::string m = detail::field<std::string>(fit, "metric");
    if (m == "multiply_adds") cfg.metric = SweepMetric::multiply_adds;
    else if (m == "max_factor_entries") cfg.metric = SweepMetric::max_factor_entries;
    else throw ParseError("fit metric must be multiply_adds|max_factor_entries");
  }

  const auto& check = j.contains("check") ? j.at("check") : nlohmann::json::object();
  if (check.contains("kind")) {
    const std::string k = detail::field<std::string>(check, "kind");
    if (k == "band") cfg.check = SweepCheck::band;
    else if (k == "peak-pow2") cfg.check = SweepCheck::peak_pow2;
    else throw ParseError("check kind must be band|peak-pow2");
  }
  if (cfg.check == SweepCheck::band) {
    cfg.band_lo = detail::field<double>(check, "lo");
    cfg.band_hi = detail::field<double>(check, "hi");
  }
  return cfg;
}

inline SweepConfig read_sweep_file(const std::string& path) {
  return read_sweep_text(detail::read_text(path));
}

}  // namespace cibn
