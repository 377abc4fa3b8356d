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
//
// Command-line surface for the library: build family networks, run queries,
// compare encodings, check d-separation, run benchmark sweeps, reorder
// causes. Results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 ok, 1 comparison/benchmark failure, 2 parse error,
// 3 semantic error, 4 impossible evidence, 5 cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cibn/cibn.hpp"

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cibn::SpecError("cannot write " + path);
  out << text;
}

cibn::Evidence parse_evidence(const std::vector<std::string>& pairs) {
  cibn::Evidence evidence;
  for (const auto& pair : pairs) {
    auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size())
      throw cibn::SpecError("evidence must be NAME=STATE, got " + pair);
    evidence[pair.substr(0, eq)] = pair.substr(eq + 1);
  }
  return evidence;
}

// Reads either a family-spec file or a model file carrying a family block;
// returns the spec and, for model files, the stored network.
struct ComparableInput {
  cibn::FamilySpec spec;
  std::optional<cibn::BeliefNetwork> stored;
};

ComparableInput read_comparable(const std::string& path) {
  const std::string text = cibn::detail::read_text(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(cibn::detail::strip_comment_lines(text));
  } catch (const nlohmann::json::exception& e) {
    throw cibn::ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format"))
    throw cibn::ParseError("missing format tag");
  const std::string format = j["format"].get<std::string>();
  if (format == cibn::kFamilyFormat) return {cibn::read_family_text(text), std::nullopt};
  if (format == cibn::kModelFormat) {
    cibn::ParsedModel model = cibn::read_model_text(text);
    if (!model.family)
      throw cibn::SpecError("model file has no family block to compare against");
    return {*model.family, std::move(model.net)};
  }
  throw cibn::ParseError("unsupported format " + format);
}

int cmd_build(const std::string& spec_path, const std::string& encoding_name,
              const std::string& out_path) {
  cibn::FamilySpec spec = cibn::read_family_file(spec_path);
  cibn::Encoding encoding = cibn::encoding_from_string(encoding_name);
  cibn::BeliefNetwork net = cibn::build_family(spec, encoding);
  write_output(out_path, cibn::write_model_file(net, &spec));
  return 0;
}

int cmd_query(const std::string& model_path, const std::string& query,
              const std::vector<std::string>& evidence_pairs, const std::string& engine,
              bool costs) {
  cibn::ParsedModel model = cibn::read_model_file(model_path);
  cibn::CompiledNetwork net = cibn::compile(model.net);
  cibn::Evidence evidence = parse_evidence(evidence_pairs);

  cibn::Distribution posterior;
  double p_ev = 0.0;
  std::optional<cibn::CostReport> cost;
  if (engine == "ve") {
    cibn::QueryAnswer answer = cibn::eliminate(net, query, evidence);
    posterior = std::move(answer.posterior);
    p_ev = answer.evidence_probability;
    cost = std::move(answer.cost);
  } else if (engine == "enum") {
    cibn::PosteriorResult r = cibn::enumerate_posterior(net, query, evidence);
    posterior = std::move(r.posterior);
    p_ev = r.evidence_probability;
  } else {
    throw cibn::SpecError("engine must be ve or enum");
  }

  std::cout << "query: " << posterior.variable << "\n";
  std::cout << "posterior:\n";
  for (std::size_t s = 0; s < posterior.states.size(); ++s)
    std::cout << "  " << posterior.states[s] << ": " << fmt(posterior.probs[s]) << "\n";
  std::cout << "p(evidence): " << fmt(p_ev) << "\n";
  if (costs && cost) {
    std::cout << "costs:\n";
    std::cout << "  multiply_adds: " << cost->multiply_add_count << "\n";
    std::cout << "  max_factor_entries: " << cost->max_factor_entries << "\n";
    std::cout << "  elimination_order: ";
    for (std::size_t i = 0; i < cost->elimination_order.size(); ++i)
      std::cout << (i ? "," : "") << cost->elimination_order[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_compare(const std::string& path, double tolerance) {
  ComparableInput input = read_comparable(path);
  cibn::CompareOptions options;
  options.tolerance = tolerance;
  cibn::CompareReport report =
      cibn::compare_family(input.spec, input.stored ? &*input.stored : nullptr, options);

  std::cout << "compare: " << (cibn::family_is_adder(input.spec) ? "noisy-adder" : "noisy-or")
            << " n=" << cibn::family_cause_count(input.spec) << "\n";
  std::cout << "sources:";
  for (const auto& s : report.sources) std::cout << " " << s;
  std::cout << " (oracle runs: " << report.oracle_runs << ")\n";
  for (const auto& line : report.lines)
    std::cout << "  " << line.item << ": " << fmt(line.deviation) << "\n";
  std::cout << "max deviation: " << fmt(report.max_deviation) << "\n";
  const bool ok = report.within(tolerance);
  std::cout << "verdict: " << (ok ? "OK" : "MISMATCH") << " (tolerance " << fmt(tolerance)
            << ")\n";
  return ok ? 0 : 1;
}

int cmd_dsep(const std::string& model_path, const std::string& x, const std::string& y,
             const std::string& z) {
  cibn::ParsedModel model = cibn::read_model_file(model_path);
  cibn::DSeparationResult r =
      cibn::d_separated(model.net, split_list(x), split_list(y), split_list(z));
  std::cout << "d-separated: " << (r.separated ? "yes" : "no") << "\n";
  if (!r.separated) {
    cibn::CompiledNetwork net = cibn::compile(model.net);
    std::cout << "active path: ";
    for (std::size_t i = 0; i < r.active_path.size(); ++i) {
      if (i) {
        const int prev = net.require_var(r.active_path[i - 1]);
        const int cur = net.require_var(r.active_path[i]);
        bool prev_is_parent = false;
        for (int p : net.parents[cur]) prev_is_parent |= (p == prev);
        std::cout << (prev_is_parent ? " -> " : " <- ");
      }
      std::cout << r.active_path[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& config_path) {
  cibn::SweepConfig cfg = cibn::read_sweep_file(config_path);
  cibn::SweepResult result = cibn::run_sweep(cfg);

  std::cout << "# sweep: " << cibn::to_string(cfg.family) << " axis=" << cfg.axis
            << " seed=" << cfg.seed << " query=" << cfg.query << " evidence=" << cfg.evidence
            << "\n";
  std::cout << cfg.axis << "\tmultiply_adds\tmax_factor_entries\n";
  for (const auto& row : result.rows)
    std::cout << row.value << "\t" << row.cost.multiply_add_count << "\t"
              << row.cost.max_factor_entries << "\n";

  const char* metric =
      cfg.metric == cibn::SweepMetric::multiply_adds ? "multiply_adds" : "max_factor_entries";
  const char* model =
      cfg.model == cibn::FitModel::polynomial ? "log-log slope" : "successive ratio";
  std::cout << "fit: " << model << " of " << metric << " = " << fmt(result.fitted) << "\n";
  if (cfg.check == cibn::SweepCheck::peak_pow2)
    std::cout << "check: max_factor_entries == 2^" << cfg.axis << " at every point\n";
  else
    std::cout << "check: fitted value in [" << fmt(cfg.band_lo) << ", " << fmt(cfg.band_hi)
              << "]\n";
  std::cout << "verdict: " << (result.pass ? "PASS" : "FAIL") << "\n";
  return result.pass ? 0 : 1;
}

int cmd_reorder(const std::string& spec_path, const std::string& causes,
                const std::string& out_path) {
  cibn::FamilySpec spec = cibn::read_family_file(spec_path);
  std::set<int> evidence_causes;
  for (const auto& item : split_list(causes)) {
    try {
      evidence_causes.insert(std::stoi(item));
    } catch (const std::exception&) {
      throw cibn::SpecError("bad cause index " + item);
    }
  }
  std::vector<int> perm = cibn::reorder_causes(spec, evidence_causes);
  cibn::FamilySpec permuted = cibn::apply_permutation(spec, perm);
  write_output(out_path, cibn::write_family_file(permuted, &perm));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete belief networks with causal-independence families"};
  app.require_subcommand(1);

  std::string spec_path, model_path, config_path, out_path;
  std::string encoding = "temporal", engine = "ve", query;
  std::string x, y, z, causes;
  std::vector<std::string> evidence;
  bool costs = false;
  double tolerance = 1e-9;

  auto* build = app.add_subcommand("build", "build a network from a family spec");
  build->add_option("spec", spec_path, "family-spec file")->required();
  build->add_option("--encoding", encoding, "atemporal|temporal|explicit");
  build->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* q = app.add_subcommand("query", "posterior of one variable given evidence");
  q->add_option("model", model_path, "model file")->required();
  q->add_option("--query", query, "query variable")->required();
  q->add_option("--evidence", evidence, "observed NAME=STATE (repeatable)");
  q->add_option("--engine", engine, "ve|enum");
  q->add_flag("--costs", costs, "print the cost report (ve engine)");

  auto* cmp = app.add_subcommand("compare", "check that all encodings of a family agree");
  cmp->add_option("spec", config_path, "family-spec file, or model file with family block")
      ->required();
  cmp->add_option("--tolerance", tolerance, "max allowed deviation");

  auto* ds = app.add_subcommand("dsep", "d-separation of two variable sets given a third");
  ds->add_option("model", model_path, "model file")->required();
  ds->add_option("--x", x, "comma-separated variables")->required();
  ds->add_option("--y", y, "comma-separated variables")->required();
  ds->add_option("--z", z, "comma-separated conditioning variables");

  auto* bench = app.add_subcommand("bench", "run a complexity sweep from a config file");
  bench->add_option("config", config_path, "sweep-config file")->required();

  auto* re = app.add_subcommand("reorder", "move evidence causes to the end of the chain");
  re->add_option("spec", spec_path, "family-spec file")->required();
  re->add_option("--evidence-causes", causes, "comma-separated cause indices")->required();
  re->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return cmd_build(spec_path, encoding, out_path);
    if (q->parsed()) return cmd_query(model_path, query, evidence, engine, costs);
    if (cmp->parsed()) return cmd_compare(config_path, tolerance);
    if (ds->parsed()) return cmd_dsep(model_path, x, y, z);
    if (bench->parsed()) return cmd_bench(config_path);
    if (re->parsed()) return cmd_reorder(spec_path, causes, out_path);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cibn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cibn::EvidenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const cibn::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const cibn::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
