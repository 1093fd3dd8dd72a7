// Copyright 2026 The gsp Authors. All Rights Reserved.
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
// =============================================================================

// gsp: command-line front end. JSON reports go to stdout (or --output), a
// short human log goes to stderr. The exit status is derived from the
// report's "verdict" field; usage, parse and resource errors exit with 2.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gsp/algorithms.hpp"
#include "gsp/axioms.hpp"
#include "gsp/closure.hpp"
#include "gsp/dot.hpp"
#include "gsp/errors.hpp"
#include "gsp/family.hpp"
#include "gsp/fixtures.hpp"
#include "gsp/io.hpp"
#include "gsp/problems.hpp"

namespace {

using gsp::ElementSet;
using gsp::io::Json;

constexpr int kUsageExit = 2;

struct Options {
  std::string problem;
  std::vector<std::string> inputs;
  std::string output;
  bool builtin_corpus = false;
  std::string axiom;
  std::string policy = "lexicographic";
  std::uint64_t seed = 0;
  std::string order;
  std::string certificate;
  std::string certificate_file;
  bool single_pass = false;
  std::string set;
  std::string targets;
  std::optional<std::size_t> cap_feasibility;
  std::optional<std::size_t> cap_family;
  std::optional<std::size_t> cap_certificate;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_for(const std::string& verdict) {
  static const std::set<std::string> ok = {"ok", "holds", "yes", "solution",
                                           "found"};
  static const std::set<std::string> negative = {"fails", "no", "stuck",
                                                 "absent"};
  if (ok.count(verdict) != 0) return 0;
  if (negative.count(verdict) != 0) return 1;
  return kUsageExit;
}

gsp::Caps caps_of(const Options& opt) {
  gsp::Caps caps = gsp::Caps::from_env();
  auto apply = [](const std::optional<std::size_t>& v, std::size_t& field) {
    if (!v) return;
    if (*v > gsp::Caps::kCeiling) {
      throw UsageError("cap above the ceiling of " +
                       std::to_string(gsp::Caps::kCeiling));
    }
    field = *v;
  };
  apply(opt.cap_feasibility, caps.feasibility);
  apply(opt.cap_family, caps.family);
  apply(opt.cap_certificate, caps.certificate);
  return caps;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t\r\n");
    out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

ElementSet parse_elements(const gsp::GroundSet& ground,
                          const std::string& text) {
  try {
    return ground.subset(split_list(text));
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::size_t> parse_indices(const gsp::GroundSet& ground,
                                       const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& name : split_list(text)) {
    auto idx = ground.index_of(name);
    if (!idx) throw UsageError("unknown element: " + name);
    out.push_back(*idx);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw UsageError("cannot write " + opt.output);
  out << text;
}

int emit_report(const Options& opt, Json report) {
  const std::string verdict = report.at("verdict").get<std::string>();
  emit(opt, report.dump(2) + "\n");
  return exit_for(verdict);
}

gsp::SearchProblem problem_of(const Options& opt) {
  try {
    return gsp::SearchProblem::from_token(opt.problem);
  } catch (const std::domain_error&) {
    throw UsageError("unknown problem: " + opt.problem);
  }
}

gsp::ProblemInstance instance_of(const Options& opt) {
  if (opt.inputs.size() != 1) throw UsageError("exactly one --input required");
  return gsp::ProblemInstance(problem_of(opt),
                              gsp::io::load_graph(opt.inputs.front()),
                              caps_of(opt));
}

void merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

Json header(const Options& opt, const char* verb) {
  Json out;
  out["verb"] = verb;
  out["problem"] = opt.problem;
  return out;
}

void log_trace(const gsp::GroundSet& ground, const gsp::RunTrace& trace) {
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& it = trace.iterations[i];
    std::cerr << "  Y(" << i << ") = " << ground.format(it.current);
    if (it.chosen) {
      std::cerr << "  add " << ground.name(*it.chosen) << " (" << it.candidates
                << " admissible)";
    }
    std::cerr << "\n";
  }
}

int run_enumerate(const Options& opt) {
  const auto instance = instance_of(opt);
  const auto fam = gsp::enumerate_family(instance);
  Json report = header(opt, "enumerate");
  report["verdict"] = "ok";
  report["size"] = fam.size();
  merge(report, gsp::io::family_to_json(fam));
  std::cerr << "family: " << fam.size() << " members, " << fam.bases().size()
            << " bases\n";
  return emit_report(opt, std::move(report));
}

int run_axioms(const Options& opt) {
  std::optional<gsp::Axiom> only;
  if (!opt.axiom.empty()) {
    only = gsp::parse_axiom(opt.axiom);
    if (!only) throw UsageError("unknown axiom: " + opt.axiom);
  }
  const auto instance = instance_of(opt);
  const auto fam = gsp::enumerate_family(instance);
  const auto& ground = fam.ground();
  Json report = header(opt, "axioms");
  if (only) {
    const auto v = gsp::check_axiom(fam, *only);
    report["verdict"] = v.holds ? "holds" : "fails";
    report["axioms"] = Json::array({gsp::io::verdict_to_json(ground, v)});
  } else {
    merge(report, gsp::io::audit_to_json(ground, gsp::implication_audit(fam)));
  }
  for (const auto& v : report["axioms"]) {
    std::cerr << v["axiom"].get<std::string>() << ": "
              << (v["holds"].get<bool>() ? "holds" : "fails");
    if (!v["witness"].is_null()) std::cerr << "  witness " << v["witness"].dump();
    std::cerr << "\n";
  }
  return emit_report(opt, std::move(report));
}

int run_classify(const Options& opt) {
  if (opt.builtin_corpus == !opt.inputs.empty()) {
    throw UsageError("give either --input (repeatable) or --builtin-corpus");
  }
  const auto problem = problem_of(opt);
  std::vector<gsp::Graph> graphs;
  std::vector<std::string> names;
  if (opt.builtin_corpus) {
    for (auto& named : gsp::fixtures::corpus()) {
      names.push_back(named.name);
      graphs.push_back(std::move(named.graph));
    }
  } else {
    for (const auto& path : opt.inputs) {
      names.push_back(path);
      graphs.push_back(gsp::io::load_graph(path));
    }
  }
  const auto verdict = gsp::classify(problem, graphs, caps_of(opt));
  Json report = header(opt, "classify");
  report["verdict"] = "ok";
  report["graphs"] = names;
  Json body = gsp::io::class_verdict_to_json(verdict);
  // Replace corpus indices with graph names.
  for (auto& [axiom, failure] : body["first_failure"].items()) {
    if (!failure.is_null()) failure = names.at(failure.get<std::size_t>());
  }
  merge(report, body);
  std::cerr << "labels: " << report["labels"].dump() << "\n";
  return emit_report(opt, std::move(report));
}

int run_solve(const Options& opt) {
  if (opt.policy != "lexicographic" && opt.policy != "random" &&
      opt.policy != "order") {
    throw UsageError("unknown policy: " + opt.policy);
  }
  if (opt.policy == "order" && opt.order.empty()) {
    throw UsageError("--policy order needs --order");
  }
  const auto instance = instance_of(opt);
  gsp::TieBreakPolicy policy = gsp::Lexicographic{};
  if (opt.policy == "random") {
    policy = gsp::SeededRandom{opt.seed};
  } else if (opt.policy == "order") {
    policy = gsp::ExplicitOrder{parse_indices(instance.ground(), opt.order)};
  }
  const auto trace = gsp::greedy_solve(instance, policy);
  log_trace(instance.ground(), trace);
  Json report = header(opt, "solve");
  report["policy"] = opt.policy;
  merge(report, gsp::io::trace_to_json(instance.ground(), trace));
  return emit_report(opt, std::move(report));
}

int run_verify(const Options& opt) {
  if (opt.certificate.empty() == opt.certificate_file.empty()) {
    throw UsageError("give exactly one of --certificate, --certificate-file");
  }
  const std::string text = opt.certificate_file.empty()
                               ? opt.certificate
                               : read_file(opt.certificate_file);
  const auto instance = instance_of(opt);
  const auto& ground = instance.ground();
  const ElementSet y = parse_elements(ground, text);
  const auto all_orders =
      gsp::verify_certificate(instance, y, gsp::VerifyMode::kAllOrders);
  const auto strict =
      gsp::verify_certificate(instance, y, gsp::VerifyMode::kSinglePass);
  const auto& primary = opt.single_pass ? strict : all_orders;
  log_trace(ground, primary);
  Json report = header(opt, "verify");
  report["verdict"] = std::string(gsp::outcome_name(primary.outcome));
  report["mode"] = opt.single_pass ? "single-pass" : "all-orders";
  report["certificate"] = gsp::io::subset_to_json(ground, y);
  report["is_solution"] = instance.is_solution(y);
  report["modes_agree"] = all_orders.outcome == strict.outcome;
  report["all_orders"] = gsp::io::trace_to_json(ground, all_orders);
  report["single_pass"] = gsp::io::trace_to_json(ground, strict);
  std::cerr << "all-orders: " << gsp::outcome_name(all_orders.outcome)
            << ", strict: " << gsp::outcome_name(strict.outcome) << "\n";
  return emit_report(opt, std::move(report));
}

int run_closure(const Options& opt) {
  const auto instance = instance_of(opt);
  const auto& ground = instance.ground();
  const ElementSet y = parse_elements(ground, opt.set);
  if (!instance.is_feasible(y)) {
    throw UsageError(ground.format(y) + " is not feasible");
  }
  Json report = header(opt, "closure");
  report["set"] = gsp::io::subset_to_json(ground, y);
  report["generic"] =
      gsp::io::closure_to_json(ground, gsp::closure_generic(instance, y));
  report["specific"] = gsp::io::specific_closure_to_json(
      ground, gsp::closure_specific(instance, y));
  if (opt.targets.empty()) {
    report["verdict"] = "ok";
  } else {
    const auto targets = parse_indices(ground, opt.targets);
    const auto trace = gsp::grow_closure_trace(instance, y, targets);
    report["growth"] = gsp::io::growth_to_json(ground, trace);
    report["verdict"] = trace.exhausted() ? "absent" : "found";
  }
  std::cerr << "generic closed sets: " << report["generic"]["closed_sets"].dump()
            << "\n";
  return emit_report(opt, std::move(report));
}

int run_chain(const Options& opt) {
  const auto instance = instance_of(opt);
  const auto fam = gsp::enumerate_family(instance);
  const auto& ground = fam.ground();
  const ElementSet y = parse_elements(ground, opt.set);
  if (!fam.contains(y)) throw UsageError(ground.format(y) + " is not a member");
  const auto preference = parse_indices(ground, opt.order);
  const auto chain = gsp::accessibility_chain(fam, y, preference);
  Json report = header(opt, "chain");
  report["set"] = gsp::io::subset_to_json(ground, y);
  report["verdict"] = chain ? "found" : "absent";
  report["chain"] = chain ? gsp::io::chain_to_json(ground, *chain) : Json(nullptr);
  if (chain) {
    for (std::size_t i = 0; i < chain->links.size(); ++i) {
      std::cerr << (i ? " < " : "") << ground.format(chain->links[i]);
    }
    std::cerr << "\n";
  }
  return emit_report(opt, std::move(report));
}

int run_export_dot(const Options& opt) {
  const auto fam = gsp::enumerate_family(instance_of(opt));
  emit(opt, gsp::export_dot(fam));
  std::cerr << "dot: " << fam.size() << " nodes, "
            << gsp::stuck_members(fam).size() << " stuck\n";
  return 0;
}

void add_common(CLI::App& cmd, Options& opt, bool multi_input = false) {
  cmd.add_option("--problem,-p", opt.problem, "stp | hc | mis")->required();
  auto* input = cmd.add_option("--input,-i", opt.inputs, "graph JSON file");
  if (!multi_input) input->required()->expected(1);
  cmd.add_option("--output,-o", opt.output, "write the report here");
  cmd.add_option("--cap-feasibility", opt.cap_feasibility);
  cmd.add_option("--cap-family", opt.cap_family);
  cmd.add_option("--cap-certificate", opt.cap_certificate);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasible-set systems of graphical search problems"};
  app.require_subcommand(1);
  Options opt;

  auto* enumerate = app.add_subcommand("enumerate", "materialise the family");
  add_common(*enumerate, opt);

  auto* axioms = app.add_subcommand("axioms", "check M1 M2 G1 M2' M2''");
  add_common(*axioms, opt);
  axioms->add_option("--axiom", opt.axiom, "check a single axiom");

  auto* classify = app.add_subcommand("classify", "class labels over a corpus");
  add_common(*classify, opt, true);
  classify->add_flag("--builtin-corpus", opt.builtin_corpus);

  auto* solve = app.add_subcommand("solve", "greedy construction");
  add_common(*solve, opt);
  solve->add_option("--policy", opt.policy, "lexicographic | random | order");
  solve->add_option("--seed", opt.seed);
  solve->add_option("--order", opt.order, "comma-separated elements");

  auto* verify = app.add_subcommand("verify", "certificate check");
  add_common(*verify, opt);
  verify->add_option("--certificate", opt.certificate, "comma-separated");
  verify->add_option("--certificate-file", opt.certificate_file);
  verify->add_flag("--strict-paper,--single-pass", opt.single_pass,
                   "report the single-pass mode as the verdict");

  auto* closure = app.add_subcommand("closure", "closures of a feasible set");
  add_common(*closure, opt);
  closure->add_option("--set", opt.set, "comma-separated")->required();
  closure->add_option("--targets", opt.targets, "grow until one is spanned");

  auto* chain = app.add_subcommand("chain", "accessibility chain to a member");
  add_common(*chain, opt);
  chain->add_option("--set", opt.set, "comma-separated")->required();
  chain->add_option("--order", opt.order, "element preference");

  auto* dot = app.add_subcommand("export-dot", "Graphviz cover diagram");
  add_common(*dot, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (*enumerate) return run_enumerate(opt);
    if (*axioms) return run_axioms(opt);
    if (*classify) return run_classify(opt);
    if (*solve) return run_solve(opt);
    if (*verify) return run_verify(opt);
    if (*closure) return run_closure(opt);
    if (*chain) return run_chain(opt);
    if (*dot) return run_export_dot(opt);
  } catch (const gsp::ResourceError& e) {
    std::cerr << "error: resource cap \"" << e.cap_name() << "\": " << e.what()
              << "\n";
  } catch (const gsp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsageExit;
}
