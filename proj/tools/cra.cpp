// Command-line front end.
//
//   cra check  "c [= d"   refinement, counterexample on failure
//   cra equal  "c = d"    equality
//   cra normalize "c"     canonical form to the observation depth
//   cra traces "c"        behaviours from every initial state
//   cra laws [--law NAME] the law catalogue
//
// Exit status: 0 holds / all pass, 1 fails, 2 usage, parse or configuration error.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cra/errors.hpp"
#include "cra/laws.hpp"
#include "cra/normalize.hpp"
#include "cra/semantics.hpp"
#include "cra/syntax.hpp"

namespace {

struct Options {
  std::string model = "rel";
  int states = 3;
  int depth = cra::kDefaultDepth;
  int trials = 200;
  std::uint64_t seed = 1;
  std::string output = "text";
  std::string law;
  std::string source;
};

bool json(const Options& o) { return o.output == "json-lines"; }

cra::SyntaxConfig syntax_config(const Options& o) {
  static const std::map<std::string, cra::ModelKind> kinds = {
      {"rel", cra::ModelKind::Relational},
      {"ccs", cra::ModelKind::Ccs},
      {"csp", cra::ModelKind::Csp},
      {"sccs", cra::ModelKind::Sccs}};
  cra::SyntaxConfig cfg;
  cfg.kind = kinds.at(o.model);
  cfg.states = o.states;
  cfg.depth = o.depth;
  return cfg;
}

int run_query(const Options& o, cra::Query::Relation expected) {
  cra::Query q = cra::parse_query(o.source, syntax_config(o));
  if (q.relation != expected)
    throw cra::ConfigError(expected == cra::Query::Relation::Refines
                               ? "check expects a refinement 'c [= d'"
                               : "equal expects an equation 'c = d'");
  cra::Engine e(q.model, o.depth);
  cra::Verdict v = expected == cra::Query::Relation::Refines ? e.check_refines(q.lhs, q.rhs)
                                                             : e.check_equal(q.lhs, q.rhs);
  std::string failed;
  if (!v.holds)
    failed = v.direction == cra::Verdict::Direction::Forward ? "lhs [= rhs" : "rhs [= lhs";
  if (json(o)) {
    nlohmann::ordered_json j;
    j["query"] = o.source;
    j["verdict"] = v.holds ? "holds" : "fails";
    j["failed"] = v.holds ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(failed);
    j["witness"] = v.holds ? nlohmann::ordered_json(nullptr)
                           : nlohmann::ordered_json(cra::format_behavior(q.model, *v.witness));
    std::cout << j.dump() << '\n';
  } else if (v.holds) {
    std::cout << "verdict: holds\n";
  } else {
    std::cout << "verdict: fails\n"
              << "failed: " << failed << '\n'
              << "witness: " << cra::format_behavior(q.model, *v.witness) << '\n';
  }
  return v.holds ? 0 : 1;
}

int run_normalize(const Options& o) {
  cra::Program p = cra::parse_program(o.source, syntax_config(o));
  cra::Command n = cra::normalize_to_depth(p.model, p.term, o.depth);
  std::string text = cra::print(p.model, n);
  if (json(o)) {
    nlohmann::ordered_json j;
    j["term"] = text;
    j["depth"] = o.depth;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
  return 0;
}

int run_traces(const Options& o) {
  cra::Program p = cra::parse_program(o.source, syntax_config(o));
  cra::Engine e(p.model, o.depth);
  for (int s = 0; s < p.model.num_states(); ++s) {
    for (const auto& b : e.behaviors(p.term, s)) {
      std::string line = cra::format_behavior(p.model, b);
      if (json(o)) {
        nlohmann::ordered_json j;
        j["initial"] = s;
        j["outcome"] = std::string(cra::to_string(b.outcome));
        j["trace"] = line;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << line << '\n';
      }
    }
  }
  return 0;
}

int run_laws(const Options& o) {
  cra::SyntaxConfig cfg = syntax_config(o);
  std::size_t used = 0;
  cra::Model m = cra::parse_model(o.source, cfg, &used);
  if (used != o.source.size()) throw cra::ConfigError("laws takes only alphabet declarations");
  std::vector<cra::LawResult> results;
  if (!o.law.empty()) {
    const cra::LawCase* l = cra::find_law(o.law);
    if (!l) throw cra::ConfigError("unknown law '" + o.law + "'");
    results.push_back(cra::run_law(m, *l, o.trials, o.seed, o.depth));
  } else {
    results = cra::run_suite(m, o.trials, o.seed, o.depth);
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << (json(o) ? cra::format_result_json(r) : cra::format_result(r));
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrent refinement algebra: refinement checking, normal forms and law testing"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--model", o.model, "Atomic-step model")
        ->check(CLI::IsMember({"rel", "ccs", "csp", "sccs"}));
    sub->add_option("--states", o.states, "State count of the relational model")
        ->check(CLI::Range(1, 5));
    sub->add_option("--depth", o.depth, "Observation depth k")->check(CLI::Range(0, 12));
    sub->add_option("--output", o.output, "Output format")
        ->check(CLI::IsMember({"text", "json-lines"}));
  };

  auto* check = app.add_subcommand("check", "Decide c [= d at depth k");
  check->add_option("query", o.source, "Refinement 'c [= d'")->required();
  auto* equal = app.add_subcommand("equal", "Decide c = d at depth k");
  equal->add_option("query", o.source, "Equation 'c = d'")->required();
  auto* normalize = app.add_subcommand("normalize", "Print the canonical form to depth k");
  normalize->add_option("term", o.source, "Term")->required();
  auto* traces = app.add_subcommand("traces", "List behaviours from each initial state");
  traces->add_option("term", o.source, "Term")->required();
  auto* laws = app.add_subcommand("laws", "Run the law catalogue");
  laws->add_option("--law", o.law, "Run a single law by name");
  laws->add_option("--trials", o.trials, "Random instances per law")->check(CLI::PositiveNumber);
  laws->add_option("--seed", o.seed, "Generator seed");
  laws->add_option("--declarations", o.source, "Alphabet declarations for event models");
  for (auto* sub : {check, equal, normalize, traces, laws}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_query(o, cra::Query::Relation::Refines);
    if (equal->parsed()) return run_query(o, cra::Query::Relation::Equal);
    if (normalize->parsed()) return run_normalize(o);
    if (traces->parsed()) return run_traces(o);
    return run_laws(o);
  } catch (const cra::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
