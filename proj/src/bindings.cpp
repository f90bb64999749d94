// Python bindings: the CLI subcommands as functions over term strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>

#include "cra/errors.hpp"
#include "cra/laws.hpp"
#include "cra/normalize.hpp"
#include "cra/semantics.hpp"
#include "cra/syntax.hpp"

namespace py = pybind11;

namespace {

cra::SyntaxConfig config(const std::string& model, int states, int depth) {
  static const std::map<std::string, cra::ModelKind> kinds = {
      {"rel", cra::ModelKind::Relational},
      {"ccs", cra::ModelKind::Ccs},
      {"csp", cra::ModelKind::Csp},
      {"sccs", cra::ModelKind::Sccs}};
  auto it = kinds.find(model);
  if (it == kinds.end()) throw cra::ConfigError("unknown model '" + model + "'");
  if (states < 1 || states > 5) throw cra::ConfigError("states must be in 1..5");
  if (depth < 0 || depth > 12) throw cra::ConfigError("depth must be in 0..12");
  cra::SyntaxConfig cfg;
  cfg.kind = it->second;
  cfg.states = states;
  cfg.depth = depth;
  return cfg;
}

py::dict verdict(const std::string& query, cra::Query::Relation want, const std::string& model,
                 int states, int depth) {
  cra::Query q = cra::parse_query(query, config(model, states, depth));
  if (q.relation != want)
    throw cra::ConfigError(want == cra::Query::Relation::Refines ? "expected 'c [= d'"
                                                                 : "expected 'c = d'");
  cra::Engine e(q.model, depth);
  cra::Verdict v = want == cra::Query::Relation::Refines ? e.check_refines(q.lhs, q.rhs)
                                                         : e.check_equal(q.lhs, q.rhs);
  py::dict out;
  out["holds"] = v.holds;
  out["failed"] = v.holds ? py::none()
                          : py::cast(v.direction == cra::Verdict::Direction::Forward
                                         ? "lhs [= rhs"
                                         : "rhs [= lhs");
  out["witness"] = v.holds ? py::none() : py::cast(cra::format_behavior(q.model, *v.witness));
  return out;
}

py::dict law_record(const cra::LawResult& r) {
  py::dict d;
  d["law"] = r.name;
  d["ref"] = r.ref;
  d["status"] = r.passed ? "PASS" : "FAIL";
  d["trials"] = r.trials;
  d["witness"] = r.counterexample ? py::cast(r.counterexample->witness) : py::none();
  if (r.counterexample) {
    d["failed"] = r.counterexample->failed;
    d["lhs"] = r.counterexample->lhs;
    d["rhs"] = r.counterexample->rhs;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(cra, m) {
  m.doc() = "Concurrent refinement algebra: refinement checking, normal forms and law testing";

  static py::exception<cra::Error> error(m, "Error");
  static py::exception<cra::ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cra::ParseError& e) {
      parse_error(e.what());
    } catch (const cra::Error& e) {
      error(e.what());
    }
  });

  m.def(
      "check",
      [](const std::string& query, const std::string& model, int states, int depth) {
        return verdict(query, cra::Query::Relation::Refines, model, states, depth);
      },
      py::arg("query"), py::arg("model") = "rel", py::arg("states") = 3,
      py::arg("depth") = cra::kDefaultDepth, "Decide 'c [= d'.");

  m.def(
      "equal",
      [](const std::string& query, const std::string& model, int states, int depth) {
        return verdict(query, cra::Query::Relation::Equal, model, states, depth);
      },
      py::arg("query"), py::arg("model") = "rel", py::arg("states") = 3,
      py::arg("depth") = cra::kDefaultDepth, "Decide 'c = d'.");

  m.def(
      "normalize",
      [](const std::string& term, const std::string& model, int states, int depth) {
        cra::Program p = cra::parse_program(term, config(model, states, depth));
        return cra::print(p.model, cra::normalize_to_depth(p.model, p.term, depth));
      },
      py::arg("term"), py::arg("model") = "rel", py::arg("states") = 3,
      py::arg("depth") = cra::kDefaultDepth, "Canonical form to the observation depth.");

  m.def(
      "traces",
      [](const std::string& term, const std::string& model, int states, int depth) {
        cra::Program p = cra::parse_program(term, config(model, states, depth));
        cra::Engine e(p.model, depth);
        std::vector<std::string> out;
        for (int s = 0; s < p.model.num_states(); ++s)
          for (const auto& b : e.behaviors(p.term, s))
            out.push_back(cra::format_behavior(p.model, b));
        return out;
      },
      py::arg("term"), py::arg("model") = "rel", py::arg("states") = 3,
      py::arg("depth") = cra::kDefaultDepth, "Behaviours from every initial state.");

  m.def(
      "laws",
      [](const std::string& model, int states, int depth, int trials, std::uint64_t seed,
         const std::optional<std::string>& law, const std::string& declarations) {
        cra::SyntaxConfig cfg = config(model, states, depth);
        std::size_t used = 0;
        cra::Model md = cra::parse_model(declarations, cfg, &used);
        if (used != declarations.size())
          throw cra::ConfigError("declarations hold only alphabet declarations");
        py::list out;
        if (law) {
          const cra::LawCase* l = cra::find_law(*law);
          if (!l) throw cra::ConfigError("unknown law '" + *law + "'");
          out.append(law_record(cra::run_law(md, *l, trials, seed, depth)));
        } else {
          for (const auto& r : cra::run_suite(md, trials, seed, depth)) out.append(law_record(r));
        }
        return out;
      },
      py::arg("model") = "rel", py::arg("states") = 3, py::arg("depth") = cra::kDefaultDepth,
      py::arg("trials") = 200, py::arg("seed") = 1, py::arg("law") = py::none(),
      py::arg("declarations") = "", "Run the law catalogue, or one law by name.");

  m.def(
      "law_names",
      [](const std::optional<std::string>& model) {
        std::optional<cra::ModelKind> kind;
        if (model) kind = config(*model, 1, 0).kind;
        std::vector<std::string> out;
        for (const auto& l : cra::law_catalogue())
          if (!kind || l.applies_to(*kind)) out.push_back(l.name);
        return out;
      },
      py::arg("model") = py::none(), "Names in the default suite, in order.");
}
