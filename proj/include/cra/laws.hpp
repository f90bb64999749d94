#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cra/command.hpp"
#include "cra/model.hpp"
#include "cra/relational.hpp"
#include "cra/semantics.hpp"

namespace cra {

/// Random instantiation of law holes.
class Gen {
 public:
  Gen(const Model& m, std::mt19937_64& rng, int size, int depth)
      : m_(m), rng_(rng), size_(size), depth_(depth) {}

  const Model& model() const { return m_; }
  int depth() const { return depth_; }

  int uniform(int lo, int hi);
  bool coin(int one_in);

  StateSet test();
  Rel rel();
  Atom atom();
  /// An atom with at least one feasible step.
  Atom feasible_atom();
  Command command() { return command(uniform(1, size_)); }
  Command command(int size);
  /// Built without ⊥ and without ω or ∞ iteration, so it never aborts.
  Command abort_free(int size);
  /// Stutter-closed event processes: prefixes, choice, sequencing, idle^ω and idle^ω;⊤.
  Command process(int size);

 private:
  Command leaf();
  Command body(int size);

  const Model& m_;
  std::mt19937_64& rng_;
  int size_;
  int depth_;
};

struct LawInstance {
  Command lhs;
  Command rhs;
};

struct LawCase {
  enum class Relation { Equal, Refines };

  std::string name;
  /// Short category tag shown in reports.
  std::string ref;
  Relation relation = Relation::Equal;
  /// Proof relies on sequential composition distributing over non-empty
  /// choices on the left.
  bool conjunctive = false;
  /// Models the law is stated for; empty means all.
  std::vector<ModelKind> models;
  /// Default command size for holes.
  int size = 4;
  std::function<LawInstance(Gen&)> instantiate;
  /// Why a disputed law is kept out of the suite.
  std::string note;

  bool applies_to(ModelKind k) const;
};

struct Counterexample {
  std::string lhs;
  std::string rhs;
  std::string witness;
  /// "lhs [= rhs" or "rhs [= lhs": the refinement that failed.
  std::string failed;
};

struct LawResult {
  std::string name;
  std::string ref;
  bool passed = true;
  int trials = 0;
  std::optional<Counterexample> counterexample;
};

/// Every law, axiom and lemma checked by the suite.
const std::vector<LawCase>& law_catalogue();
/// Stated laws that fail in the trace model; reachable only by name.
const std::vector<LawCase>& disputed_laws();
/// Deliberately wrong laws, reachable only by name; used to show the harness can fail.
const std::vector<LawCase>& corrupted_laws();
/// Searches all three lists.
const LawCase* find_law(const std::string& name);

/// Runs `trials` random instances at depth `depth`; stops at the first failure.
LawResult run_law(const Model& m, const LawCase& law, int trials, std::uint64_t seed, int depth);
/// All catalogue laws that apply to the model, in catalogue order.
std::vector<LawResult> run_suite(const Model& m, int trials, std::uint64_t seed, int depth);

/// `<name> <ref> PASS|FAIL trials=<n>` plus indented counterexample lines on failure.
std::string format_result(const LawResult& r);
/// One JSON object per line: law, ref, status, trials, witness.
std::string format_result_json(const LawResult& r);

}  // namespace cra
