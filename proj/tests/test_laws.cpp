#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "cra/errors.hpp"
#include "cra/laws.hpp"
#include "cra/syntax.hpp"

using namespace cra;

namespace {

Model model_of(ModelKind k, int states = 2) {
  SyntaxConfig cfg;
  cfg.kind = k;
  cfg.states = states;
  return parse_model("", cfg);
}

}  // namespace

TEST(Laws, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto* list : {&law_catalogue(), &disputed_laws(), &corrupted_laws()})
    for (const auto& l : *list) EXPECT_TRUE(names.insert(l.name).second) << l.name;
  for (const auto& l : disputed_laws()) EXPECT_FALSE(l.note.empty()) << l.name;
  EXPECT_NE(find_law("atomic-interchange"), nullptr);
  EXPECT_NE(find_law("par-assoc"), nullptr);
  EXPECT_NE(find_law("corrupt-omega-unfold"), nullptr);
  EXPECT_EQ(find_law("no-such-law"), nullptr);
}

TEST(Laws, SuitePassesOnEveryModel) {
  for (ModelKind k : {ModelKind::Relational, ModelKind::Ccs, ModelKind::Csp, ModelKind::Sccs}) {
    for (const auto& r : run_suite(model_of(k), 20, 7, 4))
      EXPECT_TRUE(r.passed) << to_string(k) << "\n" << format_result(r);
  }
}

TEST(Laws, CorruptedLawsFail) {
  Model m = model_of(ModelKind::Relational);
  for (const auto& l : corrupted_laws()) {
    LawResult r = run_law(m, l, 50, 1, 4);
    EXPECT_FALSE(r.passed) << l.name;
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_FALSE(r.counterexample->witness.empty());
  }
}

TEST(Laws, DisputedLawsFail) {
  EXPECT_FALSE(run_law(model_of(ModelKind::Relational), *find_law("par-assoc"), 200, 1, 6).passed);
  EXPECT_FALSE(run_law(model_of(ModelKind::Csp), *find_law("csp-prefix-sync"), 100, 1, 5).passed);
}

TEST(Laws, Deterministic) {
  Model m = model_of(ModelKind::Relational, 3);
  const LawCase& l = *find_law("corrupt-atomic-interchange");
  EXPECT_EQ(format_result(run_law(m, l, 30, 9, 5)), format_result(run_law(m, l, 30, 9, 5)));
  LawResult a = run_law(m, *find_law("choice-assoc"), 10, 1, 4);
  LawResult b = run_law(m, *find_law("choice-assoc"), 10, 2, 4);
  EXPECT_TRUE(a.passed && b.passed);
}

TEST(Laws, Formats) {
  LawResult r = run_law(model_of(ModelKind::Relational), *find_law("choice-comm"), 5, 1, 3);
  EXPECT_EQ(format_result(r), "choice-comm lattice PASS trials=5\n");
  auto j = nlohmann::json::parse(format_result_json(r));
  EXPECT_EQ(j["law"], "choice-comm");
  EXPECT_EQ(j["ref"], "lattice");
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_TRUE(j["witness"].is_null());

  LawResult f =
      run_law(model_of(ModelKind::Relational), *find_law("corrupt-conj-abort"), 50, 1, 3);
  auto k = nlohmann::json::parse(format_result_json(f));
  EXPECT_EQ(k["status"], "FAIL");
  EXPECT_TRUE(k["witness"].is_string());
}

TEST(Laws, ModelRestrictions) {
  Model rel = model_of(ModelKind::Relational);
  EXPECT_THROW(run_law(rel, *find_law("ccs-sync-or-interleave"), 1, 1, 3), ConfigError);
  EXPECT_THROW(run_law(rel, *find_law("choice-comm"), 0, 1, 3), ConfigError);
  Model csp = model_of(ModelKind::Csp);
  EXPECT_THROW(run_law(csp, *find_law("guard-merge"), 1, 1, 3), ConfigError);
}
