#include <gtest/gtest.h>

#include <random>

#include "cra/errors.hpp"
#include "cra/normalize.hpp"
#include "cra/relational.hpp"
#include "cra/semantics.hpp"
#include "test_util.hpp"

using namespace cra;
using cra::testing::dbg;
using cra::testing::random_term;

TEST(Normalize, TestCase) {
  Model m = relational_model(3);
  StateSet t = StateSet::of({0, 2});
  CanonicalHead h = head_normal(m, mk_test(m, t));
  EXPECT_EQ(h.t, t);
  EXPECT_TRUE(h.t_abort.empty());
  EXPECT_TRUE(h.branches.empty());
}

TEST(Normalize, AtomCase) {
  Model m = relational_model(3);
  Atom a = pgm(m, Rel::of(3, {{0, 1}}));
  CanonicalHead h = head_normal(m, mk_atomic(m, a));
  EXPECT_TRUE(h.t.empty());
  EXPECT_TRUE(h.t_abort.empty());
  ASSERT_EQ(h.branches.size(), 1U);
  EXPECT_EQ(h.branches[0].atom, a);
  EXPECT_EQ(h.branches[0].rest, mk_nil());
}

TEST(Normalize, ParOfTwoSteps) {
  Model m = relational_model(2);
  Atom a = pgm(m, Rel::of(2, {{0, 1}}));
  Atom b = env(m, Rel::univ(2));
  Command c = mk_par(mk_seq(mk_atomic(m, a), mk_nil()), mk_seq(mk_atomic(m, b), mk_nil()));
  CanonicalHead h = head_normal(m, c);
  EXPECT_TRUE(h.t.empty());
  EXPECT_TRUE(h.t_abort.empty());
  ASSERT_EQ(h.branches.size(), 1U);
  EXPECT_EQ(h.branches[0].atom, m.sync(a, b));
  EXPECT_EQ(h.branches[0].rest, mk_par(mk_nil(), mk_nil()));
  Engine e(m, 3);
  EXPECT_TRUE(e.check_equal(c, reassemble(m, h)).holds);
}

TEST(Normalize, NilAndOmega) {
  Model m = relational_model(2);
  CanonicalHead h = head_normal(m, normalize_to_depth(m, mk_nil(), 3));
  EXPECT_EQ(h.t, m.all_states());
  EXPECT_TRUE(h.branches.empty());

  Atom a = pgm(m, Rel::univ(2)) | env(m, Rel::id(2));
  Command w = mk_omega(mk_atomic(m, a));
  CanonicalHead hw = head_normal(m, w);
  EXPECT_EQ(hw.t, m.all_states());
  EXPECT_TRUE(hw.t_abort.empty());
  ASSERT_EQ(hw.branches.size(), 1U);
  EXPECT_EQ(hw.branches[0].atom, a);
  Engine e(m, 5);
  EXPECT_TRUE(e.check_equal(hw.branches[0].rest, w).holds);
}

TEST(Normalize, ReassemblySoundness) {
  Model m = relational_model(2);
  std::mt19937_64 rng(21);
  Engine e(m, 4);
  for (int i = 0; i < 400; ++i) {
    Command c = random_term(m, rng, 1 + static_cast<int>(rng() % 8));
    Command r = reassemble(m, head_normal(m, c));
    ASSERT_TRUE(e.check_equal(c, r).holds) << dbg(c);
  }
}

TEST(Normalize, ToDepthAgreesWithOracle) {
  Model m = relational_model(2);
  std::mt19937_64 rng(22);
  Engine e(m, 4);
  for (int i = 0; i < 200; ++i) {
    Command c = random_term(m, rng, 1 + static_cast<int>(rng() % 8));
    ASSERT_TRUE(e.check_equal(c, normalize_to_depth(m, c, 4)).holds) << dbg(c);
  }
}

TEST(Normalize, HeadIsIdempotent) {
  Model m = relational_model(2);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    Command c = random_term(m, rng, 1 + static_cast<int>(rng() % 8));
    CanonicalHead h = head_normal(m, c);
    ASSERT_EQ(head_normal(m, reassemble(m, h)), h) << dbg(c);
  }
}

TEST(Normalize, BudgetAndDomain) {
  Model m = relational_model(2);
  Command c = mk_omega(mk_omega(mk_omega(mk_atomic(m, m.alpha()))));
  EXPECT_THROW(head_normal(m, c, 2), UnfoldBudgetExceeded);
  EXPECT_THROW(normalize_to_depth(m, c, -1), DomainError);
}
