#include <gtest/gtest.h>

#include <random>

#include "cra/relational.hpp"
#include "cra/rely_guarantee.hpp"
#include "cra/semantics.hpp"
#include "test_util.hpp"

using namespace cra;
using cra::testing::dbg;
using cra::testing::random_term;

namespace {

Rel random_rel(int n, std::mt19937_64& rng) {
  return Rel(n, rng() & ((std::uint64_t{1} << (n * n)) - 1));
}

struct Step {
  bool program;
  int from, to;
};

// A single concrete run: one fixed step after another, then termination.
Command run_of(const Model& m, const std::vector<Step>& steps) {
  int n = m.num_states();
  Command c = mk_nil();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    Rel r = Rel::of(n, {{it->from, it->to}});
    c = mk_seq(mk_atomic(m, it->program ? pgm(m, r) : env(m, r)), c);
  }
  return mk_seq(mk_test(m, StateSet::of({steps.empty() ? 0 : steps.front().from})), c);
}

std::vector<Step> random_run(int n, int len, std::mt19937_64& rng) {
  std::vector<Step> out;
  int s = static_cast<int>(rng() % static_cast<unsigned>(n));
  for (int i = 0; i < len; ++i) {
    int t = static_cast<int>(rng() % static_cast<unsigned>(n));
    out.push_back({rng() % 2 == 0, s, t});
    s = t;
  }
  return out;
}

}  // namespace

TEST(RelyGuarantee, GuardMerge) {
  Model m = relational_model(3);
  std::mt19937_64 rng(51);
  Engine e(m, 6);
  for (int i = 0; i < 200; ++i) {
    Rel g1 = random_rel(3, rng), g2 = random_rel(3, rng);
    ASSERT_TRUE(e.check_equal(mk_conj(guard(m, g1), guard(m, g2)), guard(m, g1 & g2)).holds);
  }
}

TEST(RelyGuarantee, EassumeMerge) {
  Model m = relational_model(3);
  std::mt19937_64 rng(52);
  Engine e(m, 6);
  for (int i = 0; i < 200; ++i) {
    Rel r1 = random_rel(3, rng), r2 = random_rel(3, rng);
    ASSERT_TRUE(
        e.check_equal(mk_conj(eassume(m, r1), eassume(m, r2)), eassume(m, r1 & r2)).holds);
  }
}

TEST(RelyGuarantee, DistributionOverSequence) {
  Model m = relational_model(3);
  std::mt19937_64 rng(53);
  Engine e(m, 6);
  for (int i = 0; i < 200; ++i) {
    Rel g = random_rel(3, rng), r = random_rel(3, rng);
    Command c = random_term(m, rng, 1 + static_cast<int>(rng() % 4));
    Command d = random_term(m, rng, 1 + static_cast<int>(rng() % 4));
    Command gg = guar(m, g), rr = rely(m, r);
    ASSERT_TRUE(e.check_equal(mk_conj(gg, mk_seq(c, d)), mk_seq(mk_conj(gg, c), mk_conj(gg, d)))
                    .holds)
        << dbg(c) << "\n" << dbg(d);
    ASSERT_TRUE(e.check_equal(mk_conj(rr, mk_seq(c, d)), mk_seq(mk_conj(rr, c), mk_conj(rr, d)))
                    .holds)
        << dbg(c) << "\n" << dbg(d);
  }
}

TEST(RelyGuarantee, GuaranteeStrengthening) {
  Model m = relational_model(3);
  std::mt19937_64 rng(54);
  Engine e(m, 6);
  for (int i = 0; i < 200; ++i) {
    Rel g1 = random_rel(3, rng), g2 = random_rel(3, rng);
    EXPECT_TRUE(e.refines(guar(m, g1 | g2), guar(m, g1)));
    EXPECT_EQ(e.refines(guar(m, g1), guar(m, g2)), g2.subset_of(g1));
  }
}

TEST(RelyGuarantee, GuaranteeAdmitsExactlyGoodRuns) {
  Model m = relational_model(3);
  std::mt19937_64 rng(55);
  Engine e(m, 5);
  for (int i = 0; i < 300; ++i) {
    Rel g = random_rel(3, rng);
    auto steps = random_run(3, static_cast<int>(rng() % 5), rng);
    bool good = true;
    for (const auto& s : steps) good = good && (!s.program || g.contains(s.from, s.to));
    ASSERT_EQ(e.refines(guar(m, g), run_of(m, steps)), good);
  }
}

TEST(RelyGuarantee, RelyAbortsAfterABadEnvironmentStep) {
  Model m = relational_model(3);
  std::mt19937_64 rng(56);
  Engine e(m, 5);
  for (int i = 0; i < 300; ++i) {
    Rel r = random_rel(3, rng);
    auto steps = random_run(3, 1 + static_cast<int>(rng() % 4), rng);
    bool bad = false;
    for (const auto& s : steps) bad = bad || (!s.program && !r.contains(s.from, s.to));
    Command run = run_of(m, steps);
    ASSERT_TRUE(e.refines(rely(m, r), run));
    ASSERT_EQ(e.refines(rely(m, r), mk_seq(run, mk_abort())), bad);
  }
}

TEST(RelyGuarantee, UniversalRelyIsChaos) {
  Model m = relational_model(3);
  EXPECT_TRUE(equal(m, eassume(m, Rel::univ(3)), mk_atomic(m, m.alpha()), 3).holds);
  EXPECT_TRUE(equal(m, rely(m, Rel::univ(3)), chaos(m), 6).holds);
}

TEST(RelyGuarantee, AssumeIteration) {
  Model m = relational_model(2);
  std::mt19937_64 rng(57);
  Engine e(m, 5);
  for (int i = 0; i < 100; ++i) {
    Atom a = pgm(m, random_rel(2, rng)) | env(m, random_rel(2, rng));
    Command aw = mk_omega(mk_atomic(m, a));
    Command rhs = mk_choice(aw, mk_seq(aw, mk_seq(mk_atomic(m, m.negate(a)), mk_abort())));
    ASSERT_TRUE(e.check_equal(mk_omega(assume(m, a)), rhs).holds);
  }
}

TEST(RelyGuarantee, Quintuple) {
  Model m = relational_model(2);
  RGSpec s{m.all_states(), Rel::univ(2), Rel::id(2), guar(m, Rel::id(2))};
  auto [spec, impl] = quintuple(m, s, guar(m, Rel::id(2)));
  EXPECT_TRUE(refines(m, spec, impl, 6).holds);
  // a program step outside the guarantee breaks it
  auto [spec2, impl2] = quintuple(m, s, mk_atomic(m, pgm(m, Rel::of(2, {{0, 1}}))));
  EXPECT_FALSE(refines(m, spec2, impl2, 6).holds);
}
