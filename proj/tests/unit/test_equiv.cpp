#include <gtest/gtest.h>

#include "gamesem/builtins.hpp"
#include "gamesem/equiv.hpp"
#include "support/printing.hpp"
#include "support/corpus.hpp"

using namespace gamesem;

namespace {

Bounds bounds(unsigned nat, std::size_t len, std::size_t view) {
  Bounds b;
  b.max_nat = nat;
  b.max_play_len = len;
  b.max_view_len = view;
  return b;
}

}  // namespace

TEST(Equiv, AdditionOrderIsUnobservable) {
  const Bounds b = bounds(2, 6, 6);
  const InnocentStrategy lr = builtins::add_lr(2);
  const InnocentStrategy rl = builtins::add_rl(2);
  EXPECT_NE(traces(lr, b).plays, traces(rl, b).plays);
  const EquivReport r = obs_equiv(lr, rl, b);
  EXPECT_EQ(r.verdict, EquivVerdict::EquivAtBounds);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.bounds, b);
  EXPECT_EQ(r.bound_exceeded, 0u);
}

TEST(Equiv, RepeatedQuestionsAreUnobservable) {
  const Bounds b = bounds(2, 8, 6);
  EXPECT_EQ(obs_equiv(builtins::add_lr(2), builtins::add_twice(2), b).verdict,
            EquivVerdict::EquivAtBounds);
  // add_twice needs eight moves; at six it has no complete plays left.
  EXPECT_EQ(obs_equiv(builtins::add_lr(2), builtins::add_twice(2), bounds(2, 6, 6)).verdict,
            EquivVerdict::Inequiv);
}

TEST(Equiv, ProjectionIsDistinguished) {
  const Bounds b = bounds(2, 6, 6);
  const InnocentStrategy add = builtins::add_lr(2);
  const InnocentStrategy proj = builtins::proj_left(2);
  const EquivReport r = obs_equiv(add, proj, b);
  ASSERT_EQ(r.verdict, EquivVerdict::Inequiv);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(run_test(add, *r.witness, b), TestVerdict::Top);
  EXPECT_EQ(run_test(proj, *r.witness, b), TestVerdict::Bot);
  const Arena& a = add.arena();
  bool asks_right = false;
  for (const Play& v : r.witness->views()) {
    if (v.size() == 2 && v[1].move == a.at("L.R.q")) asks_right = true;
  }
  EXPECT_TRUE(asks_right);
}

TEST(Equiv, DifferentArenasAreRejected) {
  const Bounds b = bounds(2, 6, 6);
  EXPECT_THROW(obs_equiv(builtins::succ(2), builtins::add_lr(2), b), GameError);
  EXPECT_THROW(brute_force_leq_ib(builtins::succ(2), builtins::succ(3), b), GameError);
}

TEST(Enumerate, SmallArenas) {
  const auto sigma = enumerate_odet_sets(make_sigma(), 4);
  ASSERT_EQ(sigma.size(), 2u);
  EXPECT_EQ(sigma[0].views(), (ViewSet{{}, {{0, kRoot}}}));
  EXPECT_EQ(sigma[1].views(), (ViewSet{{}, {{0, kRoot}}, {{0, kRoot}, {1, 0}}}));
  // {q}, {q, q0}, {q, q1}, {q, q0, q1}
  EXPECT_EQ(enumerate_odet_sets(make_nat_arena(1), 4).size(), 4u);
  EXPECT_EQ(enumerate_odet_sets(make_nat_arena(1), 1).size(), 1u);
}

TEST(Enumerate, OrderedAndValid) {
  const ArenaPtr n = make_nat_arena(1);
  const ArenaPtr a = arrow(n, n);
  const auto sets = enumerate_odet_sets(a, 4);
  ASSERT_FALSE(sets.empty());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    EXPECT_FALSE(sets[i].closure_added());
    EXPECT_TRUE(is_o_deterministic(*a, sets[i].views()));
    for (const Play& v : sets[i].views()) EXPECT_LE(v.size(), 4u);
    if (i > 0) {
      const auto prev = sets[i - 1].total_moves();
      const auto cur = sets[i].total_moves();
      EXPECT_TRUE(prev < cur || (prev == cur && sets[i - 1].views() < sets[i].views()));
    }
  }
}

TEST(BruteForce, SigmaTopAndBottom) {
  const Bounds b = bounds(1, 4, 4);
  const LeqReport down = brute_force_leq_ib(sigma_top(), sigma_bottom(), b);
  EXPECT_EQ(down.verdict, LeqVerdict::Fails);
  ASSERT_TRUE(down.witness);
  EXPECT_EQ(down.witness->views(), (ViewSet{{}, {{0, kRoot}}, {{0, kRoot}, {1, 0}}}));
  const LeqReport up = brute_force_leq_ib(sigma_bottom(), sigma_top(), b);
  EXPECT_EQ(up.verdict, LeqVerdict::HoldsAtBounds);
  EXPECT_EQ(up.tests_run, 2u);
}

TEST(BruteForce, AdditionBothWays) {
  const Bounds b = bounds(1, 6, 4);
  const InnocentStrategy lr = builtins::add_lr(1);
  const InnocentStrategy rl = builtins::add_rl(1);
  EXPECT_EQ(brute_force_leq_ib(lr, rl, b).verdict, LeqVerdict::HoldsAtBounds);
  EXPECT_EQ(brute_force_leq_ib(rl, lr, b).verdict, LeqVerdict::HoldsAtBounds);
  const LeqReport r = brute_force_leq_ib(lr, builtins::proj_left(1), b);
  EXPECT_EQ(r.verdict, LeqVerdict::Fails);
  // The projection passes everything the sum passes that never asks right.
  EXPECT_EQ(brute_force_leq_ib(builtins::proj_left(1), lr, b).verdict, LeqVerdict::Fails);
}

TEST(CrossCheck, AgreesOnCorpusPairs) {
  const Bounds b = bounds(1, 8, 6);
  for (const corpus::Pair& p : corpus::pairs(b)) {
    const EquivReport r = obs_equiv(p.left, p.right, b);
    const OracleReport o = cross_check(p.left, p.right, r, b);
    EXPECT_TRUE(o.agrees) << p.name;
    EXPECT_TRUE(o.conclusive) << p.name;
  }
}

TEST(Laws, IndividualChecks) {
  const Bounds b = bounds(2, 8, 6);
  const LawCheck id = check_identity(builtins::add_lr(2), b);
  EXPECT_TRUE(id.passed);
  EXPECT_EQ(id.law, "identity");
  EXPECT_THROW(check_identity(builtins::numeral(1, 2), b), GameError);
  EXPECT_TRUE(check_associativity(builtins::numeral_thunk(1, 2), builtins::succ(2),
                                  builtins::pred(2), b)
                  .passed);
  const LawCheck vac =
      check_congruence(builtins::add_lr(2), builtins::proj_left(2), builtins::succ(2), b);
  EXPECT_TRUE(vac.passed);
  EXPECT_NE(vac.instance.find("vacuous"), std::string::npos);
  const LawCheck cong =
      check_congruence(builtins::add_lr(2), builtins::add_rl(2), builtins::succ(2), b);
  EXPECT_TRUE(cong.passed);
  EXPECT_EQ(cong.instance.find("vacuous"), std::string::npos);
}

TEST(Laws, ReportAtDefaultBounds) {
  const LawReport r = check_category_laws(Bounds{});
  EXPECT_GE(r.checks.size(), 10u);
  for (const LawCheck& c : r.checks) {
    EXPECT_TRUE(c.passed) << c.law << ": " << c.instance;
    EXPECT_EQ(c.bound_exceeded, 0u) << c.instance;
  }
  EXPECT_TRUE(r.all_passed());
}
