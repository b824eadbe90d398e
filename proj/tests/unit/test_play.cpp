#include <gtest/gtest.h>

#include "gamesem/builtins.hpp"
#include "gamesem/play.hpp"
#include "support/printing.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gamesem;

namespace {

// The addition arena (N2 × N2) ⇒ N2.
struct AddArena {
  ArenaPtr a = builtins::add_arena(2);
  MoveId q = a->at("R.q");
  MoveId ql = a->at("L.L.q");
  MoveId qr = a->at("L.R.q");
  MoveId l(unsigned n) const { return a->at("L.L." + std::to_string(n)); }
  MoveId r(unsigned n) const { return a->at("L.R." + std::to_string(n)); }
  MoveId res(unsigned n) const { return a->at("R." + std::to_string(n)); }
};

}  // namespace

TEST(Play, LeftToRightMaximalPlayIsLegal) {
  AddArena g;
  const Play s{{g.q, kRoot}, {g.ql, 0}, {g.l(1), 1}, {g.qr, 0}, {g.r(1), 3}, {g.res(2), 0}};
  EXPECT_TRUE(is_legal(*g.a, s));
  EXPECT_TRUE(is_well_bracketed(*g.a, s));
  EXPECT_TRUE(is_complete(*g.a, s));
  EXPECT_TRUE(is_single_threaded(*g.a, s));
}

TEST(Play, ViewsOfAddPlay) {
  AddArena g;
  const Play s{{g.q, kRoot}, {g.ql, 0}, {g.l(1), 1}, {g.qr, 0}};
  EXPECT_EQ(pview(*g.a, s), s);
  EXPECT_EQ(oview(*g.a, s), (Play{{g.q, kRoot}, {g.qr, 0}}));
  const Play t{{g.q, kRoot}, {g.ql, 0}, {g.l(1), 1}, {g.qr, 0}, {g.r(2), 3}};
  EXPECT_EQ(pview(*g.a, t), t);
  EXPECT_EQ(oview(*g.a, t), (Play{{g.q, kRoot}, {g.qr, 0}, {g.r(2), 1}}));
}

TEST(Play, PViewSkipsToJustifierOfOMove) {
  // In N2 ⇒ N2 ⇒ N2 the second argument's answer jumps over the first
  // argument's exchange.
  const ArenaPtr n = make_nat_arena(2);
  const ArenaPtr a = arrow(n, arrow(n, n));
  const MoveId q = a->at("R.R.q");
  const MoveId x = a->at("L.q");
  const MoveId y = a->at("R.L.q");
  const Play s{{q, kRoot}, {x, 0}, {y, 0}};
  EXPECT_FALSE(is_legal(*a, s));  // alternation
  const Play t{{q, kRoot}, {x, 0}, {a->at("L.1"), 1}, {y, 0}, {a->at("R.L.2"), 3}};
  ASSERT_TRUE(is_legal(*a, t));
  EXPECT_EQ(pview(*a, t), t);
  EXPECT_EQ(oview(*a, t), (Play{{q, kRoot}, {y, 0}, {a->at("R.L.2"), 1}}));
}

TEST(Play, Illegal) {
  AddArena g;
  EXPECT_FALSE(is_legal(*g.a, Play{{g.ql, kRoot}}));
  EXPECT_FALSE(is_legal(*g.a, Play{{g.q, kRoot}, {g.ql, 5}}));
  EXPECT_FALSE(is_legal(*g.a, Play{{g.q, kRoot}, {g.l(1), 0}}));
  EXPECT_FALSE(is_justified(*g.a, Play{{99, kRoot}}));
  EXPECT_THROW(pview(*g.a, Play{{g.q, kRoot}, {g.ql, 3}}), MalformedPlay);
  EXPECT_THROW(oview(*g.a, Play{{g.ql, kRoot}}), MalformedPlay);
}

TEST(Play, VisibilityIsEnforced) {
  // The P-move answers a question that is outside the P-view.
  const ArenaPtr n = make_nat_arena(1);
  const ArenaPtr a = arrow(n, n);
  const MoveId q = a->at("R.q");
  const Play s{{q, kRoot}, {a->at("L.q"), 0}, {q, kRoot}, {a->at("R.0"), 0}};
  EXPECT_TRUE(is_justified(*a, s));
  EXPECT_FALSE(is_legal(*a, s));
  EXPECT_FALSE(oracle::legal(*a, s));
}

TEST(Play, Bracketing) {
  AddArena g;
  const Play early{{g.q, kRoot}, {g.ql, 0}, {g.l(0), 1}, {g.res(0), 0}};
  EXPECT_TRUE(is_well_bracketed(*g.a, early));
  EXPECT_TRUE(is_complete(*g.a, early));
  const Play pending{{g.q, kRoot}, {g.ql, 0}};
  EXPECT_TRUE(is_well_bracketed(*g.a, pending));
  EXPECT_FALSE(is_complete(*g.a, pending));
  EXPECT_FALSE(is_complete(*g.a, Play{}));

  // (N1 => N1) => N1: P answers the initial question while O's question
  // to the function argument is still open.
  const ArenaPtr n = make_nat_arena(1);
  const ArenaPtr a = arrow(arrow(n, n), n);
  const Play not_wb{{a->at("R.q"), kRoot}, {a->at("L.R.q"), 0},
                    {a->at("L.L.q"), 1}, {a->at("R.0"), 0}};
  ASSERT_TRUE(is_legal(*a, not_wb));
  EXPECT_FALSE(is_well_bracketed(*a, not_wb));
  EXPECT_FALSE(is_complete(*a, not_wb));
}

TEST(Play, ThreadsAndPInnocence) {
  const ArenaPtr n = make_nat_arena(1);
  const ArenaPtr a = arrow(n, n);
  const MoveId q = a->at("R.q");
  const MoveId x = a->at("L.q");
  const Play two{{q, kRoot}, {x, 0}, {a->at("L.0"), 1}, {a->at("R.0"), 0},
                 {q, kRoot}, {x, 4}, {a->at("L.0"), 5}, {a->at("R.1"), 4}};
  ASSERT_TRUE(is_legal(*a, two));
  EXPECT_FALSE(is_single_threaded(*a, two));
  // Same P-view (q x 0) in both threads, different replies.
  EXPECT_FALSE(is_p_innocent(*a, two));
  // O-views keep the first thread, so O is unconstrained here.
  EXPECT_TRUE(is_o_innocent(*a, two));
  Play same = two;
  same[7].move = a->at("R.0");
  EXPECT_TRUE(is_p_innocent(*a, same));
}

TEST(Play, OInnocenceComparesOViews) {
  AddArena g;
  // qL is asked twice from the same O-view; O must answer alike.
  const Play differ{{g.q, kRoot}, {g.ql, 0}, {g.l(0), 1}, {g.ql, 0}, {g.l(1), 3}};
  ASSERT_TRUE(is_legal(*g.a, differ));
  EXPECT_FALSE(is_o_innocent(*g.a, differ));
  Play same = differ;
  same[4].move = g.l(0);
  EXPECT_TRUE(is_o_innocent(*g.a, same));
}

TEST(Play, LiftToTest) {
  AddArena g;
  const Play s{{g.q, kRoot}, {g.ql, 0}};
  const Play lifted = lift_to_test(*g.a, s);
  const auto qs = static_cast<MoveId>(g.a->size());
  EXPECT_EQ(lifted, (Play{{qs, kRoot}, {g.q, 0}, {g.ql, 1}}));
  const ArenaPtr t = arrow(g.a, make_sigma());
  EXPECT_TRUE(is_legal(*t, lifted));
}

TEST(Play, Prefixes) {
  AddArena g;
  const Play s{{g.q, kRoot}, {g.ql, 0}};
  const auto p = prefixes(s);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_TRUE(p[0].empty());
  EXPECT_EQ(p[2], s);
}

// ---- properties over generated plays ----

class PlayProperty : public ::testing::TestWithParam<int> {};

TEST_P(PlayProperty, ViewsMatchRecursiveDefinition) {
  gen::Rng rng(GetParam());
  for (int i = 0; i < 60; ++i) {
    const ArenaPtr a = gen::arena(rng, 2);
    const Play s = gen::play(rng, *a, {8, false, false});
    ASSERT_TRUE(is_legal(*a, s));
    ASSERT_TRUE(oracle::legal(*a, s));
    for (std::size_t n = 0; n <= s.size(); ++n) {
      const Play pre(s.begin(), s.begin() + n);
      EXPECT_EQ(std::optional<Play>(pview_trusted(*a, s, n)), oracle::pview(*a, pre));
      EXPECT_EQ(std::optional<Play>(oview_trusted(*a, s, n)), oracle::oview(*a, pre));
    }
  }
}

TEST_P(PlayProperty, LegalityMatchesDefinitionOnPerturbedPlays) {
  gen::Rng rng(GetParam() + 1000);
  for (int i = 0; i < 60; ++i) {
    const ArenaPtr a = gen::arena(rng, 2);
    Play s = gen::play(rng, *a, {7, false, false});
    if (s.empty()) continue;
    std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
    std::uniform_int_distribution<MoveId> mv(0, static_cast<MoveId>(a->size() - 1));
    const std::size_t k = pos(rng);
    std::uniform_int_distribution<std::int32_t> ptr(-1, static_cast<std::int32_t>(k) - 1);
    if (rng() % 2) s[k].move = mv(rng); else s[k].ptr = ptr(rng);
    EXPECT_EQ(is_legal(*a, s), oracle::legal(*a, s));
  }
}

TEST_P(PlayProperty, ViewsAreLegalAndIdempotent) {
  gen::Rng rng(GetParam() + 2000);
  for (int i = 0; i < 60; ++i) {
    const ArenaPtr a = gen::arena(rng, 2);
    const Play s = gen::play(rng, *a, {8, false, false});
    const Play pv = pview(*a, s);
    const Play ov = oview(*a, s);
    EXPECT_TRUE(is_legal(*a, pv));
    EXPECT_TRUE(is_legal(*a, ov));
    EXPECT_EQ(pview(*a, pv), pv);
    EXPECT_EQ(oview(*a, ov), ov);
    // Every prefix of an O-view is the O-view of itself.
    for (std::size_t n = 0; n <= ov.size(); ++n) {
      EXPECT_EQ(oview_trusted(*a, ov, n), Play(ov.begin(), ov.begin() + n));
    }
  }
}

TEST_P(PlayProperty, BracketingSurvivesOViews) {
  gen::Rng rng(GetParam() + 3000);
  for (int i = 0; i < 60; ++i) {
    const ArenaPtr a = gen::arena(rng, 2);
    const Play s = gen::play(rng, *a, {8, true, true});
    ASSERT_TRUE(is_well_bracketed(*a, s));
    for (std::size_t n = 0; n <= s.size(); ++n) {
      EXPECT_TRUE(is_well_bracketed(*a, oview_trusted(*a, s, n)));
    }
  }
}

TEST_P(PlayProperty, TestDuality) {
  gen::Rng rng(GetParam() + 4000);
  const ArenaPtr n2 = make_nat_arena(2);
  const std::vector<ArenaPtr> arenas{make_sigma(), n2, arrow(n2, n2)};
  for (int i = 0; i < 30; ++i) {
    const ArenaPtr& a = arenas[i % arenas.size()];
    const Play t = gen::play(rng, *a, {8, true, false});
    if (t.empty()) continue;
    const ArenaPtr test = arrow(a, make_sigma());
    const Play qt = lift_to_test(*a, t);
    ASSERT_TRUE(is_legal(*test, qt));
    EXPECT_EQ(pview(*test, qt), lift_to_test(*a, oview(*a, t)));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PlayProperty, ::testing::Range(1, 6));
