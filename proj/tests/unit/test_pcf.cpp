#include <gtest/gtest.h>

#include <random>

#include "gamesem/builtins.hpp"
#include "gamesem/equiv.hpp"
#include "gamesem/pcf.hpp"

using namespace gamesem;
using namespace gamesem::pcf;

namespace {

Bounds bounds(unsigned nat, std::size_t len, unsigned depth = 4) {
  Bounds b;
  b.max_nat = nat;
  b.max_play_len = len;
  b.fix_depth = depth;
  return b;
}

InnocentStrategy den(const std::string& src, const Bounds& b) {
  return denote(parse(src), b);
}

// The numeral a closed nat term evaluates to, read off the strategy.
std::optional<unsigned> value_of(const InnocentStrategy& s) {
  const Reply r = s.respond(Play{{0, kRoot}});
  if (!r.is_move()) return std::nullopt;
  return static_cast<unsigned>(std::stoul(s.arena().name(r.response.move)));
}

bool equiv(const std::string& a, const std::string& b, const Bounds& bd) {
  return obs_equiv(den(a, bd), den(b, bd), bd).verdict == EquivVerdict::EquivAtBounds;
}

}  // namespace

TEST(PcfParse, Basics) {
  EXPECT_EQ(to_string(parse("3")), "3");
  EXPECT_EQ(to_string(parse("fun x: nat -> succ x")), "(fun x: nat -> (succ x))");
  EXPECT_EQ(to_string(parse("f x y")), "((f x) y)");
  EXPECT_EQ(to_string(parse("1 + 2 + 3")), "((1 + 2) + 3)");
  EXPECT_EQ(to_string(parse("succ f x")), "(succ (f x))");
  EXPECT_EQ(to_string(parse("fix (fun f: nat -> nat -> f)")),
            "(fix (fun f: nat -> nat -> f))");
  EXPECT_EQ(to_string(parse("fun f: (nat -> nat) -> nat -> f 0")),
            "(fun f: (nat -> nat) -> nat -> (f 0))");
  EXPECT_EQ(to_string(parse("#pragma add_rl\n1 + 2")), "(1 +rl 2)");
  EXPECT_EQ(to_string(parse("# comment\n  ifz 0 then 1 else 2 # trailing\n")),
            "(ifz 0 then 1 else 2)");
}

TEST(PcfParse, PositionsAreRecorded) {
  const TermPtr t = parse("\n  succ 1");
  EXPECT_EQ(t->pos.line, 2);
  EXPECT_EQ(t->pos.column, 3);
}

TEST(PcfParse, ErrorsCarryPositions) {
  try {
    parse("fun x: nat ->\n  (succ x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 3);
    EXPECT_EQ(e.pos().column, 1);
    EXPECT_NE(std::string(e.what()).find("reached end of input"), std::string::npos);
  }
  try {
    parse("1 @ 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().column, 3);
  }
  EXPECT_THROW(parse("fun x -> x"), ParseError);
  EXPECT_THROW(parse("1 2 )"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("ifz 1 then 2"), ParseError);
}

TEST(PcfTypes, Examples) {
  EXPECT_EQ(typecheck(parse("fun x: nat -> fun y: nat -> x + y")).to_string(),
            "nat -> nat -> nat");
  EXPECT_EQ(typecheck(parse("fun f: (nat -> nat) -> f 1")).to_string(),
            "(nat -> nat) -> nat");
  EXPECT_EQ(typecheck(parse("fix (fun f: nat -> nat -> f)")).to_string(), "nat -> nat");
  EXPECT_TRUE(typecheck(parse("omega")).is_nat());
  EXPECT_EQ(typecheck(parse("x"), {{"x", Type::nat()}}), Type::nat());
}

TEST(PcfTypes, Errors) {
  EXPECT_THROW(typecheck(parse("x")), TypeError);
  EXPECT_THROW(typecheck(parse("succ (fun x: nat -> x)")), TypeError);
  EXPECT_THROW(typecheck(parse("1 2")), TypeError);
  EXPECT_THROW(typecheck(parse("fix (fun x: nat -> 1) 2")), TypeError);
  EXPECT_THROW(typecheck(parse("fix 1")), TypeError);
  try {
    typecheck(parse("ifz 0 then 1 else (fun x: nat -> x)"));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_NE(std::string(e.what()).find("ifz branches differ: nat vs nat -> nat"),
              std::string::npos);
    EXPECT_EQ(std::string(e.what()).rfind("1:1:", 0), 0u);
  }
}

TEST(PcfDenote, Numerals) {
  const Bounds b = bounds(3, 6);
  const InnocentStrategy three = den("3", b);
  EXPECT_EQ(three.arena().id(), "N3");
  EXPECT_EQ(value_of(three), 3u);
  EXPECT_EQ(value_of(den("succ 3", b)), 3u);
  EXPECT_EQ(value_of(den("pred 0", b)), 0u);
  EXPECT_EQ(value_of(den("2 + 1 + 1", b)), 3u);
  EXPECT_EQ(value_of(den("omega", b)), std::nullopt);
  EXPECT_EQ(value_of(den("4", b)), 3u);
  EXPECT_THROW(den("x", b), TypeError);
}

TEST(PcfDenote, TypeArenas) {
  EXPECT_EQ(type_arena(typecheck(parse("fun x: nat -> fun y: nat -> x")), 2)->id(),
            "(N2 => (N2 => N2))");
  EXPECT_EQ(type_arena(typecheck(parse("fun f: (nat -> nat) -> f 0")), 1)->id(),
            "((N1 => N1) => N1)");
}

TEST(PcfDenote, AdditionMatchesBuiltins) {
  const Bounds b = bounds(2, 6);
  const InnocentStrategy lr = den("fun x: nat -> fun y: nat -> x + y", b);
  const InnocentStrategy rl = den("#pragma add_rl\nfun x: nat -> fun y: nat -> x + y", b);
  EXPECT_EQ(traces(lr, b).plays, traces(builtins::add_lr(2).rehome(lr.arena_ptr()), b).plays);
  EXPECT_EQ(traces(rl, b).plays, traces(builtins::add_rl(2).rehome(rl.arena_ptr()), b).plays);
  EXPECT_NE(traces(lr, b).plays, traces(rl, b).plays);
}

TEST(PcfDenote, BetaConversion) {
  const Bounds b = bounds(3, 6);
  EXPECT_TRUE(equiv("(fun x: nat -> succ x) 2", "succ 2", b));
  EXPECT_TRUE(equiv("(fun f: nat -> nat -> f 1) (fun y: nat -> y + y)", "2", b));
  EXPECT_TRUE(equiv("fun y: nat -> (fun x: nat -> x + 1) y", "fun y: nat -> y + 1", b));
}

TEST(PcfDenote, HigherTypeConditional) {
  const Bounds b = bounds(2, 6);
  EXPECT_TRUE(equiv("fun x: nat -> ifz x then (fun y: nat -> y) else (fun y: nat -> 0)",
                    "fun x: nat -> fun y: nat -> ifz x then y else 0", b));
  EXPECT_FALSE(equiv("fun x: nat -> ifz x then (fun y: nat -> y) else (fun y: nat -> 0)",
                     "fun x: nat -> fun y: nat -> ifz x then 0 else y", b));
}

TEST(PcfDenote, FixpointsUnfoldToDepth) {
  const std::string rec =
      "fix (fun f: nat -> nat -> fun n: nat -> ifz n then 0 else succ (f (pred n)))";
  // n = 2 asks its argument three times, so plays need eight moves.
  EXPECT_TRUE(equiv(rec, "fun n: nat -> n", bounds(2, 8, 3)));
  EXPECT_FALSE(equiv(rec, "fun n: nat -> n", bounds(2, 8, 2)));
  EXPECT_FALSE(equiv(rec, "fun n: nat -> n", bounds(2, 6, 3)));
  EXPECT_TRUE(equiv("fix (fun x: nat -> x)", "omega", bounds(2, 6)));
  EXPECT_TRUE(obs(den("fix (fun x: nat -> x)", bounds(2, 6)), bounds(2, 6)).sets().empty());
}

TEST(PcfDenote, FixIsMonotoneInDepth) {
  const std::string rec =
      "fix (fun f: nat -> nat -> fun n: nat -> ifz n then 0 else succ (f (pred n)))";
  for (unsigned k = 1; k < 4; ++k) {
    const Bounds lo = bounds(3, 6, k);
    const Bounds hi = bounds(3, 6, k + 1);
    const ObservationalStrategy a = obs(den(rec, lo), lo);
    const ObservationalStrategy c = obs(den(rec, hi), hi);
    EXPECT_TRUE(leq_os(a, c));
    EXPECT_TRUE(std::includes(c.sets().begin(), c.sets().end(), a.sets().begin(),
                              a.sets().end()));
  }
}

// ---- closed nat terms against a direct evaluator ----

namespace {

struct Gen {
  std::mt19937_64 rng;
  unsigned max_nat;

  unsigned pick(unsigned n) { return static_cast<unsigned>(rng() % n); }

  // Source text and its value, saturating like the model.
  std::pair<std::string, unsigned> nat_term(int depth) {
    const unsigned choice = depth <= 0 ? 0 : pick(6);
    switch (choice) {
      case 1: {
        auto [s, v] = nat_term(depth - 1);
        return {"succ (" + s + ")", std::min(v + 1, max_nat)};
      }
      case 2: {
        auto [s, v] = nat_term(depth - 1);
        return {"pred (" + s + ")", v == 0 ? 0 : v - 1};
      }
      case 3: {
        auto [a, x] = nat_term(depth - 1);
        auto [b, y] = nat_term(depth - 1);
        return {"(" + a + ") + (" + b + ")", std::min(x + y, max_nat)};
      }
      case 4: {
        auto [c, x] = nat_term(depth - 1);
        auto [t, y] = nat_term(depth - 1);
        auto [e, z] = nat_term(depth - 1);
        return {"ifz (" + c + ") then (" + t + ") else (" + e + ")", x == 0 ? y : z};
      }
      case 5: {
        auto [a, x] = nat_term(depth - 1);
        return {"(fun v: nat -> v + v) (" + a + ")", std::min(x + x, max_nat)};
      }
      default: {
        const unsigned n = pick(max_nat + 1);
        return {std::to_string(n), n};
      }
    }
  }
};

}  // namespace

class PcfEval : public ::testing::TestWithParam<int> {};

TEST_P(PcfEval, DenotationAgreesWithEvaluation) {
  Gen g{std::mt19937_64(GetParam()), 3};
  const Bounds b = bounds(3, 4);
  for (int i = 0; i < 25; ++i) {
    const auto [src, v] = g.nat_term(3);
    EXPECT_EQ(value_of(den(src, b)), v) << src;
  }
}

TEST_P(PcfEval, PrintedTermsParseBack) {
  Gen g{std::mt19937_64(GetParam() + 77), 3};
  for (int i = 0; i < 25; ++i) {
    const std::string printed = to_string(parse(g.nat_term(3).first));
    EXPECT_EQ(to_string(parse(printed)), printed);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PcfEval, ::testing::Range(1, 6));
