#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamesem/bounds.hpp"
#include "gamesem/observation.hpp"
#include "gamesem/strategy.hpp"

namespace gamesem {

enum class EquivVerdict { EquivAtBounds, Inequiv };
const char* to_string(EquivVerdict v);

struct EquivReport {
  EquivVerdict verdict = EquivVerdict::EquivAtBounds;
  Bounds bounds;
  // A member of exactly one of the two obs values, minimal by total move
  // count then lexicographically; preferring one that the other side
  // fails as a test.
  std::optional<ODetSet> witness;
  std::size_t bound_exceeded = 0;
};

// Compares obs(s1) and obs(s2) at b. Throws GameError on distinct arenas.
EquivReport obs_equiv(const InnocentStrategy& s1, const InnocentStrategy& s2,
                      const Bounds& b);

// Every closed O-deterministic set of well-bracketed single-threaded O-views
// over `arena` with views of length <= max_view_len and a common initial
// move, ordered by total move count then lexicographically. Numerals are
// bounded by the arena itself.
std::vector<ODetSet> enumerate_odet_sets(const ArenaPtr& arena,
                                         std::size_t max_view_len);

enum class LeqVerdict { HoldsAtBounds, Fails };
const char* to_string(LeqVerdict v);

struct LeqReport {
  LeqVerdict verdict = LeqVerdict::HoldsAtBounds;
  Bounds bounds;
  std::optional<ODetSet> witness;
  std::size_t tests_run = 0;
  // Tests skipped because either side exceeded its budget.
  std::size_t bound_exceeded = 0;
};

// run_test(s1, S) = TOP implies run_test(s2, S) = TOP for every S from
// enumerate_odet_sets(arena, b.max_view_len).
LeqReport brute_force_leq_ib(const InnocentStrategy& s1,
                             const InnocentStrategy& s2, const Bounds& b);

// obs_equiv cross-checked against brute_force_leq_ib in both directions.
// A comparison is inconclusive when a test was skipped for exceeding its
// budget or when the obs witness has a view longer than max_view_len
// (the enumeration cannot reach it).
struct OracleReport {
  LeqReport forward;
  LeqReport backward;
  bool conclusive = true;
  bool agrees = true;
};
OracleReport cross_check(const InnocentStrategy& s1, const InnocentStrategy& s2,
                         const EquivReport& verdict, const Bounds& b);

struct LawCheck {
  std::string law;       // "identity", "associativity" or "congruence"
  std::string instance;  // human-readable description
  bool passed = false;
  std::optional<ODetSet> witness;
  std::size_t bound_exceeded = 0;
};

struct LawReport {
  Bounds bounds;
  std::vector<LawCheck> checks;
  bool all_passed() const;
};

// Identity, associativity and congruence over the built-in corpus.
LawReport check_category_laws(const Bounds& b);

// Individual law instances, reused by the report and by tests.
LawCheck check_identity(const InnocentStrategy& sigma, const Bounds& b);
LawCheck check_associativity(const InnocentStrategy& s,
                             const InnocentStrategy& t,
                             const InnocentStrategy& u, const Bounds& b);
LawCheck check_congruence(const InnocentStrategy& s1,
                          const InnocentStrategy& s2,
                          const InnocentStrategy& tau, const Bounds& b);

}  // namespace gamesem
