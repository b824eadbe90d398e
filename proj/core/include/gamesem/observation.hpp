#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/bounds.hpp"
#include "gamesem/play.hpp"
#include "gamesem/strategy.hpp"

namespace gamesem {

using ViewSet = std::set<Play>;

// ovw(s): the O-views of every prefix of s (ε included).
ViewSet ovw(const Arena& arena, const Play& s);

// Determinacy on O-moves (pointer included), single-threaded elements,
// one common initial move. P-moves may branch freely.
bool is_o_deterministic(const Arena& arena, const ViewSet& views);

// Adds the O-view of every prefix of every element. Prefixes of an O-view
// are O-views, so this is prefix closure.
ViewSet close_views(const Arena& arena, const ViewSet& views);

// A closed, O-deterministic set of well-bracketed single-threaded O-views
// over `arena`, sharing one initial move.
class ODetSet {
 public:
  // Validates and closes. Throws GameError on a non-O-view element, a
  // determinacy violation, or a multi-threaded / badly bracketed element.
  ODetSet(ArenaPtr arena, ViewSet views);

  const Arena& arena() const { return *arena_; }
  const ArenaPtr& arena_ptr() const { return arena_; }
  const ViewSet& views() const { return views_; }
  std::optional<MoveId> initial() const;
  // Whether construction had to add prefixes.
  bool closure_added() const { return closure_added_; }
  // Sum of view lengths.
  std::size_t total_moves() const;

  friend bool operator==(const ODetSet& a, const ODetSet& b) {
    return a.views_ == b.views_;
  }

 private:
  ArenaPtr arena_;
  ViewSet views_;
  bool closure_added_ = false;
};

// A set of O-view sets. Not every value is an observational strategy in
// the strict sense; is_observational decides that.
class ObservationalStrategy {
 public:
  ObservationalStrategy(ArenaPtr arena, std::set<ViewSet> sets,
                        Bounds bounds = {}, std::size_t bound_exceeded = 0);

  const Arena& arena() const { return *arena_; }
  const ArenaPtr& arena_ptr() const { return arena_; }
  const std::set<ViewSet>& sets() const { return sets_; }
  const Bounds& bounds() const { return bounds_; }
  std::size_t bound_exceeded() const { return bound_exceeded_; }

  friend bool operator==(const ObservationalStrategy& a,
                         const ObservationalStrategy& b) {
    return a.sets_ == b.sets_;
  }

 private:
  ArenaPtr arena_;
  std::set<ViewSet> sets_;
  Bounds bounds_;
  std::size_t bound_exceeded_ = 0;
};

// The test α_S : A ⇒ Σ. Throws GameError if some complete element of S
// also has an O-move continuation in S.
InnocentStrategy alpha(const ODetSet& s);

enum class TestVerdict { Top, Bot, BoundExceeded };
const char* to_string(TestVerdict v);

// σ;α_S observed at Σ. The interaction may contain at most
// b.max_play_len moves of A (the Σ question and answer are extra).
TestVerdict run_test(const InnocentStrategy& sigma, const ODetSet& s,
                     const Bounds& b);

// { ovw(s) : s complete, single-threaded, O-innocent trace, |s| <= bound }.
ObservationalStrategy obs(const InnocentStrategy& sigma, const Bounds& b);

// ∀S ∈ x ∃T ∈ y. T ⊆ S
bool leq_os(const ObservationalStrategy& x, const ObservationalStrategy& y);
bool leq_os(const std::set<ViewSet>& x, const std::set<ViewSet>& y);

// Any two distinct members first differ at an O-move.
bool is_observational(const Arena& arena, const std::set<ViewSet>& sets);

// Distinct members related by inclusion, if any.
std::optional<std::pair<ViewSet, ViewSet>> find_strict_inclusion(
    const std::set<ViewSet>& sets);

bool includes(const ViewSet& big, const ViewSet& small);

}  // namespace gamesem
