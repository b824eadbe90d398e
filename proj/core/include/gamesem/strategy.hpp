#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/bounds.hpp"
#include "gamesem/play.hpp"

namespace gamesem {

// A P-move together with its justifier, as an index into whatever
// sequence the reply refers to (a view, or a whole play).
struct Response {
  MoveId move;
  std::int32_t ptr;

  friend auto operator<=>(const Response&, const Response&) = default;
};

// What a strategy does at a P-position. Stuck means the view is outside
// the view function's domain; BoundExceeded means a composition ran out
// of interaction budget before deciding. The two are never conflated.
struct Reply {
  enum class Kind : std::uint8_t { Move, Stuck, BoundExceeded };

  Kind kind = Kind::Stuck;
  Response response{0, kRoot};

  static Reply move(MoveId m, std::int32_t ptr) { return {Kind::Move, {m, ptr}}; }
  static Reply stuck() { return {}; }
  static Reply bound_exceeded() { return {Kind::BoundExceeded, {0, kRoot}}; }

  bool is_move() const { return kind == Kind::Move; }
  friend bool operator==(const Reply&, const Reply&) = default;
};

// The intensional core of an innocent strategy: maps a P-view (a legal
// play ending in an O-move and equal to its own P-view) to a response
// whose pointer is relative to that view.
class ViewFunction {
 public:
  virtual ~ViewFunction() = default;
  virtual Reply on_view(const Play& view) const = 0;
};

class InnocentStrategy {
 public:
  InnocentStrategy(ArenaPtr arena, std::shared_ptr<const ViewFunction> fn,
                   std::string name = {});

  const Arena& arena() const { return *arena_; }
  const ArenaPtr& arena_ptr() const { return arena_; }
  const std::string& name() const { return name_; }
  const std::shared_ptr<const ViewFunction>& view_function() const {
    return fn_;
  }

  // Looks up the P-view of s and translates the reply's pointer back into
  // s. Throws MalformedPlay if s is illegal or it is not P's turn.
  Reply respond(const Play& s) const;
  // As respond, for plays the caller already knows to be legal. Still
  // checks the strategy's own answer: a P-move enabled by its justifier.
  Reply respond_trusted(const Play& s) const;
  Reply respond_to_view(const Play& view) const { return fn_->on_view(view); }

  // The same strategy on an index-isomorphic arena (same_structure);
  // currying and arrow(I, A) ≅ A are both such renamings.
  InnocentStrategy rehome(ArenaPtr arena, std::string name = {}) const;
  InnocentStrategy renamed(std::string name) const;

 private:
  ArenaPtr arena_;
  std::shared_ptr<const ViewFunction> fn_;
  std::string name_;
};

// Thrown when a view function answers with something that is not a legal
// P-move; always a bug in the strategy, never in the input play.
class StrategyError : public GameError {
 public:
  using GameError::GameError;
};

// ----- Concrete view functions -----

// Explicit finite view function.
class TableViewFunction : public ViewFunction {
 public:
  explicit TableViewFunction(std::map<Play, Response> table)
      : table_(std::move(table)) {}
  Reply on_view(const Play& view) const override;
  const std::map<Play, Response>& table() const { return table_; }

 private:
  std::map<Play, Response> table_;
};

InnocentStrategy table_strategy(ArenaPtr arena, std::map<Play, Response> table,
                                std::string name = {});
// Never responds.
InnocentStrategy empty_strategy(ArenaPtr arena, std::string name = "bottom");
// ⊤ = {ε, qa} and ⊥ = {ε} on Σ.
InnocentStrategy sigma_top();
InnocentStrategy sigma_bottom();

// Echoes each O-move on its partner move and points at the partner of the
// O-move's justifier. `partner` must be an involution pairing moves of
// opposite polarity; initial O-moves map to moves enabled by them.
InnocentStrategy copycat_along(ArenaPtr arena,
                               std::vector<std::optional<MoveId>> partner,
                               std::string name);
// Identity on a ⇒ a.
InnocentStrategy copycat(const ArenaPtr& a);

// Sequential interrogation strategy over flat nat components: the result
// question at `result` (offset of a nat component) and arguments at
// `args` (offsets of nat components). `decide` sees the (argument, value)
// history so far and picks the next action.
struct Interrogate {
  enum class Kind : std::uint8_t { Ask, Answer, Stuck };
  Kind kind = Kind::Stuck;
  unsigned value = 0;  // argument index for Ask, numeral for Answer

  static Interrogate ask(unsigned arg) { return {Kind::Ask, arg}; }
  static Interrogate answer(unsigned n) { return {Kind::Answer, n}; }
  static Interrogate stuck() { return {}; }
};
struct Answered {
  unsigned arg;
  unsigned value;
};
using InterrogationRule = std::function<Interrogate(std::span<const Answered>)>;

InnocentStrategy interrogation_strategy(ArenaPtr arena, MoveId result,
                                        std::vector<MoveId> args,
                                        unsigned max_nat, InterrogationRule rule,
                                        std::string name);

// ----- Traces -----

struct TraceOptions {
  bool o_innocent_only = false;
  bool single_threaded_only = false;
  // Prunes plays that break bracketing. Exact for anything that only
  // looks at complete plays, since bracketing is prefix-closed.
  bool well_bracketed_only = false;
};

struct TraceSet {
  // Even-length plays, sorted, ε included.
  std::vector<Play> plays;
  // P-positions where the strategy reported BoundExceeded.
  std::size_t bound_exceeded = 0;
};

// All plays of length <= max_play_len reachable by letting O play every
// legal move (subject to opts) against the strategy's responses.
TraceSet traces(const InnocentStrategy& sigma, const Bounds& b,
                const TraceOptions& opts = {});

// Every (P-view, response) pair met while enumerating traces.
std::map<Play, Response> tabulate(const InnocentStrategy& sigma,
                                  const Bounds& b);

// Every legal O-move (with pointer) extending s, s of even length.
std::vector<Occurrence> legal_o_moves(const Arena& arena, const Play& s);

// ----- Composition -----

// σ : A ⇒ B and τ : B ⇒ C give σ;τ : A ⇒ C, computed on demand by
// replaying the interaction behind each P-view and hiding B. Requires
// both arenas to be arrow-shaped with matching middle arenas.
InnocentStrategy compose(const InnocentStrategy& sigma,
                         const InnocentStrategy& tau, const Bounds& b);
// σ : B and τ : B ⇒ C give σ;τ : C (composition with a global element).
InnocentStrategy compose_point(const InnocentStrategy& sigma,
                               const InnocentStrategy& tau, const Bounds& b);
// As compose_point, but with an explicit interaction cap.
InnocentStrategy compose_point_with_budget(const InnocentStrategy& sigma,
                                           const InnocentStrategy& tau,
                                           std::size_t budget);

// ⟨σ, τ⟩ : G ⇒ X × Y from σ : G ⇒ X and τ : G ⇒ Y.
InnocentStrategy pairing(const InnocentStrategy& sigma,
                         const InnocentStrategy& tau);

}  // namespace gamesem
