#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gamesem {

// Thrown for malformed input of any kind: bad arenas, illegal plays,
// ill-formed sets. Parse and type errors have their own subclasses.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using MoveId = std::uint32_t;

enum class Polarity : std::uint8_t { O, P };
enum class Kind : std::uint8_t { Question, Answer };

// One of OQ, OA, PQ, PA.
struct MoveLabel {
  Polarity polarity;
  Kind kind;

  bool is_o() const { return polarity == Polarity::O; }
  bool is_p() const { return polarity == Polarity::P; }
  bool is_question() const { return kind == Kind::Question; }
  bool is_answer() const { return kind == Kind::Answer; }
  MoveLabel flipped() const {
    return {polarity == Polarity::O ? Polarity::P : Polarity::O, kind};
  }

  friend bool operator==(MoveLabel, MoveLabel) = default;
};

inline constexpr MoveLabel kOQ{Polarity::O, Kind::Question};
inline constexpr MoveLabel kOA{Polarity::O, Kind::Answer};
inline constexpr MoveLabel kPQ{Polarity::P, Kind::Question};
inline constexpr MoveLabel kPA{Polarity::P, Kind::Answer};

std::string to_string(MoveLabel label);
MoveLabel label_from_string(std::string_view text);

class Arena;
using ArenaPtr = std::shared_ptr<const Arena>;

// A finite HO arena. Moves are dense indices 0..size()-1, each with a
// canonical path-tagged name ("L.R.q"). Compound arenas lay out their
// left component's moves first, then the right component's, so the
// injections are index offsets.
class Arena {
 public:
  enum class Shape : std::uint8_t { Base, Product, Arrow };

  struct MoveSpec {
    std::string name;
    MoveLabel label;
  };

  // Validates: unique names, initials are OQ and have no enablers,
  // enabling alternates polarity, every non-initial move is enabled.
  Arena(std::string id, std::vector<MoveSpec> moves,
        std::vector<std::pair<MoveId, MoveId>> enabling,
        std::vector<MoveId> initials);

  const std::string& id() const { return id_; }
  std::size_t size() const { return moves_.size(); }
  const std::string& name(MoveId m) const { return moves_.at(m).name; }
  MoveLabel label(MoveId m) const { return moves_[m].label; }
  bool is_initial(MoveId m) const { return initial_flags_[m] != 0; }
  const std::vector<MoveId>& initials() const { return initials_; }
  // from ⊢ to
  bool enables(MoveId from, MoveId to) const {
    return enabling_[from * moves_.size() + to] != 0;
  }
  std::vector<std::pair<MoveId, MoveId>> enabling_pairs() const;
  std::optional<MoveId> find(std::string_view name) const;
  MoveId at(std::string_view name) const;

  Shape shape() const { return shape_; }
  // Components for Product/Arrow arenas; null for Base.
  const ArenaPtr& left() const { return left_; }
  const ArenaPtr& right() const { return right_; }

  // Same labels, enabling and initials index-for-index; names ignored.
  bool same_structure(const Arena& other) const;

  friend bool operator==(const Arena& a, const Arena& b);

 private:
  friend ArenaPtr product(const ArenaPtr&, const ArenaPtr&);
  friend ArenaPtr arrow(const ArenaPtr&, const ArenaPtr&);

  std::string id_;
  std::vector<MoveSpec> moves_;
  std::vector<char> enabling_;
  std::vector<MoveId> initials_;
  std::vector<char> initial_flags_;
  Shape shape_ = Shape::Base;
  ArenaPtr left_;
  ArenaPtr right_;
};

// Flat naturals truncated at max_nat: question "q" (OQ, initial) enabling
// answers "0".."max_nat" (PA).
ArenaPtr make_nat_arena(unsigned max_nat);
// Sierpinski game: q (OQ, initial) ⊢ a (PA).
ArenaPtr make_sigma();
// The arena with no moves.
ArenaPtr make_empty_arena();
ArenaPtr product(const ArenaPtr& a, const ArenaPtr& b);
// a ⇒ b: a's polarities flipped, a's initials enabled by b's initials.
ArenaPtr arrow(const ArenaPtr& a, const ArenaPtr& b);

// Rebuilds an arena from its descriptive id, e.g. "((N2 x N2) => N2)",
// "Sigma", "I".
ArenaPtr arena_from_id(std::string_view id);

// Index of answer `n` in a flat nat component starting at `offset`.
inline MoveId nat_question(MoveId offset) { return offset; }
inline MoveId nat_answer(MoveId offset, unsigned n) { return offset + 1 + n; }

}  // namespace gamesem
