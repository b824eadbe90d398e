#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gamesem/arena.hpp"

namespace gamesem {

inline constexpr std::int32_t kRoot = -1;

// A move occurrence with its justification pointer: kRoot for initial
// moves, otherwise the index of an earlier occurrence in the same sequence.
struct Occurrence {
  MoveId move;
  std::int32_t ptr;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// A justified sequence. The arena travels separately; a Play is plain
// data so it can key sets and maps. Legality is a predicate, not a type
// invariant (see is_legal).
using Play = std::vector<Occurrence>;

// Thrown by the checked view functions on illegal input.
class MalformedPlay : public GameError {
 public:
  using GameError::GameError;
};

// Pointer targets earlier, ROOT only on initials, justifier enables move.
bool is_justified(const Arena& arena, const Play& s);
// Justified, O/P alternation starting with O, and visibility.
bool is_legal(const Arena& arena, const Play& s);

// Positions (indices into s) of the P-view / O-view of the prefix
// s[0..len). These trust their input: on non-visible sequences a pointer
// may fall outside the view, which the re-indexing step reports.
std::vector<std::size_t> pview_positions(const Arena& arena, const Play& s,
                                         std::size_t len);
std::vector<std::size_t> oview_positions(const Arena& arena, const Play& s,
                                         std::size_t len);

// Builds the subsequence at `positions` with pointers re-indexed. Returns
// false if some non-root pointer leaves the subsequence.
bool restrict_to(const Play& s, const std::vector<std::size_t>& positions,
                 Play& out);

// Checked views: throw MalformedPlay unless s is legal.
Play pview(const Arena& arena, const Play& s);
Play oview(const Arena& arena, const Play& s);

// Fast views for plays already known to be legal.
Play pview_trusted(const Arena& arena, const Play& s, std::size_t len);
Play oview_trusted(const Arena& arena, const Play& s, std::size_t len);

// q_Σ · s in arena ⇒ Σ: every initial occurrence of s is re-pointed at
// q_Σ. Requires s single-threaded; throws MalformedPlay otherwise.
// Relies on the left-first layout: a's moves keep their indices and
// q_Σ is move a.size().
Play lift_to_test(const Arena& a, const Play& s);

bool is_well_bracketed(const Arena& arena, const Play& s);
// Nonempty, well-bracketed, and no pending question.
bool is_complete(const Arena& arena, const Play& s);
// At most one initial-move occurrence.
bool is_single_threaded(const Arena& arena, const Play& s);
// Equal O-views before two O-moves force equal O-moves, pointer included.
bool is_o_innocent(const Arena& arena, const Play& s);
// Dually for P-moves and P-views.
bool is_p_innocent(const Arena& arena, const Play& s);

std::vector<Play> prefixes(const Play& s);

// Polarity of the occurrence at position i (O at even positions of a play).
inline bool o_to_move(const Play& s) { return s.size() % 2 == 0; }

}  // namespace gamesem
