#pragma once

#include <cstddef>
#include <string>

namespace gamesem {

// Numeric caps that make every enumeration finite. Every verdict the
// library reports is relative to the Bounds it was computed under.
struct Bounds {
  unsigned max_nat = 3;
  std::size_t max_play_len = 8;
  std::size_t max_view_len = 6;
  unsigned fix_depth = 4;

  // Cap on the length of a composition's interaction sequence, hidden
  // moves included.
  std::size_t interaction_budget() const { return 4 * max_play_len; }

  // Throws GameError unless all caps are strictly positive.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

}  // namespace gamesem
