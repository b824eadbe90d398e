#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/strategy.hpp"

// Named strategies over truncated naturals. Arithmetic saturates at
// max_nat throughout.
namespace gamesem::builtins {

// (N × N) ⇒ N
ArenaPtr add_arena(unsigned max_nat);

// q ↦ qL, then qR, then m+n.
InnocentStrategy add_lr(unsigned max_nat);
// q ↦ qR, then qL, then m+n.
InnocentStrategy add_rl(unsigned max_nat);
// Asks the left argument, then the left again, then the right.
InnocentStrategy add_twice(unsigned max_nat);
// Asks one side only and copies the answer.
InnocentStrategy proj_left(unsigned max_nat);
InnocentStrategy proj_right(unsigned max_nat);
// Ignores both arguments.
InnocentStrategy const_pair(unsigned n, unsigned max_nat);

// The numeral n on N.
InnocentStrategy numeral(unsigned n, unsigned max_nat);
// n as a strategy on I ⇒ N.
InnocentStrategy numeral_thunk(unsigned n, unsigned max_nat);
// N ⇒ N
InnocentStrategy succ(unsigned max_nat);
InnocentStrategy pred(unsigned max_nat);
// ((N × N) × N) ⇒ N: ifz on the first component.
InnocentStrategy cond(unsigned max_nat);

// ((N × N) ⇒ N) ⇒ N: calls its argument once, answering its left
// question with x and its right question with y, and returns the result.
InnocentStrategy apply_to_pair(unsigned x, unsigned y, unsigned max_nat);

// Lookup by the names listed in builtin_names(); throws GameError on an
// unknown name.
InnocentStrategy by_name(std::string_view name, unsigned max_nat);
std::vector<std::string> builtin_names();

}  // namespace gamesem::builtins
