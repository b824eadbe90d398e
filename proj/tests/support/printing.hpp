#pragma once

#include <ostream>

#include "gamesem/play.hpp"

namespace gamesem {

// Compact gtest output for plays: move index, then pointer.
inline void PrintTo(const Occurrence& o, std::ostream* os) {
  *os << o.move << "^" << o.ptr;
}

}  // namespace gamesem
