#include "gamesem/play.hpp"

#include <algorithm>
#include <map>

namespace gamesem {

namespace {

void check_pointer(const Play& s, std::size_t i) {
  const auto ptr = s[i].ptr;
  if (ptr != kRoot && (ptr < 0 || static_cast<std::size_t>(ptr) >= i)) {
    throw MalformedPlay("pointer at position " + std::to_string(i) +
                        " does not target an earlier occurrence");
  }
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

bool is_justified(const Arena& arena, const Play& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Occurrence& o = s[i];
    if (o.move >= arena.size()) return false;
    if (o.ptr == kRoot) {
      if (!arena.is_initial(o.move)) return false;
      continue;
    }
    if (o.ptr < 0 || static_cast<std::size_t>(o.ptr) >= i) return false;
    if (!arena.enables(s[o.ptr].move, o.move)) return false;
  }
  return true;
}

bool is_legal(const Arena& arena, const Play& s) {
  if (!is_justified(arena, s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MoveLabel l = arena.label(s[i].move);
    if (l.is_o() != (i % 2 == 0)) return false;
    if (s[i].ptr == kRoot) continue;
    const auto j = static_cast<std::size_t>(s[i].ptr);
    const auto view =
        l.is_p() ? pview_positions(arena, s, i) : oview_positions(arena, s, i);
    if (!contains(view, j)) return false;
  }
  return true;
}

std::vector<std::size_t> pview_positions(const Arena& arena, const Play& s,
                                         std::size_t len) {
  std::vector<std::size_t> out;
  auto i = static_cast<std::ptrdiff_t>(len) - 1;
  while (i >= 0) {
    const auto at = static_cast<std::size_t>(i);
    check_pointer(s, at);
    out.push_back(at);
    if (arena.label(s[at].move).is_p()) {
      --i;
    } else if (s[at].ptr == kRoot) {
      break;
    } else {
      out.push_back(static_cast<std::size_t>(s[at].ptr));
      i = s[at].ptr - 1;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> oview_positions(const Arena& arena, const Play& s,
                                         std::size_t len) {
  std::vector<std::size_t> out;
  auto i = static_cast<std::ptrdiff_t>(len) - 1;
  while (i >= 0) {
    const auto at = static_cast<std::size_t>(i);
    check_pointer(s, at);
    out.push_back(at);
    if (arena.label(s[at].move).is_o()) {
      --i;
    } else if (s[at].ptr == kRoot) {
      throw MalformedPlay("P-move without a justifier at position " +
                          std::to_string(at));
    } else {
      out.push_back(static_cast<std::size_t>(s[at].ptr));
      i = s[at].ptr - 1;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool restrict_to(const Play& s, const std::vector<std::size_t>& positions,
                 Play& out) {
  out.clear();
  out.reserve(positions.size());
  std::vector<std::int32_t> index(s.size(), -1);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    index[positions[k]] = static_cast<std::int32_t>(k);
  }
  for (std::size_t pos : positions) {
    const Occurrence& o = s[pos];
    if (o.ptr == kRoot) {
      out.push_back(o);
      continue;
    }
    const std::int32_t mapped = index[o.ptr];
    if (mapped < 0) return false;
    out.push_back({o.move, mapped});
  }
  return true;
}

Play pview_trusted(const Arena& arena, const Play& s, std::size_t len) {
  Play out;
  if (!restrict_to(s, pview_positions(arena, s, len), out)) {
    throw MalformedPlay("P-view leaves a pointer dangling (not visible)");
  }
  return out;
}

Play oview_trusted(const Arena& arena, const Play& s, std::size_t len) {
  Play out;
  if (!restrict_to(s, oview_positions(arena, s, len), out)) {
    throw MalformedPlay("O-view leaves a pointer dangling (not visible)");
  }
  return out;
}

Play pview(const Arena& arena, const Play& s) {
  if (!is_legal(arena, s)) throw MalformedPlay("pview of an illegal sequence");
  return pview_trusted(arena, s, s.size());
}

Play oview(const Arena& arena, const Play& s) {
  if (!is_legal(arena, s)) throw MalformedPlay("oview of an illegal sequence");
  return oview_trusted(arena, s, s.size());
}

Play lift_to_test(const Arena& a, const Play& s) {
  if (!is_single_threaded(a, s)) {
    throw MalformedPlay("lift_to_test needs a single-threaded play");
  }
  Play out;
  out.reserve(s.size() + 1);
  out.push_back({static_cast<MoveId>(a.size()), kRoot});
  for (const Occurrence& o : s) {
    out.push_back({o.move, o.ptr == kRoot ? 0 : o.ptr + 1});
  }
  return out;
}

namespace {

// Returns false on a bracketing violation; leaves the pending stack.
bool bracket_scan(const Arena& arena, const Play& s,
                  std::vector<std::int32_t>& pending) {
  pending.clear();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (arena.label(s[i].move).is_question()) {
      pending.push_back(static_cast<std::int32_t>(i));
      continue;
    }
    if (pending.empty() || pending.back() != s[i].ptr) return false;
    pending.pop_back();
  }
  return true;
}

template <typename ViewFn>
bool innocent_for(const Arena& arena, const Play& s, bool o_moves,
                  ViewFn view) {
  std::map<Play, Occurrence> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (arena.label(s[i].move).is_o() != o_moves) continue;
    Play v = view(arena, s, i + 1);
    Occurrence last = v.back();
    v.pop_back();
    auto [it, fresh] = seen.emplace(std::move(v), last);
    if (!fresh && !(it->second == last)) return false;
  }
  return true;
}

}  // namespace

bool is_well_bracketed(const Arena& arena, const Play& s) {
  std::vector<std::int32_t> pending;
  return bracket_scan(arena, s, pending);
}

bool is_complete(const Arena& arena, const Play& s) {
  std::vector<std::int32_t> pending;
  return !s.empty() && bracket_scan(arena, s, pending) && pending.empty();
}

bool is_single_threaded(const Arena& arena, const Play& s) {
  std::size_t initials = 0;
  for (const Occurrence& o : s) {
    if (o.ptr == kRoot && arena.is_initial(o.move)) ++initials;
  }
  return initials <= 1;
}

bool is_o_innocent(const Arena& arena, const Play& s) {
  return innocent_for(arena, s, true, oview_trusted);
}

bool is_p_innocent(const Arena& arena, const Play& s) {
  return innocent_for(arena, s, false, pview_trusted);
}

std::vector<Play> prefixes(const Play& s) {
  std::vector<Play> out;
  out.reserve(s.size() + 1);
  for (std::size_t n = 0; n <= s.size(); ++n) {
    out.emplace_back(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
  }
  return out;
}

}  // namespace gamesem
