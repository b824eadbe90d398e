#include "gamesem/observation.hpp"

#include <algorithm>
#include <map>

namespace gamesem {

ViewSet ovw(const Arena& arena, const Play& s) {
  if (!is_legal(arena, s)) throw MalformedPlay("ovw of an illegal play");
  ViewSet out;
  for (std::size_t n = 0; n <= s.size(); ++n) {
    out.insert(oview_trusted(arena, s, n));
  }
  return out;
}

namespace {

// prefix -> the O-occurrence that extends it, for elements ending in O.
// Returns false on a determinacy clash.
bool o_continuations(const Arena& arena, const ViewSet& views,
                     std::map<Play, Occurrence>& out) {
  out.clear();
  for (const Play& v : views) {
    if (v.empty() || !arena.label(v.back().move).is_o()) continue;
    Play prefix(v.begin(), v.end() - 1);
    auto [it, fresh] = out.emplace(std::move(prefix), v.back());
    if (!fresh && !(it->second == v.back())) return false;
  }
  return true;
}

}  // namespace

bool is_o_deterministic(const Arena& arena, const ViewSet& views) {
  std::optional<MoveId> initial;
  for (const Play& v : views) {
    if (v.empty()) continue;
    if (!is_single_threaded(arena, v)) return false;
    if (initial && *initial != v.front().move) return false;
    initial = v.front().move;
  }
  std::map<Play, Occurrence> next;
  return o_continuations(arena, views, next);
}

ViewSet close_views(const Arena& arena, const ViewSet& views) {
  ViewSet out;
  for (const Play& v : views) {
    for (std::size_t n = 0; n <= v.size(); ++n) {
      out.insert(oview_trusted(arena, v, n));
    }
  }
  return out;
}

ODetSet::ODetSet(ArenaPtr arena, ViewSet views) : arena_(std::move(arena)) {
  for (const Play& v : views) {
    if (!is_legal(*arena_, v)) {
      throw GameError("O-view set element is not a legal play");
    }
    if (oview_trusted(*arena_, v, v.size()) != v) {
      throw GameError("O-view set element is not an O-view");
    }
    if (!is_well_bracketed(*arena_, v) || !is_single_threaded(*arena_, v)) {
      throw GameError("O-view set element is not well-bracketed and single-threaded");
    }
  }
  views_ = close_views(*arena_, views);
  closure_added_ = views_.size() != views.size();
  if (!is_o_deterministic(*arena_, views_)) {
    throw GameError("O-view set is not O-deterministic");
  }
}

std::optional<MoveId> ODetSet::initial() const {
  for (const Play& v : views_) {
    if (!v.empty()) return v.front().move;
  }
  return std::nullopt;
}

std::size_t ODetSet::total_moves() const {
  std::size_t n = 0;
  for (const Play& v : views_) n += v.size();
  return n;
}

ObservationalStrategy::ObservationalStrategy(ArenaPtr arena,
                                             std::set<ViewSet> sets,
                                             Bounds bounds,
                                             std::size_t bound_exceeded)
    : arena_(std::move(arena)), sets_(std::move(sets)), bounds_(bounds),
      bound_exceeded_(bound_exceeded) {}

InnocentStrategy alpha(const ODetSet& s) {
  const Arena& a = s.arena();
  ArenaPtr test_arena = arrow(s.arena_ptr(), make_sigma());
  const auto answer = static_cast<MoveId>(a.size() + 1);
  std::map<Play, Response> table;
  auto add = [&](Play key, Response r) {
    auto [it, fresh] = table.emplace(std::move(key), r);
    if (!fresh && !(it->second == r)) {
      throw GameError("ill-formed test: a complete O-view also continues");
    }
  };
  for (const Play& v : s.views()) {
    if (!v.empty() && a.label(v.back().move).is_o()) {
      const Play before(v.begin(), v.end() - 1);
      const Occurrence o = v.back();
      add(lift_to_test(a, before),
          Response{o.move, o.ptr == kRoot ? 0 : o.ptr + 1});
    }
    if (is_complete(a, v)) add(lift_to_test(a, v), Response{answer, 0});
  }
  return table_strategy(std::move(test_arena), std::move(table), "alpha_S");
}

const char* to_string(TestVerdict v) {
  switch (v) {
    case TestVerdict::Top: return "TOP";
    case TestVerdict::Bot: return "BOT";
    case TestVerdict::BoundExceeded: return "BOUND_EXCEEDED";
  }
  return "?";
}

TestVerdict run_test(const InnocentStrategy& sigma, const ODetSet& s,
                     const Bounds& b) {
  if (!(sigma.arena() == s.arena())) {
    throw GameError("run_test: strategy on " + sigma.arena().id() +
                    " but test set on " + s.arena().id());
  }
  const InnocentStrategy test = compose_point_with_budget(
      sigma, alpha(s), b.max_play_len + 2);
  const Reply r = test.respond_to_view(Play{{0, kRoot}});
  switch (r.kind) {
    case Reply::Kind::Move:
      return r.response.move == 1 ? TestVerdict::Top : TestVerdict::Bot;
    case Reply::Kind::Stuck:
      return TestVerdict::Bot;
    case Reply::Kind::BoundExceeded:
      return TestVerdict::BoundExceeded;
  }
  return TestVerdict::Bot;
}

ObservationalStrategy obs(const InnocentStrategy& sigma, const Bounds& b) {
  TraceOptions opts;
  opts.o_innocent_only = true;
  opts.single_threaded_only = true;
  opts.well_bracketed_only = true;
  const TraceSet ts = traces(sigma, b, opts);
  std::set<ViewSet> sets;
  for (const Play& s : ts.plays) {
    if (is_complete(sigma.arena(), s)) sets.insert(ovw(sigma.arena(), s));
  }
  return ObservationalStrategy(sigma.arena_ptr(), std::move(sets), b,
                               ts.bound_exceeded);
}

bool includes(const ViewSet& big, const ViewSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool leq_os(const std::set<ViewSet>& x, const std::set<ViewSet>& y) {
  return std::all_of(x.begin(), x.end(), [&](const ViewSet& s) {
    return std::any_of(y.begin(), y.end(),
                       [&](const ViewSet& t) { return includes(s, t); });
  });
}

bool leq_os(const ObservationalStrategy& x, const ObservationalStrategy& y) {
  return leq_os(x.sets(), y.sets());
}

bool is_observational(const Arena& arena, const std::set<ViewSet>& sets) {
  std::vector<std::map<Play, Occurrence>> next(sets.size());
  std::size_t k = 0;
  for (const ViewSet& s : sets) {
    if (!o_continuations(arena, s, next[k++])) return false;
  }
  for (std::size_t i = 0; i < next.size(); ++i) {
    for (std::size_t j = i + 1; j < next.size(); ++j) {
      bool split = false;
      for (const auto& [prefix, o] : next[i]) {
        auto it = next[j].find(prefix);
        if (it != next[j].end() && !(it->second == o)) {
          split = true;
          break;
        }
      }
      if (!split) return false;
    }
  }
  return true;
}

std::optional<std::pair<ViewSet, ViewSet>> find_strict_inclusion(
    const std::set<ViewSet>& sets) {
  for (const ViewSet& s : sets) {
    for (const ViewSet& t : sets) {
      if (s != t && includes(t, s)) return std::make_pair(s, t);
    }
  }
  return std::nullopt;
}

}  // namespace gamesem
