#include "gamesem/strategy.hpp"

#include <algorithm>
#include <set>

namespace gamesem {

void Bounds::validate() const {
  if (max_nat == 0 || max_play_len == 0 || max_view_len == 0 ||
      fix_depth == 0) {
    throw GameError("bounds must be strictly positive: " + to_string());
  }
}

std::string Bounds::to_string() const {
  return "max_nat=" + std::to_string(max_nat) +
         " max_play_len=" + std::to_string(max_play_len) +
         " max_view_len=" + std::to_string(max_view_len) +
         " fix_depth=" + std::to_string(fix_depth);
}

InnocentStrategy::InnocentStrategy(ArenaPtr arena,
                                   std::shared_ptr<const ViewFunction> fn,
                                   std::string name)
    : arena_(std::move(arena)), fn_(std::move(fn)), name_(std::move(name)) {
  if (!arena_ || !fn_) throw GameError("strategy needs an arena and a view function");
}

Reply InnocentStrategy::respond(const Play& s) const {
  if (!is_legal(*arena_, s)) {
    throw MalformedPlay("respond: illegal play");
  }
  if (o_to_move(s)) throw MalformedPlay("respond: it is O's turn");
  return respond_trusted(s);
}

Reply InnocentStrategy::respond_trusted(const Play& s) const {
  const auto positions = pview_positions(*arena_, s, s.size());
  Play view;
  if (!restrict_to(s, positions, view)) return Reply::stuck();
  Reply r = fn_->on_view(view);
  if (!r.is_move()) return r;
  const Response& p = r.response;
  if (p.move >= arena_->size() || p.ptr < 0 ||
      static_cast<std::size_t>(p.ptr) >= view.size() ||
      !arena_->label(p.move).is_p() ||
      !arena_->enables(view[p.ptr].move, p.move)) {
    throw StrategyError("strategy '" + name_ + "' answered with an illegal move");
  }
  return Reply::move(p.move, static_cast<std::int32_t>(positions[p.ptr]));
}

InnocentStrategy InnocentStrategy::rehome(ArenaPtr arena, std::string name) const {
  if (!arena->same_structure(*arena_)) {
    throw GameError("cannot rehome strategy from " + arena_->id() + " onto " +
                    arena->id());
  }
  return InnocentStrategy(std::move(arena), fn_, name.empty() ? name_ : name);
}

InnocentStrategy InnocentStrategy::renamed(std::string name) const {
  return InnocentStrategy(arena_, fn_, std::move(name));
}

Reply TableViewFunction::on_view(const Play& view) const {
  auto it = table_.find(view);
  if (it == table_.end()) return Reply::stuck();
  return Reply::move(it->second.move, it->second.ptr);
}

InnocentStrategy table_strategy(ArenaPtr arena, std::map<Play, Response> table,
                                std::string name) {
  return InnocentStrategy(
      std::move(arena),
      std::make_shared<const TableViewFunction>(std::move(table)),
      std::move(name));
}

InnocentStrategy empty_strategy(ArenaPtr arena, std::string name) {
  return table_strategy(std::move(arena), {}, std::move(name));
}

InnocentStrategy sigma_top() {
  return table_strategy(make_sigma(), {{Play{{0, kRoot}}, Response{1, 0}}},
                        "top");
}

InnocentStrategy sigma_bottom() { return empty_strategy(make_sigma(), "bottom"); }

namespace {

class CopycatViewFunction : public ViewFunction {
 public:
  explicit CopycatViewFunction(std::vector<std::optional<MoveId>> partner)
      : partner_(std::move(partner)) {}

  Reply on_view(const Play& view) const override {
    const std::size_t n = view.size();
    if (n % 2 == 0) return Reply::stuck();
    // A copycat P-view pairs every O-move with its copy.
    for (std::size_t k = 1; k < n; k += 2) {
      if (partner_[view[k - 1].move] != view[k].move) return Reply::stuck();
    }
    const Occurrence& o = view.back();
    const auto p = partner_[o.move];
    if (!p) return Reply::stuck();
    if (o.ptr == kRoot) return Reply::move(*p, static_cast<std::int32_t>(n - 1));
    if (o.ptr % 2 == 0) return Reply::stuck();
    return Reply::move(*p, o.ptr - 1);
  }

 private:
  std::vector<std::optional<MoveId>> partner_;
};

class InterrogationViewFunction : public ViewFunction {
 public:
  InterrogationViewFunction(MoveId result, std::vector<MoveId> args,
                            unsigned max_nat, InterrogationRule rule)
      : result_(result), args_(std::move(args)), max_nat_(max_nat),
        rule_(std::move(rule)) {}

  Reply on_view(const Play& view) const override {
    const std::size_t n = view.size();
    if (n % 2 == 0 || view[0].move != nat_question(result_)) {
      return Reply::stuck();
    }
    std::vector<Answered> history;
    for (std::size_t k = 1; k + 1 < n; k += 2) {
      const auto arg = arg_of_question(view[k]);
      if (!arg) return Reply::stuck();
      const MoveId base = nat_answer(args_[*arg], 0);
      const MoveId m = view[k + 1].move;
      if (m < base || m > base + max_nat_ ||
          view[k + 1].ptr != static_cast<std::int32_t>(k)) {
        return Reply::stuck();
      }
      history.push_back({*arg, m - base});
    }
    const Interrogate next = rule_(history);
    switch (next.kind) {
      case Interrogate::Kind::Ask:
        return Reply::move(nat_question(args_.at(next.value)), 0);
      case Interrogate::Kind::Answer:
        return Reply::move(nat_answer(result_, std::min(next.value, max_nat_)), 0);
      case Interrogate::Kind::Stuck:
        break;
    }
    return Reply::stuck();
  }

 private:
  std::optional<unsigned> arg_of_question(const Occurrence& o) const {
    if (o.ptr != 0) return std::nullopt;
    for (unsigned i = 0; i < args_.size(); ++i) {
      if (nat_question(args_[i]) == o.move) return i;
    }
    return std::nullopt;
  }

  MoveId result_;
  std::vector<MoveId> args_;
  unsigned max_nat_;
  InterrogationRule rule_;
};

}  // namespace

InnocentStrategy copycat_along(ArenaPtr arena,
                               std::vector<std::optional<MoveId>> partner,
                               std::string name) {
  if (partner.size() != arena->size()) {
    throw GameError("copycat partner map has the wrong size");
  }
  for (MoveId m = 0; m < partner.size(); ++m) {
    if (!partner[m]) continue;
    const MoveId p = *partner[m];
    if (p >= arena->size() || partner[p] != m ||
        arena->label(p) != arena->label(m).flipped()) {
      throw GameError("copycat partner map is not a polarity-swapping involution");
    }
  }
  return InnocentStrategy(
      std::move(arena),
      std::make_shared<const CopycatViewFunction>(std::move(partner)),
      std::move(name));
}

InnocentStrategy copycat(const ArenaPtr& a) {
  ArenaPtr aa = arrow(a, a);
  const auto n = static_cast<MoveId>(a->size());
  std::vector<std::optional<MoveId>> partner(aa->size());
  for (MoveId m = 0; m < n; ++m) {
    partner[m] = m + n;
    partner[m + n] = m;
  }
  return copycat_along(aa, std::move(partner), "copycat(" + a->id() + ")");
}

InnocentStrategy interrogation_strategy(ArenaPtr arena, MoveId result,
                                        std::vector<MoveId> args,
                                        unsigned max_nat, InterrogationRule rule,
                                        std::string name) {
  return InnocentStrategy(
      std::move(arena),
      std::make_shared<const InterrogationViewFunction>(
          result, std::move(args), max_nat, std::move(rule)),
      std::move(name));
}

std::vector<Occurrence> legal_o_moves(const Arena& arena, const Play& s) {
  std::vector<Occurrence> out;
  if (!o_to_move(s)) return out;
  const auto view = oview_positions(arena, s, s.size());
  for (MoveId m = 0; m < arena.size(); ++m) {
    if (!arena.label(m).is_o()) continue;
    if (arena.is_initial(m)) {
      out.push_back({m, kRoot});
      continue;
    }
    for (std::size_t j : view) {
      if (arena.enables(s[j].move, m)) {
        out.push_back({m, static_cast<std::int32_t>(j)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::int32_t pending_question(const Arena& arena, const Play& s) {
  std::vector<std::int32_t> pending;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (arena.label(s[i].move).is_question()) {
      pending.push_back(static_cast<std::int32_t>(i));
    } else if (!pending.empty() && pending.back() == s[i].ptr) {
      pending.pop_back();
    } else {
      return -2;  // already broken
    }
  }
  return pending.empty() ? -1 : pending.back();
}

bool answers_pending(const Arena& arena, const Play& s, const Occurrence& o) {
  if (arena.label(o.move).is_question()) return true;
  const std::int32_t top = pending_question(arena, s);
  return top >= 0 && top == o.ptr;
}

// Depth-first walk over the strategy's plays; `visit_p` sees each odd
// position together with the strategy's reply.
class Explorer {
 public:
  Explorer(const InnocentStrategy& sigma, const Bounds& b,
           const TraceOptions& opts)
      : sigma_(sigma), arena_(sigma.arena()), limit_(b.max_play_len),
        opts_(opts) {}

  template <typename OnEven, typename OnReply>
  std::size_t run(OnEven on_even, OnReply on_reply) {
    Play s;
    std::map<Play, Occurrence> o_choices;
    walk(s, o_choices, on_even, on_reply);
    return bound_exceeded_;
  }

 private:
  template <typename OnEven, typename OnReply>
  void walk(Play& s, std::map<Play, Occurrence>& o_choices, OnEven& on_even,
            OnReply& on_reply) {
    on_even(s);
    if (s.size() + 2 > limit_) return;
    for (const Occurrence& o : legal_o_moves(arena_, s)) {
      if (opts_.single_threaded_only && o.ptr == kRoot && !s.empty()) continue;
      if (opts_.well_bracketed_only && !answers_pending(arena_, s, o)) continue;
      s.push_back(o);
      bool fresh_choice = false;
      Play before;
      if (opts_.o_innocent_only) {
        Play v = oview_trusted(arena_, s, s.size());
        const Occurrence last = v.back();
        v.pop_back();
        auto [it, fresh] = o_choices.emplace(v, last);
        if (!fresh && !(it->second == last)) {
          s.pop_back();
          continue;
        }
        fresh_choice = fresh;
        before = std::move(v);
      }
      const Reply r = sigma_.respond_trusted(s);
      on_reply(s, r);
      if (r.kind == Reply::Kind::BoundExceeded) ++bound_exceeded_;
      if (r.is_move()) {
        const Occurrence p{r.response.move, r.response.ptr};
        if (!opts_.well_bracketed_only || answers_pending(arena_, s, p)) {
          s.push_back(p);
          walk(s, o_choices, on_even, on_reply);
          s.pop_back();
        }
      }
      if (fresh_choice) o_choices.erase(before);
      s.pop_back();
    }
  }

  const InnocentStrategy& sigma_;
  const Arena& arena_;
  std::size_t limit_;
  TraceOptions opts_;
  std::size_t bound_exceeded_ = 0;
};

}  // namespace

TraceSet traces(const InnocentStrategy& sigma, const Bounds& b,
                const TraceOptions& opts) {
  TraceSet out;
  Explorer ex(sigma, b, opts);
  out.bound_exceeded = ex.run([&](const Play& s) { out.plays.push_back(s); },
                              [](const Play&, const Reply&) {});
  std::sort(out.plays.begin(), out.plays.end());
  out.plays.erase(std::unique(out.plays.begin(), out.plays.end()),
                  out.plays.end());
  return out;
}

std::map<Play, Response> tabulate(const InnocentStrategy& sigma,
                                  const Bounds& b) {
  std::map<Play, Response> table;
  const Arena& arena = sigma.arena();
  Explorer ex(sigma, b, {});
  ex.run([](const Play&) {},
         [&](const Play& s, const Reply& r) {
           if (!r.is_move()) return;
           const auto positions = pview_positions(arena, s, s.size());
           Play view;
           restrict_to(s, positions, view);
           const auto it = std::find(positions.begin(), positions.end(),
                                     static_cast<std::size_t>(r.response.ptr));
           table.emplace(std::move(view),
                         Response{r.response.move,
                                  static_cast<std::int32_t>(it - positions.begin())});
         });
  return table;
}

}  // namespace gamesem
