#include "gamesem/equiv.hpp"

#include <algorithm>
#include <tuple>

#include "gamesem/builtins.hpp"

namespace gamesem {

const char* to_string(EquivVerdict v) {
  return v == EquivVerdict::EquivAtBounds ? "EQUIV_AT_BOUNDS" : "INEQUIV";
}

const char* to_string(LeqVerdict v) {
  return v == LeqVerdict::HoldsAtBounds ? "HOLDS_AT_BOUNDS" : "FAILS";
}

namespace {

std::size_t total_moves(const ViewSet& s) {
  std::size_t n = 0;
  for (const Play& v : s) n += v.size();
  return n;
}

bool smaller(const ViewSet& a, const ViewSet& b) {
  const std::size_t na = total_moves(a);
  const std::size_t nb = total_moves(b);
  return std::tie(na, a) < std::tie(nb, b);
}

// Members of `from` that pass no test any member of `other` would pass.
std::optional<ViewSet> best_uncovered(const std::set<ViewSet>& from,
                                      const std::set<ViewSet>& other) {
  std::optional<ViewSet> best;
  for (const ViewSet& s : from) {
    const bool covered = std::any_of(other.begin(), other.end(),
                                     [&](const ViewSet& t) { return includes(s, t); });
    if (!covered && (!best || smaller(s, *best))) best = s;
  }
  return best;
}

std::optional<ViewSet> best_difference(const std::set<ViewSet>& a,
                                       const std::set<ViewSet>& b) {
  std::optional<ViewSet> best;
  auto scan = [&](const std::set<ViewSet>& x, const std::set<ViewSet>& y) {
    for (const ViewSet& s : x) {
      if (!y.contains(s) && (!best || smaller(s, *best))) best = s;
    }
  };
  scan(a, b);
  scan(b, a);
  return best;
}

}  // namespace

EquivReport obs_equiv(const InnocentStrategy& s1, const InnocentStrategy& s2,
                      const Bounds& b) {
  if (!(s1.arena() == s2.arena())) {
    throw GameError("obs_equiv: strategies live on different arenas: " +
                    s1.arena().id() + " vs " + s2.arena().id());
  }
  const ObservationalStrategy o1 = obs(s1, b);
  const ObservationalStrategy o2 = obs(s2, b);
  EquivReport r;
  r.bounds = b;
  r.bound_exceeded = o1.bound_exceeded() + o2.bound_exceeded();
  if (o1.sets() == o2.sets()) return r;
  r.verdict = EquivVerdict::Inequiv;
  std::optional<ViewSet> w = best_uncovered(o1.sets(), o2.sets());
  if (!w) w = best_uncovered(o2.sets(), o1.sets());
  if (!w) w = best_difference(o1.sets(), o2.sets());
  r.witness.emplace(s1.arena_ptr(), *w);
  return r;
}

namespace {

// Enumerates O-view trees. Each option is the list of views strictly
// below a node, the node itself excluded.
class TreeEnumerator {
 public:
  TreeEnumerator(const Arena& arena, std::size_t max_len)
      : arena_(arena), max_len_(max_len) {}

  using Option = std::vector<Play>;

  std::vector<Option> below(const Play& v) {
    if (v.size() >= max_len_) return {Option{}};
    return o_to_move(v) ? below_p_node(v) : below_o_node(v);
  }

 private:
  bool acceptable(const Play& v) const {
    return is_legal(arena_, v) && is_well_bracketed(arena_, v) &&
           is_single_threaded(arena_, v);
  }

  // At most one O-move continues a view ending in P (or ε).
  std::vector<Option> below_p_node(const Play& v) {
    std::vector<Option> out{Option{}};
    for (MoveId m = 0; m < arena_.size(); ++m) {
      if (!arena_.label(m).is_o()) continue;
      std::vector<std::int32_t> ptrs;
      if (v.empty()) {
        if (arena_.is_initial(m)) ptrs.push_back(kRoot);
      } else {
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (arena_.enables(v[j].move, m)) ptrs.push_back(static_cast<std::int32_t>(j));
        }
      }
      for (std::int32_t p : ptrs) {
        Play w = v;
        w.push_back({m, p});
        if (!acceptable(w)) continue;
        for (Option& sub : below(w)) {
          sub.insert(sub.begin(), w);
          out.push_back(std::move(sub));
        }
      }
    }
    return out;
  }

  // Any subset of the P-moves justified by the final O-move.
  std::vector<Option> below_o_node(const Play& v) {
    std::vector<std::vector<Option>> per_child;
    const auto last = static_cast<std::int32_t>(v.size() - 1);
    for (MoveId m = 0; m < arena_.size(); ++m) {
      if (!arena_.label(m).is_p() || !arena_.enables(v.back().move, m)) continue;
      Play w = v;
      w.push_back({m, last});
      if (!acceptable(w)) continue;
      std::vector<Option> opts;
      for (Option& sub : below(w)) {
        sub.insert(sub.begin(), w);
        opts.push_back(std::move(sub));
      }
      per_child.push_back(std::move(opts));
    }
    std::vector<Option> out{Option{}};
    for (const std::vector<Option>& child : per_child) {
      std::vector<Option> next;
      next.reserve(out.size() * (child.size() + 1));
      for (const Option& acc : out) {
        next.push_back(acc);
        for (const Option& c : child) {
          Option merged = acc;
          merged.insert(merged.end(), c.begin(), c.end());
          next.push_back(std::move(merged));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  const Arena& arena_;
  std::size_t max_len_;
};

}  // namespace

std::vector<ODetSet> enumerate_odet_sets(const ArenaPtr& arena,
                                         std::size_t max_view_len) {
  TreeEnumerator walk(*arena, max_view_len);
  std::vector<ViewSet> raw;
  for (const auto& opt : walk.below(Play{})) {
    if (opt.empty()) continue;
    ViewSet s(opt.begin(), opt.end());
    s.insert(Play{});
    raw.push_back(std::move(s));
  }
  std::sort(raw.begin(), raw.end(), smaller);
  std::vector<ODetSet> out;
  out.reserve(raw.size());
  for (ViewSet& s : raw) out.emplace_back(arena, std::move(s));
  return out;
}

LeqReport brute_force_leq_ib(const InnocentStrategy& s1,
                             const InnocentStrategy& s2, const Bounds& b) {
  if (!(s1.arena() == s2.arena())) {
    throw GameError("brute_force_leq_ib: strategies live on different arenas");
  }
  LeqReport r;
  r.bounds = b;
  for (const ODetSet& s : enumerate_odet_sets(s1.arena_ptr(), b.max_view_len)) {
    ++r.tests_run;
    const TestVerdict v1 = run_test(s1, s, b);
    if (v1 == TestVerdict::BoundExceeded) {
      ++r.bound_exceeded;
      continue;
    }
    if (v1 != TestVerdict::Top) continue;
    const TestVerdict v2 = run_test(s2, s, b);
    if (v2 == TestVerdict::BoundExceeded) {
      ++r.bound_exceeded;
      continue;
    }
    if (v2 == TestVerdict::Bot && r.verdict == LeqVerdict::HoldsAtBounds) {
      r.verdict = LeqVerdict::Fails;
      r.witness = s;
      return r;
    }
  }
  return r;
}

OracleReport cross_check(const InnocentStrategy& s1, const InnocentStrategy& s2,
                         const EquivReport& verdict, const Bounds& b) {
  OracleReport r;
  r.forward = brute_force_leq_ib(s1, s2, b);
  r.backward = brute_force_leq_ib(s2, s1, b);
  const bool holds = r.forward.verdict == LeqVerdict::HoldsAtBounds &&
                     r.backward.verdict == LeqVerdict::HoldsAtBounds;
  const bool equiv = verdict.verdict == EquivVerdict::EquivAtBounds;
  if (equiv == holds) return r;
  bool reachable = true;
  if (verdict.witness) {
    for (const Play& v : verdict.witness->views()) {
      if (v.size() > b.max_view_len) reachable = false;
    }
  }
  const bool skipped =
      r.forward.bound_exceeded + r.backward.bound_exceeded > 0;
  // An oracle failure is a concrete distinguishing test, so only the
  // direction "obs differs, oracle holds" can be inconclusive.
  if (!equiv && (skipped || !reachable)) {
    r.conclusive = false;
    return r;
  }
  r.agrees = false;
  return r;
}

bool LawReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LawCheck& c) { return c.passed; });
}

namespace {

LawCheck compare(std::string law, std::string instance,
                 const InnocentStrategy& x, const InnocentStrategy& y,
                 const Bounds& b) {
  LawCheck c;
  c.law = std::move(law);
  c.instance = std::move(instance);
  const EquivReport r = obs_equiv(x, y, b);
  c.passed = r.verdict == EquivVerdict::EquivAtBounds;
  c.witness = r.witness;
  c.bound_exceeded = r.bound_exceeded;
  return c;
}

LawCheck both(LawCheck a, const LawCheck& b) {
  a.passed = a.passed && b.passed;
  if (!a.witness) a.witness = b.witness;
  a.bound_exceeded += b.bound_exceeded;
  return a;
}

}  // namespace

LawCheck check_identity(const InnocentStrategy& sigma, const Bounds& b) {
  const Arena& a = sigma.arena();
  if (a.shape() != Arena::Shape::Arrow) {
    throw GameError("identity law needs a strategy on an arrow arena");
  }
  const InnocentStrategy left = compose(copycat(a.left()), sigma, b);
  const InnocentStrategy right = compose(sigma, copycat(a.right()), b);
  return both(compare("identity", "copycat ; " + sigma.name(), left, sigma, b),
              compare("identity", sigma.name() + " ; copycat", right, sigma, b));
}

LawCheck check_associativity(const InnocentStrategy& s,
                             const InnocentStrategy& t,
                             const InnocentStrategy& u, const Bounds& b) {
  const InnocentStrategy lhs = compose(compose(s, t, b), u, b);
  const InnocentStrategy rhs = compose(s, compose(t, u, b), b);
  return compare("associativity",
                 "(" + s.name() + " ; " + t.name() + ") ; " + u.name(), lhs,
                 rhs, b);
}

LawCheck check_congruence(const InnocentStrategy& s1,
                          const InnocentStrategy& s2,
                          const InnocentStrategy& tau, const Bounds& b) {
  const std::string instance = s1.name() + " ~ " + s2.name() + " under ; " +
                               tau.name();
  LawCheck premise = compare("congruence", instance, s1, s2, b);
  if (!premise.passed) {
    premise.passed = true;
    premise.witness.reset();
    premise.instance += " (premise fails, vacuous)";
    return premise;
  }
  LawCheck c = compare("congruence", instance, compose(s1, tau, b),
                       compose(s2, tau, b), b);
  c.bound_exceeded += premise.bound_exceeded;
  return c;
}

LawReport check_category_laws(const Bounds& b) {
  namespace bi = builtins;
  const unsigned n = b.max_nat;
  LawReport r;
  r.bounds = b;

  for (const InnocentStrategy& s :
       {bi::add_lr(n), bi::add_rl(n), bi::add_twice(n), bi::proj_left(n),
        bi::succ(n), bi::pred(n), bi::cond(n), bi::apply_to_pair(1, 2, n)}) {
    r.checks.push_back(check_identity(s, b));
  }

  const InnocentStrategy two = bi::numeral_thunk(2, n);
  LawCheck assoc = check_associativity(two, bi::succ(n), bi::succ(n), b);
  const InnocentStrategy composite =
      compose(compose(two, bi::succ(n), b), bi::succ(n), b);
  r.checks.push_back(assoc);
  r.checks.push_back(compare("associativity",
                             "(2 ; succ) ; succ = " + std::to_string(std::min(4u, n)),
                             composite, bi::numeral_thunk(4, n), b));
  const InnocentStrategy pair21 =
      pairing(bi::numeral_thunk(2, n), bi::numeral_thunk(1, n));
  r.checks.push_back(check_associativity(pair21, bi::add_lr(n), bi::succ(n), b));
  r.checks.push_back(check_associativity(pair21, bi::add_rl(n), bi::pred(n), b));

  const ArenaPtr global = arrow(make_empty_arena(), bi::add_arena(n));
  const InnocentStrategy apply12 = bi::apply_to_pair(1, 2, n);
  auto point = [&](const InnocentStrategy& s) { return s.rehome(global); };
  r.checks.push_back(check_congruence(point(bi::add_lr(n)), point(bi::add_rl(n)),
                                      apply12, b));
  r.checks.push_back(check_congruence(point(bi::add_lr(n)),
                                      point(bi::add_twice(n)), apply12, b));
  r.checks.push_back(check_congruence(bi::add_lr(n), bi::add_rl(n), bi::succ(n), b));
  r.checks.push_back(check_congruence(bi::add_lr(n), bi::add_twice(n), bi::pred(n), b));
  return r;
}

}  // namespace gamesem
