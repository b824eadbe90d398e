#include <map>

#include "gamesem/builtins.hpp"
#include "gamesem/pcf.hpp"

namespace gamesem::pcf {

ArenaPtr type_arena(const Type& t, unsigned max_nat) {
  if (t.is_nat()) return make_nat_arena(max_nat);
  return arrow(type_arena(t.dom(), max_nat), type_arena(t.cod(), max_nat));
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Γ = (..((I × T1) × T2) .. × Tk); a term in Γ denotes a strategy on
// Γ ⇒ ⟦T⟧.
struct Env {
  Context types;
  std::vector<ArenaPtr> arenas;  // arenas[k] is Γ restricted to the first k
  std::vector<MoveId> offsets;   // offset of component k inside Γ

  const ArenaPtr& arena() const { return arenas.back(); }

  Env extend(const std::string& name, const Type& t, unsigned max_nat) const {
    Env e = *this;
    e.types.emplace_back(name, t);
    e.offsets.push_back(static_cast<MoveId>(arena()->size()));
    e.arenas.push_back(product(arena(), type_arena(t, max_nat)));
    return e;
  }
};

class Denoter {
 public:
  explicit Denoter(const Bounds& b) : b_(b), n_(b.max_nat) {}

  InnocentStrategy run(const TermPtr& t, const Env& env) {
    const auto key = std::make_pair(t.get(), env.types.size());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    InnocentStrategy s = build(t, env);
    cache_.emplace(key, s);
    return s;
  }

 private:
  ArenaPtr nat() const { return make_nat_arena(n_); }

  InnocentStrategy build(const TermPtr& t, const Env& env) {
    const Type ty = typecheck(t, env.types);
    const ArenaPtr result = arrow(env.arena(), type_arena(ty, n_));
    const std::string name = to_string(t);
    return std::visit(
        overloaded{
            [&](const Var& v) { return variable(v, env, result, name); },
            [&](const Lam& l) {
              const Env inner = env.extend(l.var, l.type, n_);
              return run(l.body, inner).rehome(result, name);
            },
            [&](const App& a) {
              const Type fty = typecheck(a.fn, env.types);
              return apply(run(a.fn, env), run(a.arg, env), fty).renamed(name);
            },
            [&](const Num& num) {
              return interrogation_strategy(
                  result, static_cast<MoveId>(env.arena()->size()), {}, n_,
                  [v = num.value](std::span<const Answered>) {
                    return Interrogate::answer(v);
                  },
                  name);
            },
            [&](const Succ& s) {
              return compose(run(s.arg, env), builtins::succ(n_), b_)
                  .renamed(name);
            },
            [&](const Pred& p) {
              return compose(run(p.arg, env), builtins::pred(n_), b_)
                  .renamed(name);
            },
            [&](const Ifz& i) { return conditional(t, i, ty, env, name); },
            [&](const Fix& f) {
              const InnocentStrategy body = run(f.fn, env);
              InnocentStrategy s =
                  empty_strategy(result, "omega");
              const Type fty = typecheck(f.fn, env.types);
              for (unsigned k = 0; k < b_.fix_depth; ++k) {
                s = apply(body, s, fty);
              }
              return s.renamed(name);
            },
            [&](const Omega&) { return empty_strategy(result, name); },
            [&](const Add& a) {
              const InnocentStrategy op = a.order == AddOrder::LeftToRight
                                              ? builtins::add_lr(n_)
                                              : builtins::add_rl(n_);
              return compose(pairing(run(a.left, env), run(a.right, env)), op,
                             b_)
                  .renamed(name);
            },
        },
        t->node);
  }

  InnocentStrategy variable(const Var& v, const Env& env,
                            const ArenaPtr& result, const std::string& name) {
    std::size_t k = env.types.size();
    while (k-- > 0) {
      if (env.types[k].first == v.name) break;
    }
    const MoveId from = env.offsets[k];
    const auto width =
        static_cast<MoveId>(type_arena(env.types[k].second, n_)->size());
    const auto to = static_cast<MoveId>(env.arena()->size());
    std::vector<std::optional<MoveId>> partner(result->size());
    for (MoveId i = 0; i < width; ++i) {
      partner[from + i] = to + i;
      partner[to + i] = from + i;
    }
    return copycat_along(result, std::move(partner), name);
  }

  // ev : ((T ⇒ U) × T) ⇒ U
  InnocentStrategy eval(const Type& fty) {
    const ArenaPtr t = type_arena(fty.dom(), n_);
    const ArenaPtr u = type_arena(fty.cod(), n_);
    const ArenaPtr arena = arrow(product(arrow(t, u), t), u);
    const auto ts = static_cast<MoveId>(t->size());
    const auto us = static_cast<MoveId>(u->size());
    std::vector<std::optional<MoveId>> partner(arena->size());
    auto link = [&](MoveId a, MoveId b) {
      partner[a] = b;
      partner[b] = a;
    };
    for (MoveId i = 0; i < ts; ++i) link(i, ts + us + i);
    for (MoveId i = 0; i < us; ++i) link(ts + i, 2 * ts + us + i);
    return copycat_along(arena, std::move(partner), "ev");
  }

  InnocentStrategy apply(const InnocentStrategy& fn,
                         const InnocentStrategy& arg, const Type& fty) {
    return compose(pairing(fn, arg), eval(fty), b_);
  }

  // At higher types ifz is η-expanded down to nat, where it is the cond
  // interrogation.
  InnocentStrategy conditional(const TermPtr& t, const Ifz& i, const Type& ty,
                               const Env& env, const std::string& name) {
    if (ty.is_nat()) {
      const InnocentStrategy c = run(i.cond, env);
      const InnocentStrategy a = run(i.then_branch, env);
      const InnocentStrategy b = run(i.else_branch, env);
      return compose(pairing(pairing(c, a), b), builtins::cond(n_), b_)
          .renamed(name);
    }
    std::vector<std::pair<std::string, Type>> binders;
    Type rest = ty;
    while (!rest.is_nat()) {
      binders.emplace_back("%" + std::to_string(binders.size()), rest.dom());
      rest = rest.cod();
    }
    TermPtr then_b = i.then_branch;
    TermPtr else_b = i.else_branch;
    for (const auto& [var, vty] : binders) {
      then_b = make(App{then_b, make(Var{var}, t->pos)}, t->pos);
      else_b = make(App{else_b, make(Var{var}, t->pos)}, t->pos);
    }
    TermPtr body = make(Ifz{i.cond, then_b, else_b}, t->pos);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = make(Lam{it->first, it->second, body}, t->pos);
    }
    expanded_.push_back(body);
    return run(body, env).renamed(name);
  }

  Bounds b_;
  unsigned n_;
  std::map<std::pair<const Term*, std::size_t>, InnocentStrategy> cache_;
  std::vector<TermPtr> expanded_;
};

}  // namespace

InnocentStrategy denote(const TermPtr& t, const Bounds& b) {
  b.validate();
  const Type ty = typecheck(t);
  Env env;
  env.arenas.push_back(make_empty_arena());
  Denoter d(b);
  return d.run(t, env).rehome(type_arena(ty, b.max_nat));
}

}  // namespace gamesem::pcf
