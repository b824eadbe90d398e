#include <map>
#include <mutex>

#include "gamesem/strategy.hpp"

namespace gamesem {

namespace {

// Replays the interaction of σ : A ⇒ B and τ : B ⇒ C behind a play of
// A ⇒ C. Local plays are kept per strategy; every move of the interaction
// sequence u remembers its index in each local play it belongs to.
// With an empty A this is composition with a global element of B.
class Interaction {
 public:
  Interaction(const InnocentStrategy& sigma, const InnocentStrategy& tau,
              const Arena& a, const Arena& b, std::size_t budget)
      : sigma_(sigma), tau_(tau), b_(b),
        na_(static_cast<MoveId>(a.size())),
        nb_(static_cast<MoveId>(b.size())),
        a_(a), budget_(budget) {}

  Reply run(const Play& ext) {
    if (ext.size() % 2 == 0) return Reply::stuck();
    for (std::size_t i = 0; i < ext.size(); i += 2) {
      bool to_tau = false;
      if (!feed_external(ext[i], to_tau)) return Reply::stuck();
      if (u_.size() > budget_) return Reply::bound_exceeded();
      Reply out = settle(to_tau);
      if (!out.is_move() || i + 1 == ext.size()) return out;
      const Occurrence& expected = ext[i + 1];
      if (expected.move != out.response.move || expected.ptr != out.response.ptr) {
        return Reply::stuck();
      }
      u_of_ext_.push_back(pending_external_);
    }
    return Reply::stuck();
  }

 private:
  struct Event {
    std::int32_t sig = -1;
    std::int32_t tau = -1;
    std::int32_t ext = -1;
  };

  std::int32_t append(Event e) {
    u_.push_back(e);
    return static_cast<std::int32_t>(u_.size() - 1);
  }

  std::int32_t push_sig(Occurrence o, Event& e) {
    e.sig = static_cast<std::int32_t>(sp_.size());
    sp_.push_back(o);
    return e.sig;
  }
  std::int32_t push_tau(Occurrence o, Event& e) {
    e.tau = static_cast<std::int32_t>(tp_.size());
    tp_.push_back(o);
    return e.tau;
  }
  void index(const Event& e, std::int32_t at) {
    if (e.sig >= 0) u_of_sig_.push_back(at);
    if (e.tau >= 0) u_of_tau_.push_back(at);
  }

  bool feed_external(const Occurrence& o, bool& to_tau) {
    const std::size_t ext_index = u_of_ext_.size();
    Event e;
    e.ext = static_cast<std::int32_t>(ext_index);
    if (o.move >= na_) {
      std::int32_t ptr = kRoot;
      if (o.ptr != kRoot) {
        ptr = u_[u_of_ext_.at(o.ptr)].tau;
        if (ptr < 0) return false;
      }
      push_tau({nb_ + (o.move - na_), ptr}, e);
      to_tau = true;
    } else {
      if (o.ptr == kRoot) return false;
      const std::int32_t ptr = u_[u_of_ext_.at(o.ptr)].sig;
      if (ptr < 0) return false;
      push_sig({o.move, ptr}, e);
      to_tau = false;
    }
    const std::int32_t at = append(e);
    index(e, at);
    u_of_ext_.push_back(at);
    return true;
  }

  // Runs internal B-moves until one side produces an external P-move.
  Reply settle(bool tau_turn) {
    while (true) {
      if (tau_turn) {
        if (tp_.size() % 2 == 0) return Reply::stuck();
        const Reply r = tau_.respond_trusted(tp_);
        if (!r.is_move()) return r;
        const MoveId m = r.response.move;
        const std::int32_t j = r.response.ptr;
        Event e;
        if (m >= nb_) {
          const std::int32_t ext_ptr = u_[u_of_tau_[j]].ext;
          if (ext_ptr < 0) return Reply::stuck();
          push_tau({m, j}, e);
          return emit(e, na_ + (m - nb_), ext_ptr);
        }
        std::int32_t sig_ptr = kRoot;
        if (!b_.is_initial(m)) {
          sig_ptr = u_[u_of_tau_[j]].sig;
          if (sig_ptr < 0) return Reply::stuck();
        }
        push_tau({m, j}, e);
        push_sig({na_ + m, sig_ptr}, e);
        index(e, append(e));
        tau_turn = false;
      } else {
        if (sp_.size() % 2 == 0) return Reply::stuck();
        const Reply r = sigma_.respond_trusted(sp_);
        if (!r.is_move()) return r;
        const MoveId m = r.response.move;
        const std::int32_t j = r.response.ptr;
        Event e;
        if (m >= na_) {
          const std::int32_t tau_ptr = u_[u_of_sig_[j]].tau;
          if (tau_ptr < 0) return Reply::stuck();
          push_sig({m, j}, e);
          push_tau({m - na_, tau_ptr}, e);
          index(e, append(e));
          tau_turn = true;
        } else {
          std::int32_t ext_ptr;
          if (a_.is_initial(m)) {
            // Points at the B-initial; externally it hangs off the
            // C-initial that justified that B-move in τ's play.
            const Event& b_init = u_[u_of_sig_[j]];
            if (b_init.tau < 0) return Reply::stuck();
            const std::int32_t c_init = tp_[b_init.tau].ptr;
            if (c_init < 0) return Reply::stuck();
            ext_ptr = u_[u_of_tau_[c_init]].ext;
          } else {
            ext_ptr = u_[u_of_sig_[j]].ext;
          }
          if (ext_ptr < 0) return Reply::stuck();
          push_sig({m, j}, e);
          return emit(e, m, ext_ptr);
        }
      }
      if (u_.size() > budget_) return Reply::bound_exceeded();
    }
  }

  Reply emit(Event e, MoveId ext_move, std::int32_t ext_ptr) {
    e.ext = static_cast<std::int32_t>(u_of_ext_.size());
    const std::int32_t at = append(e);
    index(e, at);
    pending_external_ = at;
    if (u_.size() > budget_) return Reply::bound_exceeded();
    return Reply::move(ext_move, ext_ptr);
  }

  const InnocentStrategy& sigma_;
  const InnocentStrategy& tau_;
  const Arena& b_;
  MoveId na_;
  MoveId nb_;
  const Arena& a_;
  std::size_t budget_;

  std::vector<Event> u_;
  Play sp_;
  Play tp_;
  std::vector<std::int32_t> u_of_sig_;
  std::vector<std::int32_t> u_of_tau_;
  std::vector<std::int32_t> u_of_ext_;
  std::int32_t pending_external_ = -1;
};

class CompositeViewFunction : public ViewFunction {
 public:
  CompositeViewFunction(InnocentStrategy sigma, InnocentStrategy tau,
                        ArenaPtr a, ArenaPtr b, std::size_t budget)
      : sigma_(std::move(sigma)), tau_(std::move(tau)), a_(std::move(a)),
        b_(std::move(b)), budget_(budget) {}

  Reply on_view(const Play& view) const override {
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(view); it != memo_.end()) return it->second;
    }
    Interaction run(sigma_, tau_, *a_, *b_, budget_);
    const Reply r = run.run(view);
    std::lock_guard lock(mu_);
    memo_.emplace(view, r);
    return r;
  }

 private:
  InnocentStrategy sigma_;
  InnocentStrategy tau_;
  ArenaPtr a_;
  ArenaPtr b_;
  std::size_t budget_;
  mutable std::mutex mu_;
  mutable std::map<Play, Reply> memo_;
};

std::string composite_name(const InnocentStrategy& s, const InnocentStrategy& t) {
  return "(" + s.name() + " ; " + t.name() + ")";
}

}  // namespace

InnocentStrategy compose(const InnocentStrategy& sigma,
                         const InnocentStrategy& tau, const Bounds& b) {
  const Arena& sa = sigma.arena();
  const Arena& ta = tau.arena();
  if (sa.shape() != Arena::Shape::Arrow || ta.shape() != Arena::Shape::Arrow) {
    throw GameError("compose needs strategies on arrow arenas");
  }
  if (!(*sa.right() == *ta.left())) {
    throw GameError("compose: middle arenas differ: " + sa.right()->id() +
                    " vs " + ta.left()->id());
  }
  ArenaPtr result = arrow(sa.left(), ta.right());
  return InnocentStrategy(
      result,
      std::make_shared<const CompositeViewFunction>(
          sigma, tau, sa.left(), ta.left(), b.interaction_budget()),
      composite_name(sigma, tau));
}

InnocentStrategy compose_point_with_budget(const InnocentStrategy& sigma,
                                           const InnocentStrategy& tau,
                                           std::size_t budget) {
  const Arena& ta = tau.arena();
  if (ta.shape() != Arena::Shape::Arrow) {
    throw GameError("compose_point needs τ on an arrow arena");
  }
  if (!(sigma.arena() == *ta.left())) {
    throw GameError("compose_point: " + sigma.arena().id() +
                    " does not match " + ta.left()->id());
  }
  return InnocentStrategy(
      ta.right(),
      std::make_shared<const CompositeViewFunction>(
          sigma, tau, make_empty_arena(), ta.left(), budget),
      composite_name(sigma, tau));
}

InnocentStrategy compose_point(const InnocentStrategy& sigma,
                               const InnocentStrategy& tau, const Bounds& b) {
  return compose_point_with_budget(sigma, tau, b.interaction_budget());
}

namespace {

class PairingViewFunction : public ViewFunction {
 public:
  PairingViewFunction(InnocentStrategy left, InnocentStrategy right,
                      MoveId g, MoveId x)
      : left_(std::move(left)), right_(std::move(right)), g_(g), x_(x) {}

  Reply on_view(const Play& view) const override {
    if (view.empty() || view[0].move < g_) return Reply::stuck();
    const bool left_side = view[0].move < g_ + x_;
    Play local;
    local.reserve(view.size());
    for (const Occurrence& o : view) {
      if (o.move < g_) {
        local.push_back(o);
      } else if ((o.move < g_ + x_) == left_side) {
        local.push_back({left_side ? o.move : o.move - x_, o.ptr});
      } else {
        return Reply::stuck();
      }
    }
    Reply r = (left_side ? left_ : right_).respond_to_view(local);
    if (r.is_move() && !left_side && r.response.move >= g_) {
      r.response.move += x_;
    }
    return r;
  }

 private:
  InnocentStrategy left_;
  InnocentStrategy right_;
  MoveId g_;
  MoveId x_;
};

}  // namespace

InnocentStrategy pairing(const InnocentStrategy& sigma,
                         const InnocentStrategy& tau) {
  const Arena& sa = sigma.arena();
  const Arena& ta = tau.arena();
  if (sa.shape() != Arena::Shape::Arrow || ta.shape() != Arena::Shape::Arrow ||
      !(*sa.left() == *ta.left())) {
    throw GameError("pairing needs strategies G ⇒ X and G ⇒ Y on a common G");
  }
  ArenaPtr result = arrow(sa.left(), product(sa.right(), ta.right()));
  return InnocentStrategy(
      result,
      std::make_shared<const PairingViewFunction>(
          sigma, tau, static_cast<MoveId>(sa.left()->size()),
          static_cast<MoveId>(sa.right()->size())),
      "<" + sigma.name() + ", " + tau.name() + ">");
}

}  // namespace gamesem
