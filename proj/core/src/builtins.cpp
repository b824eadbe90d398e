#include "gamesem/builtins.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gamesem::builtins {

namespace {

MoveId nat_size(unsigned max_nat) { return max_nat + 2; }

unsigned sat_add(unsigned a, unsigned b, unsigned max_nat) {
  return std::min(a + b, max_nat);
}

using Rule = InterrogationRule;

InnocentStrategy on_pair(unsigned max_nat, Rule rule, std::string name) {
  const MoveId n = nat_size(max_nat);
  return interrogation_strategy(add_arena(max_nat), 2 * n, {0, n}, max_nat,
                                std::move(rule), std::move(name));
}

// Asks the arguments in `order`, then answers f(values by argument).
Rule ask_in_order(std::vector<unsigned> order, unsigned arity,
                  std::function<unsigned(const std::vector<unsigned>&)> f) {
  return [order = std::move(order), arity, f = std::move(f)](
             std::span<const Answered> h) {
    if (h.size() < order.size()) return Interrogate::ask(order[h.size()]);
    std::vector<unsigned> values(arity, 0);
    for (const Answered& a : h) values[a.arg] = a.value;
    return Interrogate::answer(f(values));
  };
}

}  // namespace

ArenaPtr add_arena(unsigned max_nat) {
  const ArenaPtr nat = make_nat_arena(max_nat);
  return arrow(product(nat, nat), nat);
}

InnocentStrategy add_lr(unsigned max_nat) {
  return on_pair(max_nat,
                 ask_in_order({0, 1}, 2,
                              [max_nat](const std::vector<unsigned>& v) {
                                return sat_add(v[0], v[1], max_nat);
                              }),
                 "add_LR");
}

InnocentStrategy add_rl(unsigned max_nat) {
  return on_pair(max_nat,
                 ask_in_order({1, 0}, 2,
                              [max_nat](const std::vector<unsigned>& v) {
                                return sat_add(v[0], v[1], max_nat);
                              }),
                 "add_RL");
}

InnocentStrategy add_twice(unsigned max_nat) {
  Rule rule = [max_nat](std::span<const Answered> h) {
    if (h.size() < 2) return Interrogate::ask(0);
    if (h.size() == 2) return Interrogate::ask(1);
    return Interrogate::answer(sat_add(h[1].value, h[2].value, max_nat));
  };
  return on_pair(max_nat, std::move(rule), "add_twice");
}

InnocentStrategy proj_left(unsigned max_nat) {
  return on_pair(max_nat,
                 ask_in_order({0}, 2, [](const std::vector<unsigned>& v) {
                   return v[0];
                 }),
                 "proj_left");
}

InnocentStrategy proj_right(unsigned max_nat) {
  return on_pair(max_nat,
                 ask_in_order({1}, 2, [](const std::vector<unsigned>& v) {
                   return v[1];
                 }),
                 "proj_right");
}

InnocentStrategy const_pair(unsigned n, unsigned max_nat) {
  return on_pair(max_nat,
                 ask_in_order({}, 2, [n](const std::vector<unsigned>&) {
                   return n;
                 }),
                 "const_" + std::to_string(n));
}

InnocentStrategy numeral(unsigned n, unsigned max_nat) {
  return interrogation_strategy(
      make_nat_arena(max_nat), 0, {}, max_nat,
      [n](std::span<const Answered>) { return Interrogate::answer(n); },
      std::to_string(std::min(n, max_nat)));
}

InnocentStrategy numeral_thunk(unsigned n, unsigned max_nat) {
  return numeral(n, max_nat).rehome(arrow(make_empty_arena(),
                                          make_nat_arena(max_nat)));
}

InnocentStrategy succ(unsigned max_nat) {
  const ArenaPtr nat = make_nat_arena(max_nat);
  return interrogation_strategy(
      arrow(nat, nat), nat_size(max_nat), {0}, max_nat,
      ask_in_order({0}, 1,
                   [max_nat](const std::vector<unsigned>& v) {
                     return std::min(v[0] + 1, max_nat);
                   }),
      "succ");
}

InnocentStrategy pred(unsigned max_nat) {
  const ArenaPtr nat = make_nat_arena(max_nat);
  return interrogation_strategy(
      arrow(nat, nat), nat_size(max_nat), {0}, max_nat,
      ask_in_order({0}, 1,
                   [](const std::vector<unsigned>& v) {
                     return v[0] == 0 ? 0u : v[0] - 1;
                   }),
      "pred");
}

InnocentStrategy cond(unsigned max_nat) {
  const ArenaPtr nat = make_nat_arena(max_nat);
  const MoveId n = nat_size(max_nat);
  Rule rule = [](std::span<const Answered> h) {
    if (h.empty()) return Interrogate::ask(0);
    if (h.size() == 1) return Interrogate::ask(h[0].value == 0 ? 1 : 2);
    return Interrogate::answer(h[1].value);
  };
  return interrogation_strategy(arrow(product(product(nat, nat), nat), nat),
                                3 * n, {0, n, 2 * n}, max_nat, std::move(rule),
                                "cond");
}

InnocentStrategy apply_to_pair(unsigned x, unsigned y, unsigned max_nat) {
  const ArenaPtr arena = arrow(add_arena(max_nat), make_nat_arena(max_nat));
  const MoveId n = nat_size(max_nat);
  // Layout: x-slot, y-slot, f's result, the final result.
  const MoveId qx = 0;
  const MoveId qy = n;
  const MoveId qf = 2 * n;
  const MoveId qr = 3 * n;
  const Occurrence head{qr, kRoot};
  const Occurrence call{qf, 0};
  std::map<Play, Response> table;
  table[{head}] = {qf, 0};
  table[{head, call, {qx, 1}}] = {nat_answer(qx, std::min(x, max_nat)), 2};
  table[{head, call, {qy, 1}}] = {nat_answer(qy, std::min(y, max_nat)), 2};
  for (unsigned k = 0; k <= max_nat; ++k) {
    table[{head, call, {nat_answer(qf, k), 1}}] = {nat_answer(qr, k), 0};
  }
  return table_strategy(arena, std::move(table),
                        "apply_to(" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
}

std::vector<std::string> builtin_names() {
  return {"add_LR", "add_RL", "add_twice", "proj_left", "proj_right",
          "succ",   "pred",   "cond",      "top",       "bottom",
          "apply_to_1_2"};
}

InnocentStrategy by_name(std::string_view name, unsigned max_nat) {
  if (name == "add_LR") return add_lr(max_nat);
  if (name == "add_RL") return add_rl(max_nat);
  if (name == "add_twice") return add_twice(max_nat);
  if (name == "proj_left") return proj_left(max_nat);
  if (name == "proj_right") return proj_right(max_nat);
  if (name == "succ") return succ(max_nat);
  if (name == "pred") return pred(max_nat);
  if (name == "cond") return cond(max_nat);
  if (name == "top") return sigma_top();
  if (name == "bottom") return sigma_bottom();
  if (name == "apply_to_1_2") return apply_to_pair(1, 2, max_nat);
  throw GameError("unknown built-in '" + std::string(name) + "'");
}

}  // namespace gamesem::builtins
