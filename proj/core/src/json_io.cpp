#include "gamesem/json_io.hpp"

namespace gamesem::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw GameError(std::string("JSON: missing field '") + key + "'");
  }
  return j.at(key);
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

json arena_to_json(const Arena& a) { return a.id(); }

json arena_inline_json(const Arena& a) {
  json moves = json::array();
  for (MoveId m = 0; m < a.size(); ++m) {
    moves.push_back({{"name", a.name(m)}, {"label", to_string(a.label(m))}});
  }
  json enabling = json::array();
  for (auto [x, y] : a.enabling_pairs()) {
    enabling.push_back({a.name(x), a.name(y)});
  }
  json initials = json::array();
  for (MoveId i : a.initials()) initials.push_back(a.name(i));
  return {{"id", a.id()}, {"moves", moves}, {"enabling", enabling},
          {"initials", initials}};
}

ArenaPtr arena_from_json(const json& j) {
  if (j.is_string()) return arena_from_id(j.get<std::string>());
  if (!j.is_object()) throw GameError("JSON: arena must be an id or an object");
  std::vector<Arena::MoveSpec> moves;
  std::map<std::string, MoveId> index;
  for (const json& m : field(j, "moves")) {
    const auto name = field(m, "name").get<std::string>();
    index.emplace(name, static_cast<MoveId>(moves.size()));
    moves.push_back({name, label_from_string(field(m, "label").get<std::string>())});
  }
  auto lookup = [&](const json& n) {
    auto it = index.find(n.get<std::string>());
    if (it == index.end()) {
      throw GameError("JSON: unknown move '" + n.get<std::string>() + "'");
    }
    return it->second;
  };
  std::vector<std::pair<MoveId, MoveId>> enabling;
  for (const json& e : field(j, "enabling")) {
    if (!e.is_array() || e.size() != 2) throw GameError("JSON: enabling pair expected");
    enabling.emplace_back(lookup(e[0]), lookup(e[1]));
  }
  std::vector<MoveId> initials;
  for (const json& i : field(j, "initials")) initials.push_back(lookup(i));
  const std::string id = j.value("id", std::string("custom"));
  return std::make_shared<const Arena>(id, std::move(moves), std::move(enabling),
                                       std::move(initials));
}

json play_moves_to_json(const Arena& a, const Play& s) {
  json out = json::array();
  for (const Occurrence& o : s) {
    out.push_back({{"m", a.name(o.move)}, {"ptr", o.ptr}});
  }
  return out;
}

Play play_moves_from_json(const Arena& a, const json& j) {
  if (!j.is_array()) throw GameError("JSON: a play is an array of moves");
  Play s;
  for (const json& o : j) {
    const auto name = field(o, "m").get<std::string>();
    const auto m = a.find(name);
    if (!m) throw GameError("JSON: move '" + name + "' not in arena " + a.id());
    s.push_back({*m, field(o, "ptr").get<std::int32_t>()});
  }
  return s;
}

json play_to_json(const Arena& a, const Play& s) {
  return {{"arena", arena_to_json(a)}, {"moves", play_moves_to_json(a, s)}};
}

Play play_from_json(const json& j, ArenaPtr* arena_out) {
  ArenaPtr a = arena_from_json(field(j, "arena"));
  Play s = play_moves_from_json(*a, field(j, "moves"));
  if (arena_out) *arena_out = std::move(a);
  return s;
}

json view_set_to_json(const Arena& a, const ViewSet& s) {
  json out = json::array();
  for (const Play& v : s) out.push_back(play_moves_to_json(a, v));
  return out;
}

ViewSet view_set_from_json(const Arena& a, const json& j) {
  if (!j.is_array()) throw GameError("JSON: a view set is an array of plays");
  ViewSet s;
  for (const json& v : j) s.insert(play_moves_from_json(a, v));
  return s;
}

json odet_to_json(const ODetSet& s) {
  const auto init = s.initial();
  return {{"arena", arena_to_json(s.arena())},
          {"initial", init ? json(s.arena().name(*init)) : json(nullptr)},
          {"views", view_set_to_json(s.arena(), s.views())}};
}

ODetSet odet_from_json(const json& j) {
  ArenaPtr a = arena_from_json(field(j, "arena"));
  ViewSet views = view_set_from_json(*a, field(j, "views"));
  ODetSet s(a, std::move(views));
  if (j.contains("initial") && !j.at("initial").is_null()) {
    const auto init = s.initial();
    if (!init || s.arena().name(*init) != j.at("initial").get<std::string>()) {
      throw GameError("JSON: 'initial' does not match the views");
    }
  }
  return s;
}

json bounds_to_json(const Bounds& b) {
  return {{"max_nat", b.max_nat},
          {"max_play_len", b.max_play_len},
          {"max_view_len", b.max_view_len},
          {"fix_depth", b.fix_depth}};
}

Bounds bounds_from_json(const json& j) {
  Bounds b;
  b.max_nat = j.value("max_nat", b.max_nat);
  b.max_play_len = j.value("max_play_len", b.max_play_len);
  b.max_view_len = j.value("max_view_len", b.max_view_len);
  b.fix_depth = j.value("fix_depth", b.fix_depth);
  b.validate();
  return b;
}

json obs_to_json(const ObservationalStrategy& o) {
  json sets = json::array();
  for (const ViewSet& s : o.sets()) sets.push_back(view_set_to_json(o.arena(), s));
  return {{"arena", arena_to_json(o.arena())},
          {"bounds", bounds_to_json(o.bounds())},
          {"sets", sets},
          {"bound_exceeded_count", o.bound_exceeded()}};
}

ObservationalStrategy obs_from_json(const json& j) {
  ArenaPtr a = arena_from_json(field(j, "arena"));
  std::set<ViewSet> sets;
  for (const json& s : field(j, "sets")) sets.insert(view_set_from_json(*a, s));
  const Bounds b = j.contains("bounds") ? bounds_from_json(j.at("bounds")) : Bounds{};
  const std::size_t be = j.value("bound_exceeded_count", std::size_t{0});
  return ObservationalStrategy(std::move(a), std::move(sets), b, be);
}

json tabulation_to_json(const Arena& a, const std::map<Play, Response>& t) {
  json out = json::array();
  for (const auto& [view, r] : t) {
    out.push_back({{"view", play_moves_to_json(a, view)},
                   {"response", {{"m", a.name(r.move)}, {"ptr", r.ptr}}}});
  }
  return out;
}

json equiv_to_json(const EquivReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"bounds", bounds_to_json(r.bounds)},
          {"witness", r.witness ? odet_to_json(*r.witness) : json(nullptr)},
          {"bound_exceeded_count", r.bound_exceeded}};
}

json leq_to_json(const LeqReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"bounds", bounds_to_json(r.bounds)},
          {"witness", r.witness ? odet_to_json(*r.witness) : json(nullptr)},
          {"tests_run", r.tests_run},
          {"bound_exceeded_count", r.bound_exceeded}};
}

json laws_to_json(const LawReport& r) {
  json checks = json::array();
  for (const LawCheck& c : r.checks) {
    checks.push_back({{"law", c.law},
                      {"instance", c.instance},
                      {"passed", c.passed},
                      {"witness", c.witness ? odet_to_json(*c.witness) : json(nullptr)},
                      {"bound_exceeded_count", c.bound_exceeded}});
  }
  return {{"bounds", bounds_to_json(r.bounds)},
          {"all_passed", r.all_passed()},
          {"checks", checks}};
}

json term_to_json(const pcf::TermPtr& t) {
  using namespace pcf;
  json out = std::visit(
      overloaded{
          [](const Var& v) -> json { return {{"node", "var"}, {"name", v.name}}; },
          [](const Lam& l) -> json {
            return {{"node", "fun"}, {"var", l.var},
                    {"type", l.type.to_string()}, {"body", term_to_json(l.body)}};
          },
          [](const App& a) -> json {
            return {{"node", "app"}, {"fn", term_to_json(a.fn)},
                    {"arg", term_to_json(a.arg)}};
          },
          [](const Num& n) -> json { return {{"node", "num"}, {"value", n.value}}; },
          [](const Succ& s) -> json {
            return {{"node", "succ"}, {"arg", term_to_json(s.arg)}};
          },
          [](const Pred& p) -> json {
            return {{"node", "pred"}, {"arg", term_to_json(p.arg)}};
          },
          [](const Ifz& i) -> json {
            return {{"node", "ifz"}, {"cond", term_to_json(i.cond)},
                    {"then", term_to_json(i.then_branch)},
                    {"else", term_to_json(i.else_branch)}};
          },
          [](const Fix& f) -> json {
            return {{"node", "fix"}, {"fn", term_to_json(f.fn)}};
          },
          [](const Omega& o) -> json {
            return {{"node", "omega"}, {"type", o.type.to_string()}};
          },
          [](const Add& a) -> json {
            return {{"node", "add"},
                    {"order", a.order == AddOrder::LeftToRight ? "LR" : "RL"},
                    {"left", term_to_json(a.left)},
                    {"right", term_to_json(a.right)}};
          },
      },
      t->node);
  out["pos"] = {{"line", t->pos.line}, {"column", t->pos.column}};
  return out;
}

}  // namespace gamesem::json_io
