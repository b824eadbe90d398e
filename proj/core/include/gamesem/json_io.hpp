#pragma once

#include <map>

#include <nlohmann/json.hpp>

#include "gamesem/equiv.hpp"
#include "gamesem/observation.hpp"
#include "gamesem/pcf.hpp"

// JSON forms. Moves are written by canonical name, pointers as indices
// (-1 for the root). Arenas are written as their id; readers also accept
// an inline arena object {"moves": [...], "enabling": [...], "initials": [...]}.
namespace gamesem::json_io {

using nlohmann::json;

json arena_to_json(const Arena& a);
json arena_inline_json(const Arena& a);
ArenaPtr arena_from_json(const json& j);

json play_moves_to_json(const Arena& a, const Play& s);
Play play_moves_from_json(const Arena& a, const json& j);
// {"arena": …, "moves": [{"m": name, "ptr": int}, …]}
json play_to_json(const Arena& a, const Play& s);
Play play_from_json(const json& j, ArenaPtr* arena_out = nullptr);

// {"arena": …, "initial": name|null, "views": [[…], …]}
json odet_to_json(const ODetSet& s);
ODetSet odet_from_json(const json& j);

json view_set_to_json(const Arena& a, const ViewSet& s);
ViewSet view_set_from_json(const Arena& a, const json& j);

// {"arena": …, "bounds": …, "sets": [[views…], …], "bound_exceeded_count": n}
json obs_to_json(const ObservationalStrategy& o);
// Reads either the full object or {"arena": …, "sets": …}.
ObservationalStrategy obs_from_json(const json& j);

json bounds_to_json(const Bounds& b);
Bounds bounds_from_json(const json& j);

// View-function tabulation as a list of {"view": […], "response": {…}}.
json tabulation_to_json(const Arena& a, const std::map<Play, Response>& t);

json equiv_to_json(const EquivReport& r);
json leq_to_json(const LeqReport& r);
json laws_to_json(const LawReport& r);

json term_to_json(const pcf::TermPtr& t);

}  // namespace gamesem::json_io
