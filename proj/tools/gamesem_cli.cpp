// gamesem: PCF terms to innocent strategies, obs values and
// bound-relative equivalence verdicts.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gamesem/builtins.hpp"
#include "gamesem/equiv.hpp"
#include "gamesem/json_io.hpp"
#include "gamesem/pcf.hpp"

namespace {

using gamesem::Bounds;
using gamesem::InnocentStrategy;
using nlohmann::json;
namespace io = gamesem::json_io;

enum Exit : int { kOk = 0, kInequiv = 1, kInputError = 2, kInternal = 3 };

// Input failures carry the file they came from.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gamesem::pcf::TermPtr load_term(const std::string& path) {
  try {
    return gamesem::pcf::parse(slurp(path));
  } catch (const gamesem::pcf::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

// FILE is a PCF source file, or @name for a built-in strategy.
InnocentStrategy load_strategy(const std::string& path, const Bounds& b) {
  if (!path.empty() && path[0] == '@') {
    return gamesem::builtins::by_name(path.substr(1), b.max_nat);
  }
  const auto term = load_term(path);
  try {
    return gamesem::pcf::denote(term, b);
  } catch (const gamesem::pcf::TypeError& e) {
    throw InputError(path + ":" + e.what());
  }
}

json load_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

void add_bounds(CLI::App* cmd, Bounds& b) {
  cmd->add_option("--max-nat", b.max_nat, "Largest numeral")
      ->capture_default_str();
  cmd->add_option("--max-play-len", b.max_play_len, "Longest play explored")
      ->capture_default_str();
  cmd->add_option("--max-view-len", b.max_view_len,
                  "Longest O-view in enumerated tests")
      ->capture_default_str();
  cmd->add_option("--fix-depth", b.fix_depth, "Unfoldings of fix")
      ->capture_default_str();
}

json oracle_json(const gamesem::OracleReport& r) {
  return {{"forward", io::leq_to_json(r.forward)},
          {"backward", io::leq_to_json(r.backward)},
          {"conclusive", r.conclusive},
          {"agrees", r.agrees}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-semantic observational equivalence for PCF"};
  app.require_subcommand(1);

  Bounds bounds;
  std::string file;
  std::string file2;
  std::string set_path;
  bool complete_only = false;
  bool oracle = false;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a term and dump its AST");
  parse_cmd->add_option("FILE", file)->required();

  auto* denote_cmd = app.add_subcommand("denote", "Tabulate the view function");
  denote_cmd->add_option("FILE", file)->required();
  add_bounds(denote_cmd, bounds);

  auto* traces_cmd = app.add_subcommand("traces", "List bounded plays");
  traces_cmd->add_option("FILE", file)->required();
  traces_cmd->add_flag("--complete-only", complete_only, "Only complete plays");
  add_bounds(traces_cmd, bounds);

  auto* obs_cmd = app.add_subcommand("obs", "Compute the observational strategy");
  obs_cmd->add_option("FILE", file)->required();
  add_bounds(obs_cmd, bounds);

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two terms at bounds");
  equiv_cmd->add_option("FILE1", file)->required();
  equiv_cmd->add_option("FILE2", file2)->required();
  equiv_cmd->add_flag("--oracle", oracle,
                      "Cross-check against the brute-force test oracle");
  add_bounds(equiv_cmd, bounds);

  auto* test_cmd = app.add_subcommand("test", "Run one test set against a term");
  test_cmd->add_option("FILE", file)->required();
  test_cmd->add_option("--set", set_path, "O-view set JSON")->required();
  add_bounds(test_cmd, bounds);

  auto* laws_cmd = app.add_subcommand("laws", "Check category laws on built-ins");
  add_bounds(laws_cmd, bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    bounds.validate();

    if (*parse_cmd) {
      const auto term = load_term(file);
      json out = {{"ast", io::term_to_json(term)},
                  {"pretty", gamesem::pcf::to_string(term)}};
      try {
        out["type"] = gamesem::pcf::typecheck(term).to_string();
      } catch (const gamesem::pcf::TypeError& e) {
        out["type"] = nullptr;
        out["type_error"] = e.what();
      }
      print(out);
      return kOk;
    }

    if (*denote_cmd) {
      const InnocentStrategy s = load_strategy(file, bounds);
      print({{"arena", io::arena_to_json(s.arena())},
             {"bounds", io::bounds_to_json(bounds)},
             {"tabulation", io::tabulation_to_json(s.arena(),
                                                   gamesem::tabulate(s, bounds))}});
      return kOk;
    }

    if (*traces_cmd) {
      const InnocentStrategy s = load_strategy(file, bounds);
      const gamesem::TraceSet ts = gamesem::traces(s, bounds);
      json plays = json::array();
      for (const gamesem::Play& p : ts.plays) {
        if (complete_only && !gamesem::is_complete(s.arena(), p)) continue;
        plays.push_back(io::play_moves_to_json(s.arena(), p));
      }
      print({{"arena", io::arena_to_json(s.arena())},
             {"bounds", io::bounds_to_json(bounds)},
             {"plays", plays},
             {"bound_exceeded_count", ts.bound_exceeded}});
      return kOk;
    }

    if (*obs_cmd) {
      print(io::obs_to_json(gamesem::obs(load_strategy(file, bounds), bounds)));
      return kOk;
    }

    if (*equiv_cmd) {
      const InnocentStrategy s1 = load_strategy(file, bounds);
      const InnocentStrategy s2 = load_strategy(file2, bounds);
      if (!(s1.arena() == s2.arena())) {
        throw InputError("terms have different types: " + s1.arena().id() +
                         " vs " + s2.arena().id());
      }
      const gamesem::EquivReport r = gamesem::obs_equiv(s1, s2, bounds);
      json out = io::equiv_to_json(r);
      int code = r.verdict == gamesem::EquivVerdict::EquivAtBounds ? kOk : kInequiv;
      if (oracle) {
        const gamesem::OracleReport o = gamesem::cross_check(s1, s2, r, bounds);
        out["oracle"] = oracle_json(o);
        if (!o.agrees) code = kInternal;
      }
      print(out);
      if (code == kInternal) {
        std::cerr << "error: obs comparison and test oracle disagree\n";
      }
      return code;
    }

    if (*test_cmd) {
      const InnocentStrategy s = load_strategy(file, bounds);
      const gamesem::ODetSet set = io::odet_from_json(load_json(set_path));
      if (!(set.arena() == s.arena())) {
        throw InputError(set_path + ": test set is over " + set.arena().id() +
                         " but the term's arena is " + s.arena().id());
      }
      std::cout << gamesem::to_string(gamesem::run_test(s, set, bounds)) << '\n';
      return kOk;
    }

    if (*laws_cmd) {
      const gamesem::LawReport r = gamesem::check_category_laws(bounds);
      print(io::laws_to_json(r));
      return r.all_passed() ? kOk : kInternal;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const gamesem::StrategyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const gamesem::GameError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
