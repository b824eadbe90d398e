#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/bounds.hpp"
#include "gamesem/strategy.hpp"

namespace gamesem::pcf {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public GameError {
 public:
  ParseError(SourcePos pos, const std::string& what)
      : GameError(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                  ": " + what),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class TypeError : public GameError {
 public:
  using GameError::GameError;
};

// nat | T -> U
class Type {
 public:
  static Type nat() { return Type(); }
  static Type fn(Type dom, Type cod);

  bool is_nat() const { return !dom_; }
  const Type& dom() const { return *dom_; }
  const Type& cod() const { return *cod_; }
  std::string to_string() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  std::shared_ptr<const Type> dom_;
  std::shared_ptr<const Type> cod_;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class AddOrder { LeftToRight, RightToLeft };

struct Var { std::string name; };
struct Lam { std::string var; Type type; TermPtr body; };
struct App { TermPtr fn; TermPtr arg; };
struct Num { unsigned value; };
struct Succ { TermPtr arg; };
struct Pred { TermPtr arg; };
struct Ifz { TermPtr cond; TermPtr then_branch; TermPtr else_branch; };
struct Fix { TermPtr fn; };
// Divergence at a given type; `omega` in source is the nat instance.
struct Omega { Type type; };
// Binary `+`, interrogating its operands in the given order.
struct Add { TermPtr left; TermPtr right; AddOrder order; };

struct Term {
  std::variant<Var, Lam, App, Num, Succ, Pred, Ifz, Fix, Omega, Add> node;
  SourcePos pos;
};

template <typename Node>
TermPtr make(Node n, SourcePos pos = {}) {
  return std::make_shared<const Term>(Term{std::move(n), pos});
}

// Concrete grammar (one term per input):
//   term ::= "fun" ident ":" type "->" term
//          | "ifz" term "then" term "else" term
//          | sum
//   sum  ::= prefix ("+" prefix)*
//   prefix ::= ("succ" | "pred" | "fix") prefix | app
//   app  ::= atom atom*
//   atom ::= numeral | ident | "omega" | "(" term ")"
//   type ::= "nat" | type "->" type | "(" type ")"     (right-assoc)
// `#` starts a line comment; the line "#pragma add_rl" makes `+`
// interrogate right-to-left (default "#pragma add_lr").
TermPtr parse(std::string_view source);

using Context = std::vector<std::pair<std::string, Type>>;
// Throws TypeError naming the offending subterm.
Type typecheck(const TermPtr& t, const Context& ctx = {});

std::string to_string(const TermPtr& t);

// ⟦T⟧ with nat truncated at max_nat.
ArenaPtr type_arena(const Type& t, unsigned max_nat);

// The innocent strategy of a closed, well-typed term on type_arena(type).
// fix unfolds syntactically b.fix_depth times over Ω; compositions that
// run out of budget answer BoundExceeded instead of failing.
InnocentStrategy denote(const TermPtr& t, const Bounds& b);

}  // namespace gamesem::pcf
