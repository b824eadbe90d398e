#include <cctype>
#include <optional>

#include "gamesem/pcf.hpp"

namespace gamesem::pcf {

Type Type::fn(Type dom, Type cod) {
  Type t;
  t.dom_ = std::make_shared<const Type>(std::move(dom));
  t.cod_ = std::make_shared<const Type>(std::move(cod));
  return t;
}

bool operator==(const Type& a, const Type& b) {
  if (a.is_nat() || b.is_nat()) return a.is_nat() == b.is_nat();
  return a.dom() == b.dom() && a.cod() == b.cod();
}

std::string Type::to_string() const {
  if (is_nat()) return "nat";
  std::string d = dom().to_string();
  if (!dom().is_nat()) d = "(" + d + ")";
  return d + " -> " + cod().to_string();
}

namespace {

enum class Tok {
  Ident, Number, Fun, Ifz, Then, Else, Succ, Pred, Fix, Nat, Omega,
  LParen, RParen, Colon, Arrow, Plus, End
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run(AddOrder& order) {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments(order);
      const SourcePos start = pos_;
      if (at_ >= src_.size()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      const char c = src_[at_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (at_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at_]))) {
          digits += advance();
        }
        out.push_back({Tok::Number, digits, start});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (at_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[at_])) ||
                src_[at_] == '_' || src_[at_] == '\'')) {
          word += advance();
        }
        out.push_back({keyword(word), word, start});
      } else if (c == '-' && at_ + 1 < src_.size() && src_[at_ + 1] == '>') {
        advance();
        advance();
        out.push_back({Tok::Arrow, "->", start});
      } else {
        advance();
        switch (c) {
          case '(': out.push_back({Tok::LParen, "(", start}); break;
          case ')': out.push_back({Tok::RParen, ")", start}); break;
          case ':': out.push_back({Tok::Colon, ":", start}); break;
          case '+': out.push_back({Tok::Plus, "+", start}); break;
          default:
            throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
      }
    }
  }

 private:
  static Tok keyword(const std::string& w) {
    if (w == "fun") return Tok::Fun;
    if (w == "ifz") return Tok::Ifz;
    if (w == "then") return Tok::Then;
    if (w == "else") return Tok::Else;
    if (w == "succ") return Tok::Succ;
    if (w == "pred") return Tok::Pred;
    if (w == "fix") return Tok::Fix;
    if (w == "nat") return Tok::Nat;
    if (w == "omega") return Tok::Omega;
    return Tok::Ident;
  }

  char advance() {
    const char c = src_[at_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_space_and_comments(AddOrder& order) {
    while (at_ < src_.size()) {
      const char c = src_[at_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        std::string line;
        while (at_ < src_.size() && src_[at_] != '\n') line += advance();
        if (line.rfind("#pragma add_rl", 0) == 0) order = AddOrder::RightToLeft;
        if (line.rfind("#pragma add_lr", 0) == 0) order = AddOrder::LeftToRight;
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t at_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, AddOrder order)
      : toks_(std::move(toks)), order_(order) {}

  TermPtr parse_all() {
    TermPtr t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool is(Tok k) const { return peek().kind == k; }
  Token next() { return toks_[at_ == toks_.size() - 1 ? at_ : at_++]; }
  Token expect(Tok k, const char* what) {
    if (!is(k)) {
      throw ParseError(peek().pos, std::string("expected ") + what +
                                       (peek().kind == Tok::End
                                            ? " but reached end of input"
                                            : " but found '" + peek().text + "'"));
    }
    return next();
  }

  TermPtr term() {
    const SourcePos pos = peek().pos;
    if (is(Tok::Fun)) {
      next();
      const Token var = expect(Tok::Ident, "a variable name");
      expect(Tok::Colon, "':'");
      Type ty = binder_type();
      expect(Tok::Arrow, "'->'");
      TermPtr body = term();
      return make(Lam{var.text, std::move(ty), std::move(body)}, pos);
    }
    if (is(Tok::Ifz)) {
      next();
      TermPtr c = term();
      expect(Tok::Then, "'then'");
      TermPtr t = term();
      expect(Tok::Else, "'else'");
      TermPtr e = term();
      return make(Ifz{std::move(c), std::move(t), std::move(e)}, pos);
    }
    return sum();
  }

  TermPtr sum() {
    TermPtr left = prefix();
    while (is(Tok::Plus)) {
      const SourcePos pos = next().pos;
      TermPtr right = prefix();
      left = make(Add{std::move(left), std::move(right), order_}, pos);
    }
    return left;
  }

  TermPtr prefix() {
    const SourcePos pos = peek().pos;
    if (is(Tok::Succ)) {
      next();
      return make(Succ{prefix()}, pos);
    }
    if (is(Tok::Pred)) {
      next();
      return make(Pred{prefix()}, pos);
    }
    if (is(Tok::Fix)) {
      next();
      return make(Fix{prefix()}, pos);
    }
    return application();
  }

  bool starts_atom() const {
    return is(Tok::Number) || is(Tok::Ident) || is(Tok::Omega) ||
           is(Tok::LParen);
  }

  TermPtr application() {
    TermPtr t = atom();
    while (starts_atom()) {
      const SourcePos pos = peek().pos;
      t = make(App{std::move(t), atom()}, pos);
    }
    return t;
  }

  TermPtr atom() {
    const Token tok = peek();
    switch (tok.kind) {
      case Tok::Number:
        next();
        try {
          return make(Num{static_cast<unsigned>(std::stoul(tok.text))}, tok.pos);
        } catch (const std::exception&) {
          throw ParseError(tok.pos, "numeral out of range");
        }
      case Tok::Ident:
        next();
        return make(Var{tok.text}, tok.pos);
      case Tok::Omega:
        next();
        return make(Omega{Type::nat()}, tok.pos);
      case Tok::LParen: {
        next();
        TermPtr t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        throw ParseError(tok.pos, tok.kind == Tok::End
                                      ? "expected a term but reached end of input"
                                      : "expected a term but found '" + tok.text + "'");
    }
  }

  // In "fun x : T -> body" the type runs up to the last "->" that is
  // still followed by a type, so "fun f : nat -> nat -> f" binds f at
  // nat -> nat.
  Type binder_type() {
    std::vector<Type> parts{type_atom()};
    while (is(Tok::Arrow)) {
      const std::size_t saved = at_;
      next();
      std::optional<Type> more = try_type_atom();
      if (!more || !is(Tok::Arrow)) {
        at_ = saved;
        break;
      }
      parts.push_back(std::move(*more));
    }
    Type t = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) t = Type::fn(parts[i], t);
    return t;
  }

  std::optional<Type> try_type_atom() {
    const std::size_t saved = at_;
    try {
      return type_atom();
    } catch (const ParseError&) {
      at_ = saved;
      return std::nullopt;
    }
  }

  Type type_atom() {
    if (is(Tok::Nat)) {
      next();
      return Type::nat();
    }
    if (is(Tok::LParen)) {
      next();
      Type t = full_type();
      expect(Tok::RParen, "')'");
      return t;
    }
    throw ParseError(peek().pos, "expected a type");
  }

  Type full_type() {
    Type dom = type_atom();
    if (!is(Tok::Arrow)) return dom;
    next();
    return Type::fn(std::move(dom), full_type());
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  AddOrder order_;
};

std::optional<Type> lookup(const Context& ctx, const std::string& name) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  return std::nullopt;
}

[[noreturn]] void mismatch(const TermPtr& t, const std::string& what) {
  throw TypeError(std::to_string(t->pos.line) + ":" +
                  std::to_string(t->pos.column) + ": " + what + " in '" +
                  to_string(t) + "'");
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

TermPtr parse(std::string_view source) {
  AddOrder order = AddOrder::LeftToRight;
  std::vector<Token> toks = Lexer(source).run(order);
  return Parser(std::move(toks), order).parse_all();
}

Type typecheck(const TermPtr& t, const Context& ctx) {
  auto expect_nat = [&](const TermPtr& sub, const char* role) {
    const Type ty = typecheck(sub, ctx);
    if (!ty.is_nat()) {
      mismatch(t, std::string(role) + " has type " + ty.to_string() +
                      ", expected nat");
    }
  };
  return std::visit(
      overloaded{
          [&](const Var& v) -> Type {
            if (auto ty = lookup(ctx, v.name)) return *ty;
            mismatch(t, "unbound variable '" + v.name + "'");
          },
          [&](const Lam& l) -> Type {
            Context inner = ctx;
            inner.emplace_back(l.var, l.type);
            return Type::fn(l.type, typecheck(l.body, inner));
          },
          [&](const App& a) -> Type {
            const Type f = typecheck(a.fn, ctx);
            const Type x = typecheck(a.arg, ctx);
            if (f.is_nat()) mismatch(t, "applying a term of type nat");
            if (!(f.dom() == x)) {
              mismatch(t, "argument has type " + x.to_string() +
                              ", expected " + f.dom().to_string());
            }
            return f.cod();
          },
          [&](const Num&) -> Type { return Type::nat(); },
          [&](const Succ& s) -> Type {
            expect_nat(s.arg, "succ argument");
            return Type::nat();
          },
          [&](const Pred& p) -> Type {
            expect_nat(p.arg, "pred argument");
            return Type::nat();
          },
          [&](const Ifz& i) -> Type {
            expect_nat(i.cond, "ifz condition");
            const Type a = typecheck(i.then_branch, ctx);
            const Type b = typecheck(i.else_branch, ctx);
            if (!(a == b)) {
              mismatch(t, "ifz branches differ: " + a.to_string() + " vs " +
                              b.to_string());
            }
            return a;
          },
          [&](const Fix& f) -> Type {
            const Type ty = typecheck(f.fn, ctx);
            if (ty.is_nat() || !(ty.dom() == ty.cod())) {
              mismatch(t, "fix needs a T -> T argument, got " + ty.to_string());
            }
            return ty.dom();
          },
          [&](const Omega& o) -> Type { return o.type; },
          [&](const Add& a) -> Type {
            expect_nat(a.left, "left operand of +");
            expect_nat(a.right, "right operand of +");
            return Type::nat();
          },
      },
      t->node);
}

std::string to_string(const TermPtr& t) {
  return std::visit(
      overloaded{
          [](const Var& v) { return v.name; },
          [](const Lam& l) {
            return "(fun " + l.var + ": " + l.type.to_string() + " -> " +
                   to_string(l.body) + ")";
          },
          [](const App& a) {
            return "(" + to_string(a.fn) + " " + to_string(a.arg) + ")";
          },
          [](const Num& n) { return std::to_string(n.value); },
          [](const Succ& s) { return "(succ " + to_string(s.arg) + ")"; },
          [](const Pred& p) { return "(pred " + to_string(p.arg) + ")"; },
          [](const Ifz& i) {
            return "(ifz " + to_string(i.cond) + " then " +
                   to_string(i.then_branch) + " else " +
                   to_string(i.else_branch) + ")";
          },
          [](const Fix& f) { return "(fix " + to_string(f.fn) + ")"; },
          [](const Omega& o) {
            return o.type.is_nat() ? std::string("omega")
                                   : "omega[" + o.type.to_string() + "]";
          },
          [](const Add& a) {
            return "(" + to_string(a.left) +
                   (a.order == AddOrder::LeftToRight ? " + " : " +rl ") +
                   to_string(a.right) + ")";
          },
      },
      t->node);
}

}  // namespace gamesem::pcf
