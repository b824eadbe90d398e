#include "gamesem/arena.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace gamesem {

std::string to_string(MoveLabel label) {
  std::string out;
  out += label.is_o() ? 'O' : 'P';
  out += label.is_question() ? 'Q' : 'A';
  return out;
}

MoveLabel label_from_string(std::string_view text) {
  if (text == "OQ") return kOQ;
  if (text == "OA") return kOA;
  if (text == "PQ") return kPQ;
  if (text == "PA") return kPA;
  throw GameError("unknown move label '" + std::string(text) + "'");
}

Arena::Arena(std::string id, std::vector<MoveSpec> moves,
             std::vector<std::pair<MoveId, MoveId>> enabling,
             std::vector<MoveId> initials)
    : id_(std::move(id)),
      moves_(std::move(moves)),
      enabling_(moves_.size() * moves_.size(), 0),
      initials_(std::move(initials)),
      initial_flags_(moves_.size(), 0) {
  const std::size_t n = moves_.size();
  std::unordered_set<std::string> names;
  for (const auto& m : moves_) {
    if (!names.insert(m.name).second) {
      throw GameError("arena " + id_ + ": duplicate move '" + m.name + "'");
    }
  }
  for (MoveId i : initials_) {
    if (i >= n) throw GameError("arena " + id_ + ": initial out of range");
    if (moves_[i].label != kOQ) {
      throw GameError("arena " + id_ + ": initial move '" + moves_[i].name +
                      "' is not an O-question");
    }
    initial_flags_[i] = 1;
  }
  std::vector<char> enabled(n, 0);
  for (auto [from, to] : enabling) {
    if (from >= n || to >= n) {
      throw GameError("arena " + id_ + ": enabling pair out of range");
    }
    if (moves_[from].label.polarity == moves_[to].label.polarity) {
      throw GameError("arena " + id_ + ": '" + moves_[from].name +
                      "' enables '" + moves_[to].name +
                      "' of the same polarity");
    }
    if (initial_flags_[to]) {
      throw GameError("arena " + id_ + ": initial move '" + moves_[to].name +
                      "' has an enabler");
    }
    enabling_[from * n + to] = 1;
    enabled[to] = 1;
  }
  for (MoveId m = 0; m < n; ++m) {
    if (!initial_flags_[m] && !enabled[m]) {
      throw GameError("arena " + id_ + ": move '" + moves_[m].name +
                      "' is neither initial nor enabled");
    }
  }
  std::sort(initials_.begin(), initials_.end());
  initials_.erase(std::unique(initials_.begin(), initials_.end()),
                  initials_.end());
}

std::vector<std::pair<MoveId, MoveId>> Arena::enabling_pairs() const {
  std::vector<std::pair<MoveId, MoveId>> out;
  const auto n = static_cast<MoveId>(size());
  for (MoveId a = 0; a < n; ++a) {
    for (MoveId b = 0; b < n; ++b) {
      if (enables(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<MoveId> Arena::find(std::string_view name) const {
  for (MoveId m = 0; m < moves_.size(); ++m) {
    if (moves_[m].name == name) return m;
  }
  return std::nullopt;
}

MoveId Arena::at(std::string_view name) const {
  if (auto m = find(name)) return *m;
  throw GameError("arena " + id_ + " has no move '" + std::string(name) + "'");
}

bool Arena::same_structure(const Arena& other) const {
  if (size() != other.size()) return false;
  for (MoveId m = 0; m < size(); ++m) {
    if (label(m) != other.label(m)) return false;
  }
  return enabling_ == other.enabling_ && initials_ == other.initials_;
}

bool operator==(const Arena& a, const Arena& b) {
  if (!a.same_structure(b)) return false;
  for (MoveId m = 0; m < a.size(); ++m) {
    if (a.name(m) != b.name(m)) return false;
  }
  return true;
}

ArenaPtr make_nat_arena(unsigned max_nat) {
  std::vector<Arena::MoveSpec> moves;
  std::vector<std::pair<MoveId, MoveId>> enabling;
  moves.push_back({"q", kOQ});
  for (unsigned n = 0; n <= max_nat; ++n) {
    moves.push_back({std::to_string(n), kPA});
    enabling.emplace_back(0, n + 1);
  }
  return std::make_shared<const Arena>("N" + std::to_string(max_nat),
                                       std::move(moves), std::move(enabling),
                                       std::vector<MoveId>{0});
}

ArenaPtr make_sigma() {
  static const ArenaPtr sigma = std::make_shared<const Arena>(
      "Sigma", std::vector<Arena::MoveSpec>{{"q", kOQ}, {"a", kPA}},
      std::vector<std::pair<MoveId, MoveId>>{{0, 1}}, std::vector<MoveId>{0});
  return sigma;
}

ArenaPtr make_empty_arena() {
  static const ArenaPtr empty = std::make_shared<const Arena>(
      "I", std::vector<Arena::MoveSpec>{},
      std::vector<std::pair<MoveId, MoveId>>{}, std::vector<MoveId>{});
  return empty;
}

namespace {

struct Combined {
  std::vector<Arena::MoveSpec> moves;
  std::vector<std::pair<MoveId, MoveId>> enabling;
};

Combined tagged_union(const Arena& a, const Arena& b, bool flip_left) {
  Combined out;
  const auto off = static_cast<MoveId>(a.size());
  for (MoveId m = 0; m < a.size(); ++m) {
    MoveLabel l = a.label(m);
    out.moves.push_back({"L." + a.name(m), flip_left ? l.flipped() : l});
  }
  for (MoveId m = 0; m < b.size(); ++m) {
    out.moves.push_back({"R." + b.name(m), b.label(m)});
  }
  for (auto [x, y] : a.enabling_pairs()) out.enabling.emplace_back(x, y);
  for (auto [x, y] : b.enabling_pairs()) {
    out.enabling.emplace_back(x + off, y + off);
  }
  return out;
}

}  // namespace

ArenaPtr product(const ArenaPtr& a, const ArenaPtr& b) {
  Combined c = tagged_union(*a, *b, false);
  std::vector<MoveId> initials = a->initials();
  for (MoveId i : b->initials()) {
    initials.push_back(i + static_cast<MoveId>(a->size()));
  }
  auto arena = std::make_shared<Arena>("(" + a->id() + " x " + b->id() + ")",
                                       std::move(c.moves),
                                       std::move(c.enabling), initials);
  arena->shape_ = Arena::Shape::Product;
  arena->left_ = a;
  arena->right_ = b;
  return arena;
}

ArenaPtr arrow(const ArenaPtr& a, const ArenaPtr& b) {
  // Flipping makes a's initials PQ; enabled by b's initials they alternate.
  Combined c = tagged_union(*a, *b, true);
  const auto off = static_cast<MoveId>(a->size());
  for (MoveId ib : b->initials()) {
    for (MoveId ia : a->initials()) c.enabling.emplace_back(ib + off, ia);
  }
  std::vector<MoveId> initials;
  for (MoveId i : b->initials()) initials.push_back(i + off);
  auto arena = std::make_shared<Arena>("(" + a->id() + " => " + b->id() + ")",
                                       std::move(c.moves),
                                       std::move(c.enabling), initials);
  arena->shape_ = Arena::Shape::Arrow;
  arena->left_ = a;
  arena->right_ = b;
  return arena;
}

namespace {

class IdParser {
 public:
  explicit IdParser(std::string_view text) : text_(text) {}

  ArenaPtr parse() {
    ArenaPtr a = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return a;
  }

 private:
  ArenaPtr expr() {
    skip();
    if (eat("(")) {
      ArenaPtr left = expr();
      skip();
      ArenaPtr result;
      if (eat("=>")) {
        result = arrow(left, expr());
      } else if (eat("x")) {
        result = product(left, expr());
      } else {
        result = left;
      }
      skip();
      if (!eat(")")) fail("expected ')'");
      return result;
    }
    if (eat("Sigma")) return make_sigma();
    if (eat("N")) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a numeral cap after 'N'");
      return make_nat_arena(static_cast<unsigned>(
          std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    if (eat("I")) return make_empty_arena();
    fail("expected an arena");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw GameError("bad arena id '" + std::string(text_) + "' at offset " +
                    std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ArenaPtr arena_from_id(std::string_view id) { return IdParser(id).parse(); }

}  // namespace gamesem
