#include "goursat/expr.hpp"

#include <cctype>
#include <unordered_map>
#include <utility>

namespace goursat {

ParseError::ParseError(Kind kind, std::size_t position, std::string expected,
                       std::string detail)
    : std::invalid_argument("at position " + std::to_string(position) + ": " + detail +
                            (expected.empty() ? "" : " (expected " + expected + ")")),
      kind_(kind),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip_space();
    return text_[pos_++];
  }
  std::size_t pos() {
    skip_space();
    return pos_;
  }

  // Digits may not be split by whitespace.
  int integer(const char* what) {
    const std::size_t start = pos();
    std::size_t end = start;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == start) throw ParseError(ParseError::Kind::kSyntax, start, what, "missing number");
    if (end - start > 6) {
      throw ParseError(ParseError::Kind::kRange, start, what, "number too large");
    }
    pos_ = end;
    return std::stoi(std::string(text_.substr(start, end - start)));
  }

  std::string_view token() {
    const std::size_t start = pos();
    std::size_t end = start;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    pos_ = end;
    return text_.substr(start, end - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

GroupSpec parse_atom(Cursor& in) {
  constexpr const char* kAtoms = "one of Z<n>, S<n>, A<n>, D<n>, Q8, 1";
  if (in.done()) throw ParseError(ParseError::Kind::kSyntax, in.pos(), kAtoms, "unexpected end of input");
  const std::size_t at = in.pos();
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(in.take())));
  auto ranged = [&](GroupKind kind, int lo, int hi) {
    const std::size_t num_at = in.pos();
    const int n = in.integer("a positive integer");
    if (n < lo || (hi > 0 && n > hi)) {
      GroupSpec spec{kind, n};
      throw ParseError(ParseError::Kind::kRange, num_at,
                       hi > 0 ? std::to_string(lo) + ".." + std::to_string(hi)
                              : "an integer >= " + std::to_string(lo),
                       spec_label(spec) + ": parameter out of range");
    }
    return GroupSpec{kind, n};
  };
  switch (c) {
    case 'Z':
      return ranged(GroupKind::kCyclic, 1, 0);
    case 'S':
      return ranged(GroupKind::kSymmetric, 1, 5);
    case 'A':
      return ranged(GroupKind::kAlternating, 1, 5);
    case 'D':
      return ranged(GroupKind::kDihedral, 1, 0);
    case 'Q': {
      const std::size_t num_at = in.pos();
      const int n = in.integer("8");
      if (n != 8) {
        throw ParseError(ParseError::Kind::kUnsupported, num_at, "8",
                         "only the quaternion group Q8 is supported");
      }
      return {GroupKind::kQuaternion, 8};
    }
    case '1':
      return {GroupKind::kTrivial, 1};
    default:
      throw ParseError(ParseError::Kind::kUnsupported, at, kAtoms,
                       std::string("unknown group atom '") + c + "'");
  }
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) {
  Cursor in(text);
  GroupExpr expr;
  expr.atoms.push_back(parse_atom(in));
  while (!in.done()) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(in.peek())));
    if (c != 'x') {
      throw ParseError(ParseError::Kind::kSyntax, in.pos(), "'x' or end of input",
                       std::string("unexpected '") + in.peek() + "'");
    }
    in.take();
    expr.atoms.push_back(parse_atom(in));
  }
  return expr;
}

std::string to_string(const GroupExpr& expr) {
  std::string out;
  for (std::size_t i = 0; i < expr.atoms.size(); ++i) {
    if (i > 0) out += "x";
    out += spec_label(expr.atoms[i]);
  }
  return out;
}

DirectProduct build_product(const GroupExpr& expr, std::size_t max_order) {
  std::vector<GroupPtr> factors;
  for (const GroupSpec& spec : expr.atoms) factors.push_back(make_group(spec, max_order));
  return DirectProduct(std::move(factors), max_order);
}

std::vector<Element> parse_generators(const DirectProduct& d, std::string_view text) {
  std::vector<std::unordered_map<std::string, Element>> names(d.arity());
  for (std::size_t i = 0; i < d.arity(); ++i) {
    const FiniteGroup& f = *d.factor(i);
    for (std::size_t x = 0; x < f.order(); ++x) {
      names[i].emplace(f.name(static_cast<Element>(x)), static_cast<Element>(x));
    }
  }
  auto lookup = [&](std::size_t factor, std::string_view tok, std::size_t at) {
    if (tok.empty()) {
      throw ParseError(ParseError::Kind::kSyntax, at, "an element name", "missing coordinate");
    }
    auto it = names[factor].find(std::string(tok));
    if (it == names[factor].end()) {
      throw ParseError(ParseError::Kind::kRange, at,
                       "an element of " + d.factor(factor)->label(),
                       "coordinate '" + std::string(tok) + "' out of range");
    }
    return it->second;
  };

  Cursor in(text);
  std::vector<Element> gens;
  if (in.done()) return gens;
  const bool bare = d.arity() == 1 && in.peek() != '(';
  while (true) {
    if (bare) {
      const std::size_t at = in.pos();
      gens.push_back(lookup(0, in.token(), at));
    } else {
      if (in.peek() != '(') throw ParseError(ParseError::Kind::kSyntax, in.pos(), "'('", "malformed tuple");
      in.take();
      std::vector<Element> coords;
      while (true) {
        if (coords.size() == d.arity()) {
          throw ParseError(ParseError::Kind::kSyntax, in.pos(), "')'",
                           "tuple has more than " + std::to_string(d.arity()) + " coordinates");
        }
        const std::size_t at = in.pos();
        coords.push_back(lookup(coords.size(), in.token(), at));
        if (in.peek() == ',') {
          in.take();
          continue;
        }
        if (in.peek() == ')') {
          in.take();
          break;
        }
        throw ParseError(ParseError::Kind::kSyntax, in.pos(), "',' or ')'", "malformed tuple");
      }
      if (coords.size() != d.arity()) {
        throw ParseError(ParseError::Kind::kSyntax, in.pos(),
                         std::to_string(d.arity()) + " coordinates",
                         "tuple has " + std::to_string(coords.size()) + " coordinates");
      }
      gens.push_back(d.encode(coords));
    }
    if (in.done()) break;
    if (in.peek() != ',') throw ParseError(ParseError::Kind::kSyntax, in.pos(), "','", "malformed generator list");
    in.take();
  }
  return gens;
}

std::string tuple_name(const DirectProduct& d, Element x) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.arity(); ++i) {
    if (i > 0) out += ",";
    out += d.factor(i)->name(d.coordinate(x, i));
  }
  return out + ")";
}

}  // namespace goursat
