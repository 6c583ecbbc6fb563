#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "goursat/catalog.hpp"
#include "goursat/product.hpp"

namespace goursat {

/// Parse failure in a group expression or generator list. `position` is a
/// 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  enum class Kind { kSyntax, kUnsupported, kRange };

  ParseError(Kind kind, std::size_t position, std::string expected, std::string detail);

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string expected_;
};

/// Product of catalog atoms.
///
/// Grammar (case-insensitive, whitespace ignored):
///   expr := atom ('x' atom)*
///   atom := 'Z' int | 'S' int | 'A' int | 'D' int | 'Q8' | '1'
struct GroupExpr {
  std::vector<GroupSpec> atoms;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

GroupExpr parse_group_expr(std::string_view text);

/// "Z2xZ4"-style canonical label.
std::string to_string(const GroupExpr& expr);

DirectProduct build_product(const GroupExpr& expr,
                            std::size_t max_order = kDefaultMaxGroupOrder);

/// Parses "(a,b,...),(c,d,...)" into product elements. Coordinates are element
/// names of the corresponding factor ("0", "1", ... for Z/D/Q8, one-line
/// notation such as "213" for S/A). A one-factor product also accepts bare
/// comma-separated names. An empty string yields no generators.
std::vector<Element> parse_generators(const DirectProduct& d, std::string_view text);

/// "(a,b,...)" using factor element names.
std::string tuple_name(const DirectProduct& d, Element x);

}  // namespace goursat
