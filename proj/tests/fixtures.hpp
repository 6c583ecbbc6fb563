#pragma once

#include <string_view>
#include <vector>

#include "goursat/catalog.hpp"
#include "goursat/expr.hpp"
#include "goursat/group.hpp"
#include "goursat/product.hpp"

namespace goursat::testing {

inline DirectProduct product(std::string_view expr) {
  return build_product(parse_group_expr(expr));
}

/// Subgroup generated by coordinate tuples such as "(1,1)".
inline Subgroup generated(const DirectProduct& d, std::string_view gens) {
  return generated_subgroup(d.group(), parse_generators(d, gens));
}

inline Element tuple(const DirectProduct& d, std::vector<Element> coords) {
  return d.encode(coords);
}

struct KnownCount {
  const char* expr;
  std::size_t subgroups;
  std::size_t cyclic;
};

// Frozen from tests/tools/derive_counts.py (independent brute force over
// explicit element tuples).
inline const std::vector<KnownCount>& known_counts() {
  static const std::vector<KnownCount> counts = {
      {"Z1", 1, 1},         {"Z6", 4, 4},         {"S3", 6, 5},
      {"Z2xZ2", 5, 4},      {"Z2xZ4", 8, 6},      {"Z3xZ3", 6, 5},
      {"Z4xZ6", 16, 12},    {"S3xZ4", 26, 15},    {"S3xS3", 60, 26},
      {"D4xZ2", 35, 14},    {"Q8xZ2", 19, 10},    {"Z2xZ2xZ2", 16, 8},
      {"Z2xZ3xZ5", 8, 8},   {"Z2xZ2xZ3", 10, 8},  {"S3xZ2xZ2", 54, 20},
      {"Z2xZ4xZ3", 16, 12}, {"Z2xZ2xZ2xZ2", 67, 16},
      {"D4", 10, 7},        {"Q8", 6, 5},         {"A4", 10, 8},
      {"S4", 30, 17},
  };
  return counts;
}

}  // namespace goursat::testing
