#include "goursat/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace goursat {

namespace {

constexpr int kMaxPermutationDegree = 5;

std::size_t expected_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::kTrivial:
      return 1;
    case GroupKind::kCyclic:
      return static_cast<std::size_t>(spec.param);
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating: {
      std::size_t f = 1;
      for (int i = 2; i <= spec.param; ++i) f *= static_cast<std::size_t>(i);
      if (spec.kind == GroupKind::kAlternating && f > 1) f /= 2;
      return f;
    }
    case GroupKind::kDihedral:
      return 2 * static_cast<std::size_t>(spec.param);
    case GroupKind::kQuaternion:
      return 8;
  }
  return 0;
}

bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

GroupPtr permutation_group(int degree, bool even_only, std::string label) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, Element> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], static_cast<Element>(i));
    std::string name;
    for (int v : perms[i]) name += static_cast<char>('1' + v);
    names.push_back(std::move(name));
  }
  const std::size_t n = perms.size();
  std::vector<Element> table(n * n);
  std::vector<int> composed(static_cast<std::size_t>(degree));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < composed.size(); ++x) {
        composed[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      }
      table[a * n + b] = index.at(composed);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(label), n, std::move(table),
                                             std::move(names));
}

GroupPtr build_cyclic(int n, std::string label) {
  const auto m = static_cast<std::size_t>(n);
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<Element>((a + b) % m);
  }
  return std::make_shared<const FiniteGroup>(std::move(label), m, std::move(table));
}

GroupPtr build_dihedral(int n, std::string label) {
  const auto m = static_cast<std::size_t>(n);
  const std::size_t order = 2 * m;
  std::vector<Element> table(order * order);
  // (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t e = x / m;
    const std::size_t a = x % m;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t f = y / m;
      const std::size_t b = y % m;
      const std::size_t rot = e == 0 ? (a + b) % m : (a + m - b) % m;
      table[x * order + y] = static_cast<Element>(((e + f) % 2) * m + rot);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(label), order, std::move(table));
}

GroupPtr build_quaternion() {
  // Unit products u*v = sign * w over {1, i, j, k}.
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto [sign, unit] = units[static_cast<std::size_t>(x % 4)][static_cast<std::size_t>(y % 4)];
      const int s = (x / 4 + y / 4 + sign) % 2;
      table[static_cast<std::size_t>(x * 8 + y)] = static_cast<Element>(4 * s + unit);
    }
  }
  return std::make_shared<const FiniteGroup>("Q8", 8, std::move(table));
}

}  // namespace

std::string spec_label(const GroupSpec& spec) {
  const std::string p = std::to_string(spec.param);
  switch (spec.kind) {
    case GroupKind::kTrivial:
      return "1";
    case GroupKind::kCyclic:
      return "Z" + p;
    case GroupKind::kSymmetric:
      return "S" + p;
    case GroupKind::kAlternating:
      return "A" + p;
    case GroupKind::kDihedral:
      return "D" + p;
    case GroupKind::kQuaternion:
      return "Q8";
  }
  return "?";
}

GroupPtr make_group(const GroupSpec& spec, std::size_t max_order) {
  switch (spec.kind) {
    case GroupKind::kCyclic:
    case GroupKind::kDihedral:
      if (spec.param < 1) {
        throw std::invalid_argument(spec_label(spec) + ": parameter must be at least 1");
      }
      if (static_cast<std::size_t>(spec.param) > max_order) {
        throw CapExceeded(static_cast<std::size_t>(spec.param), max_order);
      }
      break;
    case GroupKind::kSymmetric:
    case GroupKind::kAlternating:
      if (spec.param < 1 || spec.param > kMaxPermutationDegree) {
        throw std::invalid_argument(spec_label(spec) + ": degree must be in 1..5");
      }
      break;
    case GroupKind::kQuaternion:
      if (spec.param != 8) throw std::invalid_argument("only Q8 is supported");
      break;
    case GroupKind::kTrivial:
      break;
  }
  const std::size_t order = expected_order(spec);
  if (order > max_order) throw CapExceeded(order, max_order);

  const std::string label = spec_label(spec);
  switch (spec.kind) {
    case GroupKind::kTrivial:
      return build_cyclic(1, label);
    case GroupKind::kCyclic:
      return build_cyclic(spec.param, label);
    case GroupKind::kSymmetric:
      return permutation_group(spec.param, false, label);
    case GroupKind::kAlternating:
      return permutation_group(spec.param, true, label);
    case GroupKind::kDihedral:
      return build_dihedral(spec.param, label);
    case GroupKind::kQuaternion:
      return build_quaternion();
  }
  throw std::invalid_argument("unknown group kind");
}

GroupPtr trivial_group() { return make_group({GroupKind::kTrivial, 1}); }
GroupPtr cyclic_group(int n) { return make_group({GroupKind::kCyclic, n}); }
GroupPtr symmetric_group(int n) { return make_group({GroupKind::kSymmetric, n}); }
GroupPtr alternating_group(int n) { return make_group({GroupKind::kAlternating, n}); }
GroupPtr dihedral_group(int n) { return make_group({GroupKind::kDihedral, n}); }
GroupPtr quaternion_group() { return make_group({GroupKind::kQuaternion, 8}); }

}  // namespace goursat
