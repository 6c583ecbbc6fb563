#include "goursat/quotient.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>

namespace goursat {

QuotientGroup::QuotientGroup(Subgroup whole, Subgroup kernel,
                             std::vector<std::vector<Element>> cosets,
                             GroupPtr group, Homomorphism projection)
    : whole_(std::move(whole)),
      kernel_(std::move(kernel)),
      cosets_(std::move(cosets)),
      group_(std::move(group)),
      projection_(std::move(projection)) {}

QuotientGroup quotient(const Subgroup& whole, const Subgroup& kernel) {
  if (!is_normal(kernel, whole)) {
    throw std::invalid_argument("quotient: kernel is not normal in whole");
  }
  const FiniteGroup& g = whole.parent();

  // Members are scanned in increasing order, so the first unassigned member is
  // the minimum of its coset and coset numbering follows representatives.
  std::vector<Element> coset_index(g.order(), -1);
  std::vector<std::vector<Element>> cosets;
  for (Element x : whole.members()) {
    if (coset_index[static_cast<std::size_t>(x)] >= 0) continue;
    const auto idx = static_cast<Element>(cosets.size());
    std::vector<Element> block;
    block.reserve(kernel.order());
    for (Element k : kernel.members()) {
      const Element y = g.mul(x, k);
      coset_index[static_cast<std::size_t>(y)] = idx;
      block.push_back(y);
    }
    std::sort(block.begin(), block.end());
    cosets.push_back(std::move(block));
  }

  const std::size_t n = cosets.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("[" + g.name(cosets[i].front()) + "]");
    for (std::size_t j = 0; j < n; ++j) {
      const Element prod = g.mul(cosets[i].front(), cosets[j].front());
      table[i * n + j] = coset_index[static_cast<std::size_t>(prod)];
    }
  }
  auto group = std::make_shared<const FiniteGroup>(
      "(" + g.label() + ")/N", n, std::move(table), std::move(names));

  std::vector<Element> images;
  images.reserve(whole.order());
  for (Element x : whole.members()) images.push_back(coset_index[static_cast<std::size_t>(x)]);
  Homomorphism projection = Homomorphism::trusted(whole, Subgroup::whole(group),
                                                  std::move(images));
  return QuotientGroup(whole, kernel, std::move(cosets), std::move(group),
                       std::move(projection));
}

}  // namespace goursat
