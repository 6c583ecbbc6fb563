#pragma once

#include <memory>
#include <span>
#include <vector>

#include "goursat/error.hpp"
#include "goursat/group.hpp"

namespace goursat {

/// Direct product A_1 x ... x A_n with a mixed-radix element encoding.
///
/// The first factor is the most significant digit, so
/// index(a_1, ..., a_n) = ((a_1 * |A_2| + a_2) * |A_3| + a_3) ... and the
/// product of the first k factors embeds as index(prefix) * |A_{k+1}| + a_{k+1}.
/// Factor positions are 0-based throughout the API.
///
/// A one-factor product is the factor itself under the identity encoding.
/// Prefix products are built once and shared between copies.
class DirectProduct {
 public:
  explicit DirectProduct(std::vector<GroupPtr> factors,
                         std::size_t max_order = kDefaultMaxGroupOrder);

  std::size_t arity() const { return factors_.size(); }
  const GroupPtr& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<GroupPtr>& factors() const { return factors_; }
  const GroupPtr& group() const { return prefixes_->at(factors_.size() - 1); }
  std::size_t order() const { return group()->order(); }

  Element encode(std::span<const Element> coords) const;
  std::vector<Element> decode(Element x) const;
  Element coordinate(Element x, std::size_t i) const {
    return static_cast<Element>((static_cast<std::size_t>(x) / strides_[i]) %
                                factors_[i]->order());
  }

  /// Product of the first k factors, 1 <= k <= arity().
  DirectProduct prefix(std::size_t k) const;

  /// Product of the factors at the given strictly increasing positions.
  DirectProduct select(std::span<const std::size_t> positions) const;

  /// Element of this product whose coordinates outside `positions` are the
  /// identity and whose coordinates at `positions` come from `sub`, an element
  /// of select(positions).
  Element embed(const DirectProduct& sub, std::span<const std::size_t> positions,
                Element sub_element) const;

  /// Image of x under the projection onto select(positions).
  Element project(const DirectProduct& sub, std::span<const std::size_t> positions,
                  Element x) const;

 private:
  DirectProduct(std::vector<GroupPtr> factors,
                std::shared_ptr<const std::vector<GroupPtr>> prefixes);

  std::vector<GroupPtr> factors_;
  std::vector<std::size_t> strides_;
  // prefixes_[k] is the product of factors_[0..k].
  std::shared_ptr<const std::vector<GroupPtr>> prefixes_;
};

/// Table of L x R with index(l, r) = l * |R| + r.
GroupPtr pair_product(const GroupPtr& left, const GroupPtr& right);

}  // namespace goursat
