#pragma once

#include <vector>

#include "goursat/group.hpp"
#include "goursat/homomorphism.hpp"

namespace goursat {

/// whole / kernel as a FiniteGroup over coset indices.
///
/// Each coset is represented by its minimum element index; cosets are
/// numbered in increasing order of representative. Quotient elements are named
/// "[r]" after the representative's name.
class QuotientGroup {
 public:
  const Subgroup& whole() const { return whole_; }
  const Subgroup& kernel() const { return kernel_; }
  const std::vector<std::vector<Element>>& cosets() const { return cosets_; }
  const GroupPtr& group() const { return group_; }
  std::size_t order() const { return group_->order(); }
  /// Natural surjection whole -> quotient.
  const Homomorphism& projection() const { return projection_; }

  /// Coset index of a member of whole.
  Element coset_of(Element x) const { return projection_(x); }
  Element representative(Element coset) const {
    return cosets_[static_cast<std::size_t>(coset)].front();
  }

  friend QuotientGroup quotient(const Subgroup& whole, const Subgroup& kernel);

 private:
  QuotientGroup(Subgroup whole, Subgroup kernel,
                std::vector<std::vector<Element>> cosets, GroupPtr group,
                Homomorphism projection);

  Subgroup whole_;
  Subgroup kernel_;
  std::vector<std::vector<Element>> cosets_;
  GroupPtr group_;
  Homomorphism projection_;
};

/// Throws std::invalid_argument unless kernel is normal in whole.
QuotientGroup quotient(const Subgroup& whole, const Subgroup& kernel);

}  // namespace goursat
