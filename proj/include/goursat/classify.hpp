#pragma once

#include <optional>

#include "goursat/group.hpp"
#include "goursat/pair.hpp"
#include "goursat/product.hpp"

namespace goursat {

// Each predicate below is computed from projection or section data and then
// cross-checked against a direct computation on g; a disagreement throws
// TheoremViolation.

/// Some member has order |g|.
bool is_cyclic_direct(const Subgroup& g);

bool is_prime(std::size_t p);

/// True iff |g| = p^k for some k >= 0.
bool is_p_power(std::size_t order, std::size_t p);

/// Every single-factor projection is abelian.
bool is_abelian_via_projections(const DirectProduct& d, const Subgroup& g);

/// Every single-factor projection is a p-group. Throws std::invalid_argument
/// if p is not prime.
bool is_p_group_via_projections(const DirectProduct& d, const Subgroup& g, std::size_t p);

/// Every chain homomorphism is the constant-identity map, i.e. g is the full
/// product of its projections.
bool is_product_of_projections(const DirectProduct& d, const Subgroup& g);

struct CyclicVerdict {
  bool is_cyclic = false;
  /// lcm of the projection orders; present only when is_cyclic.
  std::optional<std::size_t> predicted_order;

  friend bool operator==(const CyclicVerdict&, const CyclicVerdict&) = default;
};

/// Two factors: projections cyclic and gcd(|G1|, |G2|) = 1.
CyclicVerdict cyclic_criterion_pair(const DirectProduct& d, const Subgroup& g);

/// Three factors: projections cyclic and the section-order pairs
/// (|G(i|j)|, |G(j|i)|) coprime for i < j.
CyclicVerdict cyclic_criterion_triple(const DirectProduct& d, const Subgroup& g);

/// Any arity: projections cyclic and (|G(i|j)|, |G(j|i)|) coprime for all
/// i < j. Agrees with the pair and triple forms.
CyclicVerdict cyclic_criterion(const DirectProduct& d, const Subgroup& g);

/// |gamma2_prime(q)| = (|g1bar| / |g1|) * |g1| * |g2|.
bool order_formula_check(const DirectProduct& d, const GoursatQuintuple& q);

}  // namespace goursat
