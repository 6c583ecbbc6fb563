#pragma once

#include <vector>

#include "goursat/error.hpp"
#include "goursat/group.hpp"
#include "goursat/homomorphism.hpp"
#include "goursat/product.hpp"
#include "goursat/quotient.hpp"

namespace goursat {

/// Symmetric Goursat data for a subgroup G of A x B.
///
/// g1bar and g1 are the projection of G to A and the elements a with (a, e)
/// in G; likewise g2bar and g2 in B. theta is the isomorphism
/// g1bar/g1 -> g2bar/g2 acting on coset indices of `quotient(g1bar, g1)` and
/// `quotient(g2bar, g2)`.
struct GoursatQuintuple {
  Subgroup g1bar;
  Subgroup g1;
  Subgroup g2bar;
  Subgroup g2;
  Homomorphism theta;

  friend bool operator==(const GoursatQuintuple&, const GoursatQuintuple&) = default;
};

/// Asymmetric Goursat data: theta1 maps g1bar onto g2bar/g2. The A-side
/// normal subgroup is recovered as ker(theta1).
struct GoursatQuadruple {
  Subgroup g1bar;
  Subgroup g2bar;
  Subgroup g2;
  Homomorphism theta1;

  friend bool operator==(const GoursatQuadruple&, const GoursatQuadruple&) = default;
};

GoursatQuintuple q2_prime(const DirectProduct& d, const Subgroup& g);

/// {(a, b) in g1bar x g2bar | theta[a] = [b]}.
Subgroup gamma2_prime(const DirectProduct& d, const GoursatQuintuple& q);

GoursatQuadruple q2(const DirectProduct& d, const Subgroup& g);

/// {(a, b) in g1bar x g2bar | theta1(a) = [b]}.
Subgroup gamma2(const DirectProduct& d, const GoursatQuadruple& q);

/// theta1 = theta composed with the natural surjection g1bar -> g1bar/g1.
GoursatQuadruple quadruple_from_quintuple(const GoursatQuintuple& q);

/// g1 = ker(theta1); theta is induced on cosets.
GoursatQuintuple quintuple_from_quadruple(const GoursatQuadruple& q);

/// Throws std::invalid_argument unless q satisfies the quintuple invariants
/// relative to the two factors of d.
void validate(const DirectProduct& d, const GoursatQuintuple& q);
void validate(const DirectProduct& d, const GoursatQuadruple& q);

/// Preimage of the graph of `to_quotient` (left -> Q) under
/// left x Q.whole() -> left x Q, as a subgroup of `product`, a group whose
/// elements are indexed l * right_order + r.
Subgroup graph_pullback(const GroupPtr& product, const Subgroup& left,
                        const Homomorphism& to_quotient, const QuotientGroup& q,
                        std::size_t right_order);

/// Every quotient H/N with N normal in H and H a subgroup of g, ordered by
/// (H, N) in canonical subgroup order.
std::vector<QuotientGroup> normal_quotients(const GroupPtr& g);

/// Every subgroup of A x B via quintuples: all pairs of equal-order quotients
/// of A and B and all isomorphisms between them, mapped through gamma2_prime.
/// Canonically ordered. Throws TheoremViolation on a duplicate.
std::vector<Subgroup> enumerate_subgroups_pair(
    const DirectProduct& d, std::size_t max_order = kDefaultMaxEnumerationOrder);

/// (G1 x G2) is normal in G and G/(G1 x G2), g1bar/g1, g2bar/g2 are pairwise
/// isomorphic.
bool quotient_condition_check(const DirectProduct& d, const Subgroup& g);

}  // namespace goursat
