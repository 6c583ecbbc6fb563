#pragma once

#include <vector>

#include "goursat/error.hpp"
#include "goursat/group.hpp"
#include "goursat/homomorphism.hpp"
#include "goursat/product.hpp"

namespace goursat {

/// Coordinate section G(j|S): elements of factor `factor` that appear in that
/// coordinate among members of G whose coordinates in `fixed` are the
/// identity. Positions are 0-based.
struct SectionSpec {
  std::size_t factor = 0;
  std::vector<std::size_t> fixed;
};

/// Throws std::invalid_argument if factor is in fixed or anything is out of
/// range for an `arity`-factor product.
void validate(const SectionSpec& spec, std::size_t arity);

Subgroup section(const DirectProduct& d, const Subgroup& g, const SectionSpec& spec);

/// A subgroup of the product of a subset of factors.
struct Restriction {
  DirectProduct product;
  Subgroup subgroup;
};

/// Projection of g onto the factors at `positions` (any order, deduplicated).
Restriction g_bar_s(const DirectProduct& d, const Subgroup& g,
                    std::vector<std::size_t> positions);

/// Members of g supported on `positions`, viewed in the sub-product. Asserted
/// normal in g_bar_s.
Restriction g_s(const DirectProduct& d, const Subgroup& g,
                std::vector<std::size_t> positions);

/// G(j|S) is normal in G(j|T) for T ⊆ S. Throws std::invalid_argument if
/// T ⊄ S or j ∈ S.
bool nesting_check(const DirectProduct& d, const Subgroup& g, std::size_t factor,
                   std::vector<std::size_t> t, std::vector<std::size_t> s);

/// One step of the chain for factor j >= 1: theta maps the projection of G to
/// the first j factors (a subgroup of d.prefix(j)) onto gbar/rel, where gbar is
/// the projection to factor j and rel = G(j | 0..j-1).
struct ChainLink {
  Subgroup gbar;
  Subgroup rel;
  Homomorphism theta;

  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

/// Goursat data for a subgroup of an n-factor product: g1bar plus n-1 links,
/// 3n-2 components in total.
struct GoursatChain {
  Subgroup g1bar;
  std::vector<ChainLink> links;

  std::size_t arity() const { return links.size() + 1; }
  std::size_t component_count() const { return 1 + 3 * links.size(); }

  friend bool operator==(const GoursatChain&, const GoursatChain&) = default;
};

/// Chain of g read directly off coordinate sections.
GoursatChain qn(const DirectProduct& d, const Subgroup& g);

/// Left-nested reconstruction: Λ_1 = g1bar, Λ_{j+1} = pullback of the graph of
/// theta_j over Λ_j x gbar_j. Validates every link.
Subgroup gamman(const DirectProduct& d, const GoursatChain& c);

/// Three-factor chain built by applying the asymmetric pair correspondence to
/// A x B and then to (A x B) x C.
GoursatChain q3(const DirectProduct& d, const Subgroup& g);
Subgroup gamma3(const DirectProduct& d, const GoursatChain& c);

/// Every subgroup of the product: for each subgroup Λ of the (j-1)-prefix,
/// each quotient gbar/rel of factor j and each surjection Λ -> gbar/rel,
/// the graph pullback. Canonically ordered; throws TheoremViolation on a
/// duplicate.
std::vector<Subgroup> enumerate_subgroups_n(
    const DirectProduct& d, std::size_t max_order = kDefaultMaxEnumerationOrder);

}  // namespace goursat
