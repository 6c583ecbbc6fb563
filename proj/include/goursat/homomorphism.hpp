#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "goursat/error.hpp"
#include "goursat/group.hpp"

namespace goursat {

/// A multiplicative map between two subgroups. `images()[i]` is the image of
/// `domain().members()[i]`, given as an element index of the codomain's
/// parent.
class Homomorphism {
 public:
  /// Checks that every image lies in the codomain and that the map is
  /// multiplicative. Throws std::invalid_argument otherwise.
  Homomorphism(Subgroup domain, Subgroup codomain, std::vector<Element> images);

  /// Skips the multiplicativity check.
  static Homomorphism trusted(Subgroup domain, Subgroup codomain,
                              std::vector<Element> images);

  /// The map x -> identity.
  static Homomorphism constant(Subgroup domain, Subgroup codomain);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& codomain() const { return codomain_; }
  std::span<const Element> images() const { return images_; }

  /// Image of a domain member. Throws std::out_of_range for non-members.
  Element operator()(Element x) const;

  Subgroup image() const;
  Subgroup kernel() const;
  bool is_surjective() const;
  bool is_injective() const;
  /// Constant-identity map.
  bool is_trivial() const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.images_ == b.images_ && a.domain_ == b.domain_ &&
           a.codomain_ == b.codomain_;
  }

 private:
  Homomorphism(Subgroup domain, Subgroup codomain, std::vector<Element> images,
               bool check);

  Subgroup domain_;
  Subgroup codomain_;
  std::vector<Element> images_;
  // Dense lookup over the domain's parent; -1 off the domain.
  std::vector<Element> dense_;
};

enum class MapKind { kAny, kSurjective, kBijective };

/// Every homomorphism d -> c of the requested kind, sorted lexicographically by
/// image array. Images of a greedy generating set of d are chosen by
/// backtracking; partial assignments are pruned by element-order divisibility
/// (equality for bijections) and by consistency on the generated subgroup.
std::vector<Homomorphism> enumerate_homomorphisms(
    const Subgroup& d, const Subgroup& c, MapKind kind,
    std::size_t max_order = kDefaultMaxGroupOrder);

std::vector<Homomorphism> enumerate_homomorphisms(
    const GroupPtr& d, const GroupPtr& c, MapKind kind,
    std::size_t max_order = kDefaultMaxGroupOrder);

/// Visits homomorphisms in search order (not sorted); stops when `visit`
/// returns false.
void for_each_homomorphism(const Subgroup& d, const Subgroup& c, MapKind kind,
                           const std::function<bool(Homomorphism)>& visit,
                           std::size_t max_order = kDefaultMaxGroupOrder);

std::optional<Homomorphism> find_isomorphism(const Subgroup& d,
                                             const Subgroup& c);

bool are_isomorphic(const Subgroup& d, const Subgroup& c);

}  // namespace goursat
