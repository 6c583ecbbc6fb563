#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace goursat {

/// Index of a group element, 0..order-1.
using Element = std::int32_t;

/// A finite group given by its Cayley table over element indices.
///
/// The table is row-major: `mul(i, j)` is the index of g_i * g_j. Identity and
/// inverses are derived from the table and checked; associativity is checked
/// exhaustively for orders up to kAssociativityCheckLimit.
class FiniteGroup {
 public:
  static constexpr std::size_t kAssociativityCheckLimit = 256;

  /// Validates the table. `names` may be empty, in which case elements are
  /// named by their decimal index.
  FiniteGroup(std::string label, std::size_t order, std::vector<Element> table,
              std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  Element identity() const { return identity_; }

  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ +
                  static_cast<std::size_t>(b)];
  }
  Element inverse(Element a) const {
    return inverses_[static_cast<std::size_t>(a)];
  }
  std::span<const Element> table() const { return table_; }
  std::span<const Element> inverses() const { return inverses_; }

  const std::string& name(Element a) const {
    return names_[static_cast<std::size_t>(a)];
  }
  bool valid(Element a) const {
    return a >= 0 && static_cast<std::size_t>(a) < order_;
  }

  /// Structural equality: same order, identity and table. Labels and element
  /// names are presentation only.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ &&
           a.table_ == b.table_;
  }

 private:
  std::string label_;
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subgroup stored as a strictly increasing list of parent element indices.
/// Two subgroups are equal iff their parents are structurally equal and their
/// member lists are equal.
class Subgroup {
 public:
  /// Sorts and deduplicates `members`, then checks closure and Lagrange.
  /// Throws std::invalid_argument if the set is not a subgroup.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  /// Skips validation. `members` must already be sorted, unique and closed.
  static Subgroup from_closed_sorted(GroupPtr parent,
                                     std::vector<Element> members);

  const FiniteGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  std::span<const Element> members() const { return members_; }
  std::size_t order() const { return members_.size(); }

  bool contains(Element x) const;
  /// Position of x in members(), or -1.
  std::ptrdiff_t position(Element x) const;
  bool is_subset_of(const Subgroup& other) const;

  /// Same member set, re-parented onto a structurally equal group.
  Subgroup rebind(GroupPtr parent) const;

  /// Bitmap over parent elements.
  std::vector<char> mask() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && same_group(a.parent_, b.parent_);
  }

 private:
  Subgroup() = default;

  GroupPtr parent_;
  std::vector<Element> members_;
};

/// Canonical order: by size, then lexicographic member list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);
void sort_subgroups(std::vector<Subgroup>& subgroups);

/// Least k >= 1 with x^k = identity.
std::size_t element_order(const FiniteGroup& g, Element x);

/// Smallest subgroup containing `generators` (worklist closure).
Subgroup generated_subgroup(const GroupPtr& g,
                            std::span<const Element> generators);

/// Greedy generating set: repeatedly adds the smallest member not yet in the
/// subgroup generated so far.
std::vector<Element> generating_set(const Subgroup& h);

/// True iff x h x^-1 = h for all x in k. Requires h ⊆ k in the same parent.
bool is_normal(const Subgroup& h, const Subgroup& k);

bool is_abelian(const Subgroup& h);

/// All subgroups of `g`, as joins of its cyclic subgroups, canonically
/// ordered. Used for single factors inside Goursat enumeration.
std::vector<Subgroup> cyclic_join_subgroups(const GroupPtr& g);

/// Full validation of the group axioms, associativity included, regardless
/// of order.
bool satisfies_group_axioms(const FiniteGroup& g);

}  // namespace goursat
