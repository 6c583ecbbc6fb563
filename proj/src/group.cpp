#include "goursat/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace goursat {

namespace {

bool check_associative(const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      const Element ij = g.mul(i, j);
      for (Element k = 0; k < n; ++k) {
        if (g.mul(ij, k) != g.mul(i, g.mul(j, k))) return false;
      }
    }
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string label, std::size_t order,
                         std::vector<Element> table,
                         std::vector<std::string> names)
    : label_(std::move(label)),
      order_(order),
      table_(std::move(table)),
      names_(std::move(names)) {
  if (order_ == 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != order_ * order_) {
    throw std::invalid_argument("Cayley table has wrong size");
  }
  for (Element x : table_) {
    if (!valid(x)) throw std::invalid_argument("Cayley table entry out of range");
  }
  // Each row and column must be a permutation (Latin square).
  std::vector<char> seen(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order_; ++j) {
      auto& s = seen[static_cast<std::size_t>(table_[i * order_ + j])];
      if (s) throw std::invalid_argument("Cayley table row is not a permutation");
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order_; ++j) {
      auto& s = seen[static_cast<std::size_t>(table_[j * order_ + i])];
      if (s) throw std::invalid_argument("Cayley table column is not a permutation");
      s = 1;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < order_ && ok; ++j) {
      ok = table_[e * order_ + j] == static_cast<Element>(j) &&
           table_[j * order_ + e] == static_cast<Element>(j);
    }
    if (ok) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("Cayley table has no identity");

  inverses_.assign(order_, -1);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      if (table_[i * order_ + j] == identity_) {
        inverses_[i] = static_cast<Element>(j);
        break;
      }
    }
    const auto inv = static_cast<std::size_t>(inverses_[i]);
    if (table_[inv * order_ + i] != identity_) {
      throw std::invalid_argument("left and right inverses differ");
    }
  }

  if (order_ <= kAssociativityCheckLimit && !check_associative(*this)) {
    throw std::invalid_argument("Cayley table is not associative");
  }

  if (names_.empty()) {
    names_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) names_.push_back(std::to_string(i));
  } else if (names_.size() != order_) {
    throw std::invalid_argument("element name count does not match order");
  }
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// --- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw std::invalid_argument("subgroup needs a parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const FiniteGroup& g = *parent_;
  for (Element x : members_) {
    if (!g.valid(x)) throw std::invalid_argument("subgroup member out of range");
  }
  if (!contains(g.identity())) {
    throw std::invalid_argument("subgroup does not contain the identity");
  }
  const std::vector<char> in = mask();
  for (Element a : members_) {
    for (Element b : members_) {
      if (!in[static_cast<std::size_t>(g.mul(a, b))]) {
        throw std::invalid_argument("member set is not closed under the operation");
      }
    }
  }
  if (g.order() % members_.size() != 0) {
    throw std::logic_error("subgroup order does not divide group order");
  }
}

Subgroup Subgroup::from_closed_sorted(GroupPtr parent,
                                      std::vector<Element> members) {
  Subgroup h;
  h.parent_ = std::move(parent);
  h.members_ = std::move(members);
  return h;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return from_closed_sorted(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  const Element e = parent->identity();
  return from_closed_sorted(std::move(parent), {e});
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::ptrdiff_t Subgroup::position(Element x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return -1;
  return it - members_.begin();
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Subgroup Subgroup::rebind(GroupPtr parent) const {
  if (!same_group(parent, parent_)) {
    throw std::invalid_argument("rebind target is not the same group");
  }
  return from_closed_sorted(std::move(parent), members_);
}

std::vector<char> Subgroup::mask() const {
  std::vector<char> in(parent_->order(), 0);
  for (Element x : members_) in[static_cast<std::size_t>(x)] = 1;
  return in;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  auto am = a.members();
  auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

void sort_subgroups(std::vector<Subgroup>& subgroups) {
  std::sort(subgroups.begin(), subgroups.end(), subgroup_less);
}

// --- element-level operations ----------------------------------------------

std::size_t element_order(const FiniteGroup& g, Element x) {
  if (!g.valid(x)) throw std::invalid_argument("element index out of range");
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

Subgroup generated_subgroup(const GroupPtr& g,
                            std::span<const Element> generators) {
  for (Element s : generators) {
    if (!g->valid(s)) throw std::invalid_argument("generator index out of range");
  }
  std::vector<char> in(g->order(), 0);
  std::vector<Element> found{g->identity()};
  in[static_cast<std::size_t>(g->identity())] = 1;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Element x = found[head];
    for (Element s : generators) {
      const Element y = g->mul(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup::from_closed_sorted(g, std::move(found));
}

std::vector<Element> generating_set(const Subgroup& h) {
  std::vector<Element> gens;
  std::vector<char> covered(h.parent().order(), 0);
  covered[static_cast<std::size_t>(h.parent().identity())] = 1;
  std::size_t covered_count = 1;
  for (Element x : h.members()) {
    if (covered_count == h.order()) break;
    if (covered[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    const Subgroup span = generated_subgroup(h.parent_ptr(), gens);
    for (Element y : span.members()) covered[static_cast<std::size_t>(y)] = 1;
    covered_count = span.order();
  }
  return gens;
}

bool is_normal(const Subgroup& h, const Subgroup& k) {
  if (!same_group(h.parent_ptr(), k.parent_ptr()) || !h.is_subset_of(k)) {
    throw std::invalid_argument("is_normal: h is not contained in k");
  }
  const FiniteGroup& g = h.parent();
  const std::vector<char> in = h.mask();
  // Conjugation by a generating set of k suffices.
  for (Element x : generating_set(k)) {
    const Element xi = g.inverse(x);
    for (Element y : h.members()) {
      if (!in[static_cast<std::size_t>(g.mul(g.mul(x, y), xi))]) return false;
    }
  }
  return true;
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const std::vector<Element> gens = generating_set(h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::vector<Subgroup> cyclic_join_subgroups(const GroupPtr& g) {
  std::set<std::vector<Element>> known;
  std::vector<Subgroup> cyclic;
  for (std::size_t x = 0; x < g->order(); ++x) {
    const Element gen[] = {static_cast<Element>(x)};
    Subgroup c = generated_subgroup(g, gen);
    auto m = c.members();
    if (known.emplace(m.begin(), m.end()).second) cyclic.push_back(std::move(c));
  }

  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Subgroup& c : cyclic) {
      if (c.is_subset_of(all[i])) continue;
      std::vector<Element> gens = generating_set(all[i]);
      const std::vector<Element> more = generating_set(c);
      gens.insert(gens.end(), more.begin(), more.end());
      Subgroup join = generated_subgroup(g, gens);
      auto m = join.members();
      if (known.emplace(m.begin(), m.end()).second) all.push_back(std::move(join));
    }
  }
  sort_subgroups(all);
  return all;
}

bool satisfies_group_axioms(const FiniteGroup& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element j = 0; j < n; ++j) {
    if (g.mul(g.identity(), j) != j || g.mul(j, g.identity()) != j) return false;
    if (g.mul(j, g.inverse(j)) != g.identity()) return false;
  }
  return check_associative(g);
}

}  // namespace goursat
