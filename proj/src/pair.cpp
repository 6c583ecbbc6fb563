#include "goursat/pair.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace goursat {

namespace {

void require_pair(const DirectProduct& d, const Subgroup& g) {
  if (d.arity() != 2) throw std::invalid_argument("expected a product of 2 factors");
  if (!same_group(g.parent_ptr(), d.group())) {
    throw std::invalid_argument("subgroup does not live in the given product");
  }
}

struct PairSides {
  Subgroup g1bar;
  Subgroup g1;
  Subgroup g2bar;
  Subgroup g2;
};

PairSides scan_sides(const DirectProduct& d, const Subgroup& g) {
  const GroupPtr& a = d.factor(0);
  const GroupPtr& b = d.factor(1);
  std::vector<Element> g1bar, g1, g2bar, g2;
  for (Element x : g.members()) {
    const Element u = d.coordinate(x, 0);
    const Element v = d.coordinate(x, 1);
    g1bar.push_back(u);
    g2bar.push_back(v);
    if (v == b->identity()) g1.push_back(u);
    if (u == a->identity()) g2.push_back(v);
  }
  return {Subgroup(a, std::move(g1bar)), Subgroup(a, std::move(g1)),
          Subgroup(b, std::move(g2bar)), Subgroup(b, std::move(g2))};
}

// For each a in g1bar, the coset [b] of some (a, b) in g, as a dense map over A.
std::vector<Element> coset_partner(const DirectProduct& d, const Subgroup& g,
                                   const QuotientGroup& right) {
  std::vector<Element> partner(d.factor(0)->order(), -1);
  for (Element x : g.members()) {
    const Element u = d.coordinate(x, 0);
    const Element c = right.coset_of(d.coordinate(x, 1));
    Element& slot = partner[static_cast<std::size_t>(u)];
    if (slot >= 0 && slot != c) {
      throw TheoremViolation("coset partner is not well defined");
    }
    slot = c;
  }
  return partner;
}

}  // namespace

void validate(const DirectProduct& d, const GoursatQuintuple& q) {
  if (d.arity() != 2) throw std::invalid_argument("expected a product of 2 factors");
  if (!same_group(q.g1bar.parent_ptr(), d.factor(0)) ||
      !same_group(q.g1.parent_ptr(), d.factor(0)) ||
      !same_group(q.g2bar.parent_ptr(), d.factor(1)) ||
      !same_group(q.g2.parent_ptr(), d.factor(1))) {
    throw std::invalid_argument("quintuple subgroups do not live in the factors");
  }
  if (!q.g1.is_subset_of(q.g1bar) || !q.g2.is_subset_of(q.g2bar)) {
    throw std::invalid_argument("quintuple kernels are not contained in their groups");
  }
  const QuotientGroup q1 = quotient(q.g1bar, q.g1);
  const QuotientGroup q2 = quotient(q.g2bar, q.g2);
  if (q1.order() != q2.order()) {
    throw std::invalid_argument("quintuple quotients have different orders");
  }
  if (!(q.theta.domain() == Subgroup::whole(q1.group())) ||
      !(q.theta.codomain() == Subgroup::whole(q2.group()))) {
    throw std::invalid_argument("theta does not map between the quintuple quotients");
  }
  if (!q.theta.is_injective() || !q.theta.is_surjective()) {
    throw std::invalid_argument("theta is not an isomorphism");
  }
}

void validate(const DirectProduct& d, const GoursatQuadruple& q) {
  if (d.arity() != 2) throw std::invalid_argument("expected a product of 2 factors");
  if (!same_group(q.g1bar.parent_ptr(), d.factor(0)) ||
      !same_group(q.g2bar.parent_ptr(), d.factor(1)) ||
      !same_group(q.g2.parent_ptr(), d.factor(1))) {
    throw std::invalid_argument("quadruple subgroups do not live in the factors");
  }
  if (!q.g2.is_subset_of(q.g2bar)) {
    throw std::invalid_argument("quadruple kernel is not contained in its group");
  }
  const QuotientGroup q2 = quotient(q.g2bar, q.g2);
  if (!(q.theta1.domain() == q.g1bar) ||
      !(q.theta1.codomain() == Subgroup::whole(q2.group()))) {
    throw std::invalid_argument("theta1 does not map g1bar to g2bar/g2");
  }
  if (!q.theta1.is_surjective()) throw std::invalid_argument("theta1 is not surjective");
}

GoursatQuintuple q2_prime(const DirectProduct& d, const Subgroup& g) {
  require_pair(d, g);
  PairSides s = scan_sides(d, g);
  const QuotientGroup left = quotient(s.g1bar, s.g1);
  const QuotientGroup right = quotient(s.g2bar, s.g2);
  const std::vector<Element> partner = coset_partner(d, g, right);
  std::vector<Element> images;
  images.reserve(left.order());
  for (const auto& coset : left.cosets()) {
    images.push_back(partner[static_cast<std::size_t>(coset.front())]);
  }
  Homomorphism theta(Subgroup::whole(left.group()), Subgroup::whole(right.group()),
                     std::move(images));
  return {std::move(s.g1bar), std::move(s.g1), std::move(s.g2bar), std::move(s.g2),
          std::move(theta)};
}

GoursatQuadruple q2(const DirectProduct& d, const Subgroup& g) {
  require_pair(d, g);
  PairSides s = scan_sides(d, g);
  const QuotientGroup right = quotient(s.g2bar, s.g2);
  const std::vector<Element> partner = coset_partner(d, g, right);
  std::vector<Element> images;
  images.reserve(s.g1bar.order());
  for (Element a : s.g1bar.members()) images.push_back(partner[static_cast<std::size_t>(a)]);
  Homomorphism theta1(s.g1bar, Subgroup::whole(right.group()), std::move(images));
  return {std::move(s.g1bar), std::move(s.g2bar), std::move(s.g2), std::move(theta1)};
}

Subgroup graph_pullback(const GroupPtr& product, const Subgroup& left,
                        const Homomorphism& to_quotient, const QuotientGroup& q,
                        std::size_t right_order) {
  std::vector<Element> members;
  for (Element l : left.members()) {
    const Element target = to_quotient(l);
    for (Element r : q.whole().members()) {
      if (q.coset_of(r) == target) {
        members.push_back(static_cast<Element>(
            static_cast<std::size_t>(l) * right_order + static_cast<std::size_t>(r)));
      }
    }
  }
  try {
    return Subgroup(product, std::move(members));
  } catch (const std::invalid_argument& e) {
    throw TheoremViolation(std::string("graph pullback is not a subgroup: ") + e.what());
  }
}

Subgroup gamma2_prime(const DirectProduct& d, const GoursatQuintuple& q) {
  validate(d, q);
  const QuotientGroup left = quotient(q.g1bar, q.g1);
  const QuotientGroup right = quotient(q.g2bar, q.g2);
  std::vector<Element> images;
  images.reserve(q.g1bar.order());
  for (Element a : q.g1bar.members()) images.push_back(q.theta(left.coset_of(a)));
  const Homomorphism composed =
      Homomorphism::trusted(q.g1bar, q.theta.codomain(), std::move(images));
  return graph_pullback(d.group(), q.g1bar, composed, right, d.factor(1)->order());
}

Subgroup gamma2(const DirectProduct& d, const GoursatQuadruple& q) {
  validate(d, q);
  const QuotientGroup right = quotient(q.g2bar, q.g2);
  return graph_pullback(d.group(), q.g1bar, q.theta1, right, d.factor(1)->order());
}

GoursatQuadruple quadruple_from_quintuple(const GoursatQuintuple& q) {
  const QuotientGroup left = quotient(q.g1bar, q.g1);
  std::vector<Element> images;
  images.reserve(q.g1bar.order());
  for (Element a : q.g1bar.members()) images.push_back(q.theta(left.coset_of(a)));
  Homomorphism theta1(q.g1bar, q.theta.codomain(), std::move(images));
  return {q.g1bar, q.g2bar, q.g2, std::move(theta1)};
}

GoursatQuintuple quintuple_from_quadruple(const GoursatQuadruple& q) {
  Subgroup g1 = q.theta1.kernel();
  const QuotientGroup left = quotient(q.g1bar, g1);
  std::vector<Element> images;
  images.reserve(left.order());
  for (const auto& coset : left.cosets()) images.push_back(q.theta1(coset.front()));
  Homomorphism theta(Subgroup::whole(left.group()), q.theta1.codomain(),
                     std::move(images));
  return {q.g1bar, std::move(g1), q.g2bar, q.g2, std::move(theta)};
}

std::vector<QuotientGroup> normal_quotients(const GroupPtr& g) {
  const std::vector<Subgroup> subs = cyclic_join_subgroups(g);
  std::vector<QuotientGroup> out;
  for (const Subgroup& whole : subs) {
    for (const Subgroup& kernel : subs) {
      if (kernel.order() > whole.order() || whole.order() % kernel.order() != 0) continue;
      if (!kernel.is_subset_of(whole) || !is_normal(kernel, whole)) continue;
      out.push_back(quotient(whole, kernel));
    }
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups_pair(const DirectProduct& d,
                                               std::size_t max_order) {
  if (d.arity() != 2) throw std::invalid_argument("expected a product of 2 factors");
  if (d.order() > max_order) throw CapExceeded(d.order(), max_order);
  const std::vector<QuotientGroup> left = normal_quotients(d.factor(0));
  const std::vector<QuotientGroup> right = normal_quotients(d.factor(1));
  const std::size_t right_order = d.factor(1)->order();

  std::vector<Subgroup> out;
  for (const QuotientGroup& l : left) {
    for (const QuotientGroup& r : right) {
      if (l.order() != r.order()) continue;
      const auto isos = enumerate_homomorphisms(
          Subgroup::whole(l.group()), Subgroup::whole(r.group()), MapKind::kBijective);
      for (const Homomorphism& theta : isos) {
        std::vector<Element> images;
        images.reserve(l.whole().order());
        for (Element a : l.whole().members()) images.push_back(theta(l.coset_of(a)));
        const Homomorphism composed =
            Homomorphism::trusted(l.whole(), theta.codomain(), std::move(images));
        out.push_back(graph_pullback(d.group(), l.whole(), composed, r, right_order));
      }
    }
  }
  sort_subgroups(out);
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw TheoremViolation("distinct quintuples produced the same subgroup");
  }
  return out;
}

bool quotient_condition_check(const DirectProduct& d, const Subgroup& g) {
  const GoursatQuintuple q = q2_prime(d, g);
  std::vector<Element> inner;
  for (Element a : q.g1.members()) {
    for (Element b : q.g2.members()) {
      const Element coords[] = {a, b};
      inner.push_back(d.encode(coords));
    }
  }
  const Subgroup k(d.group(), std::move(inner));
  if (!k.is_subset_of(g) || !is_normal(k, g)) return false;
  const QuotientGroup whole = quotient(g, k);
  const QuotientGroup left = quotient(q.g1bar, q.g1);
  const QuotientGroup right = quotient(q.g2bar, q.g2);
  const Subgroup w = Subgroup::whole(whole.group());
  return are_isomorphic(w, Subgroup::whole(left.group())) &&
         are_isomorphic(w, Subgroup::whole(right.group())) &&
         are_isomorphic(Subgroup::whole(left.group()), Subgroup::whole(right.group()));
}

}  // namespace goursat
