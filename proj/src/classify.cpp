#include "goursat/classify.hpp"

#include <numeric>
#include <stdexcept>

#include "goursat/chain.hpp"

namespace goursat {

namespace {

Subgroup projection(const DirectProduct& d, const Subgroup& g, std::size_t j) {
  return section(d, g, {j, {}});
}

std::size_t section_order(const DirectProduct& d, const Subgroup& g, std::size_t j,
                          std::size_t i) {
  return section(d, g, {j, {i}}).order();
}

CyclicVerdict checked(const Subgroup& g, CyclicVerdict v) {
  if (v.is_cyclic != is_cyclic_direct(g)) {
    throw TheoremViolation("cyclic criterion disagrees with the direct check");
  }
  if (v.is_cyclic && v.predicted_order != g.order()) {
    throw TheoremViolation("predicted cyclic order differs from |G|");
  }
  return v;
}

CyclicVerdict criterion_from_sections(const DirectProduct& d, const Subgroup& g) {
  std::size_t lcm = 1;
  bool cyclic = true;
  for (std::size_t j = 0; j < d.arity() && cyclic; ++j) {
    const Subgroup p = projection(d, g, j);
    cyclic = is_cyclic_direct(p);
    lcm = std::lcm(lcm, p.order());
  }
  for (std::size_t i = 0; i < d.arity() && cyclic; ++i) {
    for (std::size_t j = i + 1; j < d.arity() && cyclic; ++j) {
      cyclic = std::gcd(section_order(d, g, i, j), section_order(d, g, j, i)) == 1;
    }
  }
  CyclicVerdict v{cyclic, std::nullopt};
  if (cyclic) v.predicted_order = lcm;
  return v;
}

}  // namespace

bool is_cyclic_direct(const Subgroup& g) {
  for (Element x : g.members()) {
    if (element_order(g.parent(), x) == g.order()) return true;
  }
  return false;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

bool is_p_power(std::size_t order, std::size_t p) {
  while (order > 1 && order % p == 0) order /= p;
  return order == 1;
}

bool is_abelian_via_projections(const DirectProduct& d, const Subgroup& g) {
  bool all = true;
  for (std::size_t j = 0; j < d.arity() && all; ++j) all = is_abelian(projection(d, g, j));
  if (all != is_abelian(g)) {
    throw TheoremViolation("abelian projections disagree with commutativity of G");
  }
  return all;
}

bool is_p_group_via_projections(const DirectProduct& d, const Subgroup& g, std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  bool all = true;
  for (std::size_t j = 0; j < d.arity() && all; ++j) {
    all = is_p_power(projection(d, g, j).order(), p);
  }
  if (all != is_p_power(g.order(), p)) {
    throw TheoremViolation("p-group projections disagree with |G|");
  }
  return all;
}

bool is_product_of_projections(const DirectProduct& d, const Subgroup& g) {
  const GoursatChain chain = qn(d, g);
  bool trivial = true;
  for (const ChainLink& link : chain.links) trivial = trivial && link.theta.is_trivial();

  // Literal comparison with the encoded product of the projections.
  std::vector<Subgroup> projections;
  for (std::size_t j = 0; j < d.arity(); ++j) projections.push_back(projection(d, g, j));
  std::vector<Element> members{0};
  for (std::size_t j = 0; j < d.arity(); ++j) {
    std::vector<Element> grown;
    grown.reserve(members.size() * projections[j].order());
    for (Element m : members) {
      for (Element a : projections[j].members()) {
        grown.push_back(static_cast<Element>(
            static_cast<std::size_t>(m) * d.factor(j)->order() + static_cast<std::size_t>(a)));
      }
    }
    members = std::move(grown);
  }
  const bool literal = Subgroup(d.group(), std::move(members)) == g;
  if (trivial != literal) {
    throw TheoremViolation("trivial chain maps disagree with the product of projections");
  }
  return trivial;
}

CyclicVerdict cyclic_criterion_pair(const DirectProduct& d, const Subgroup& g) {
  if (d.arity() != 2) throw std::invalid_argument("expected a product of 2 factors");
  const GoursatQuintuple q = q2_prime(d, g);
  CyclicVerdict v;
  v.is_cyclic = is_cyclic_direct(q.g1bar) && is_cyclic_direct(q.g2bar) &&
                std::gcd(q.g1.order(), q.g2.order()) == 1;
  if (v.is_cyclic) v.predicted_order = std::lcm(q.g1bar.order(), q.g2bar.order());
  return checked(g, v);
}

CyclicVerdict cyclic_criterion_triple(const DirectProduct& d, const Subgroup& g) {
  if (d.arity() != 3) throw std::invalid_argument("expected a product of 3 factors");
  return checked(g, criterion_from_sections(d, g));
}

CyclicVerdict cyclic_criterion(const DirectProduct& d, const Subgroup& g) {
  if (d.arity() == 2) return cyclic_criterion_pair(d, g);
  return checked(g, criterion_from_sections(d, g));
}

bool order_formula_check(const DirectProduct& d, const GoursatQuintuple& q) {
  const std::size_t graph = q.g1bar.order() / q.g1.order();
  return gamma2_prime(d, q).order() == graph * q.g1.order() * q.g2.order();
}

}  // namespace goursat
