#include "goursat/chain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "goursat/pair.hpp"
#include "goursat/quotient.hpp"

namespace goursat {

namespace {

void require_member_of(const DirectProduct& d, const Subgroup& g) {
  if (!same_group(g.parent_ptr(), d.group())) {
    throw std::invalid_argument("subgroup does not live in the given product");
  }
}

std::vector<std::size_t> normalize_positions(std::vector<std::size_t> positions,
                                             std::size_t arity) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  if (positions.empty()) throw std::invalid_argument("factor set must be nonempty");
  if (positions.back() >= arity) throw std::invalid_argument("factor position out of range");
  return positions;
}

Subgroup asserted_subgroup(const GroupPtr& parent, std::vector<Element> members,
                           const char* what) {
  try {
    return Subgroup(parent, std::move(members));
  } catch (const std::invalid_argument& e) {
    throw TheoremViolation(std::string(what) + " is not a subgroup: " + e.what());
  }
}

std::vector<std::size_t> first_positions(std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

}  // namespace

void validate(const SectionSpec& spec, std::size_t arity) {
  if (spec.factor >= arity) throw std::invalid_argument("section factor out of range");
  for (std::size_t i : spec.fixed) {
    if (i >= arity) throw std::invalid_argument("section constraint out of range");
    if (i == spec.factor) {
      throw std::invalid_argument("section factor must not be constrained");
    }
  }
}

Subgroup section(const DirectProduct& d, const Subgroup& g, const SectionSpec& spec) {
  require_member_of(d, g);
  validate(spec, d.arity());
  std::vector<Element> found;
  for (Element x : g.members()) {
    const bool pinned = std::all_of(spec.fixed.begin(), spec.fixed.end(), [&](std::size_t i) {
      return d.coordinate(x, i) == d.factor(i)->identity();
    });
    if (pinned) found.push_back(d.coordinate(x, spec.factor));
  }
  return asserted_subgroup(d.factor(spec.factor), std::move(found), "section");
}

Restriction g_bar_s(const DirectProduct& d, const Subgroup& g,
                    std::vector<std::size_t> positions) {
  require_member_of(d, g);
  positions = normalize_positions(std::move(positions), d.arity());
  DirectProduct sub = d.select(positions);
  std::vector<Element> found;
  found.reserve(g.order());
  for (Element x : g.members()) found.push_back(d.project(sub, positions, x));
  Subgroup h = asserted_subgroup(sub.group(), std::move(found), "projection");
  return {std::move(sub), std::move(h)};
}

Restriction g_s(const DirectProduct& d, const Subgroup& g,
                std::vector<std::size_t> positions) {
  require_member_of(d, g);
  positions = normalize_positions(std::move(positions), d.arity());
  DirectProduct sub = d.select(positions);
  std::vector<char> selected(d.arity(), 0);
  for (std::size_t p : positions) selected[p] = 1;
  std::vector<Element> found;
  for (Element x : g.members()) {
    bool supported = true;
    for (std::size_t i = 0; i < d.arity() && supported; ++i) {
      supported = selected[i] || d.coordinate(x, i) == d.factor(i)->identity();
    }
    if (supported) found.push_back(d.project(sub, positions, x));
  }
  Subgroup h = asserted_subgroup(sub.group(), std::move(found), "restriction");

  std::vector<Element> projected;
  for (Element x : g.members()) projected.push_back(d.project(sub, positions, x));
  const Subgroup bar(sub.group(), std::move(projected));
  if (!h.is_subset_of(bar) || !is_normal(h, bar)) {
    throw TheoremViolation("G_S is not normal in the projection of G");
  }
  return {std::move(sub), std::move(h)};
}

bool nesting_check(const DirectProduct& d, const Subgroup& g, std::size_t factor,
                   std::vector<std::size_t> t, std::vector<std::size_t> s) {
  std::sort(t.begin(), t.end());
  std::sort(s.begin(), s.end());
  if (!std::includes(s.begin(), s.end(), t.begin(), t.end())) {
    throw std::invalid_argument("nesting_check requires T ⊆ S");
  }
  const Subgroup inner = section(d, g, {factor, std::move(s)});
  const Subgroup outer = section(d, g, {factor, std::move(t)});
  return inner.is_subset_of(outer) && is_normal(inner, outer);
}

GoursatChain qn(const DirectProduct& d, const Subgroup& g) {
  require_member_of(d, g);
  GoursatChain chain{section(d, g, {0, {}}), {}};
  for (std::size_t j = 1; j < d.arity(); ++j) {
    Subgroup gbar = section(d, g, {j, {}});
    Subgroup rel = section(d, g, {j, first_positions(j)});
    const QuotientGroup q = quotient(gbar, rel);
    const Subgroup lambda = g_bar_s(d, g, first_positions(j)).subgroup;

    // theta(λ) = [c] for (λ, c) in the projection of G to the first j+1 factors.
    const DirectProduct upto = d.prefix(j + 1);
    const std::vector<std::size_t> upto_positions = first_positions(j + 1);
    const std::size_t width = d.factor(j)->order();
    std::vector<Element> dense(lambda.parent().order(), -1);
    for (Element x : g.members()) {
      const auto y = static_cast<std::size_t>(d.project(upto, upto_positions, x));
      const Element c = q.coset_of(static_cast<Element>(y % width));
      Element& slot = dense[y / width];
      if (slot >= 0 && slot != c) throw TheoremViolation("theta is not well defined");
      slot = c;
    }
    std::vector<Element> images;
    images.reserve(lambda.order());
    for (Element l : lambda.members()) images.push_back(dense[static_cast<std::size_t>(l)]);
    Homomorphism theta(lambda, Subgroup::whole(q.group()), std::move(images));
    chain.links.push_back({std::move(gbar), std::move(rel), std::move(theta)});
  }
  return chain;
}

Subgroup gamman(const DirectProduct& d, const GoursatChain& c) {
  if (c.arity() != d.arity()) {
    throw std::invalid_argument("chain length does not match factor count");
  }
  if (!same_group(c.g1bar.parent_ptr(), d.factor(0))) {
    throw std::invalid_argument("g1bar does not live in the first factor");
  }
  Subgroup lambda = c.g1bar.rebind(d.prefix(1).group());
  for (std::size_t j = 1; j < d.arity(); ++j) {
    const ChainLink& link = c.links[j - 1];
    if (!same_group(link.gbar.parent_ptr(), d.factor(j)) ||
        !same_group(link.rel.parent_ptr(), d.factor(j))) {
      throw std::invalid_argument("chain link does not live in its factor");
    }
    if (!link.rel.is_subset_of(link.gbar)) {
      throw std::invalid_argument("chain link kernel is not contained in its group");
    }
    const QuotientGroup q = quotient(link.gbar, link.rel);
    if (!(link.theta.domain() == lambda)) {
      throw std::invalid_argument("theta domain differs from the reconstructed prefix");
    }
    if (!(link.theta.codomain() == Subgroup::whole(q.group()))) {
      throw std::invalid_argument("theta codomain is not gbar/rel");
    }
    if (!link.theta.is_surjective()) throw std::invalid_argument("theta is not surjective");
    const Homomorphism theta =
        Homomorphism::trusted(lambda, link.theta.codomain(),
                              {link.theta.images().begin(), link.theta.images().end()});
    lambda = graph_pullback(d.prefix(j + 1).group(), lambda, theta, q,
                            d.factor(j)->order());
  }
  return lambda.rebind(d.group());
}

GoursatChain q3(const DirectProduct& d, const Subgroup& g) {
  if (d.arity() != 3) throw std::invalid_argument("expected a product of 3 factors");
  require_member_of(d, g);
  const DirectProduct ab = d.prefix(2);
  const Subgroup lambda = g_bar_s(d, g, {0, 1}).subgroup;
  GoursatQuadruple inner = q2(ab, lambda);

  const DirectProduct nested({ab.group(), d.factor(2)});
  GoursatQuadruple outer = q2(nested, g.rebind(nested.group()));

  GoursatChain chain{std::move(inner.g1bar), {}};
  chain.links.push_back({std::move(inner.g2bar), std::move(inner.g2), std::move(inner.theta1)});
  chain.links.push_back({std::move(outer.g2bar), std::move(outer.g2), std::move(outer.theta1)});
  return chain;
}

Subgroup gamma3(const DirectProduct& d, const GoursatChain& c) {
  if (d.arity() != 3 || c.arity() != 3) {
    throw std::invalid_argument("expected a 3-factor product and chain");
  }
  const DirectProduct ab = d.prefix(2);
  const ChainLink& first = c.links[0];
  const ChainLink& second = c.links[1];
  const Subgroup lambda = gamma2(ab, {c.g1bar, first.gbar, first.rel, first.theta});

  const DirectProduct nested({ab.group(), d.factor(2)});
  return gamma2(nested, {lambda, second.gbar, second.rel, second.theta}).rebind(d.group());
}

std::vector<Subgroup> enumerate_subgroups_n(const DirectProduct& d, std::size_t max_order) {
  if (d.order() > max_order) throw CapExceeded(d.order(), max_order);
  std::vector<Subgroup> level = cyclic_join_subgroups(d.factor(0));
  for (std::size_t j = 1; j < d.arity(); ++j) {
    const GroupPtr target = d.prefix(j + 1).group();
    const std::size_t width = d.factor(j)->order();
    const std::vector<QuotientGroup> quotients = normal_quotients(d.factor(j));
    std::vector<Subgroup> next;
    for (const Subgroup& lambda : level) {
      for (const QuotientGroup& q : quotients) {
        if (lambda.order() % q.order() != 0) continue;
        for_each_homomorphism(lambda, Subgroup::whole(q.group()), MapKind::kSurjective,
                              [&](Homomorphism theta) {
                                next.push_back(graph_pullback(target, lambda, theta, q, width));
                                return true;
                              });
      }
    }
    level = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(level.size());
  for (Subgroup& h : level) out.push_back(h.rebind(d.group()));
  sort_subgroups(out);
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw TheoremViolation("distinct chains produced the same subgroup");
  }
  return out;
}

}  // namespace goursat
