#include "goursat/oracle.hpp"

#include <set>
#include <utility>

namespace goursat::oracle {

std::vector<Subgroup> all_subgroups_bruteforce(const GroupPtr& g,
                                               std::size_t max_order) {
  if (g->order() > max_order) throw CapExceeded(g->order(), max_order);

  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  seen.emplace(found.front().members().begin(), found.front().members().end());

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const std::vector<char> in = found[idx].mask();
      std::vector<Element> gens = generating_set(found[idx]);
      gens.push_back(0);
      for (std::size_t x = 0; x < g->order(); ++x) {
        if (in[x]) continue;
        gens.back() = static_cast<Element>(x);
        Subgroup ext = generated_subgroup(g, gens);
        auto m = ext.members();
        if (seen.emplace(m.begin(), m.end()).second) {
          next.push_back(found.size());
          found.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  sort_subgroups(found);
  return found;
}

std::size_t subgroup_count(const GroupPtr& g, std::size_t max_order) {
  return all_subgroups_bruteforce(g, max_order).size();
}

}  // namespace goursat::oracle
