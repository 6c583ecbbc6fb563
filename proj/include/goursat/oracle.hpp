#pragma once

#include <vector>

#include "goursat/error.hpp"
#include "goursat/group.hpp"

namespace goursat::oracle {

/// Every subgroup of g by layered closure: start from the trivial subgroup and
/// extend each known subgroup by one element outside it until no new member
/// set appears. Canonically ordered. Independent of the Goursat machinery.
std::vector<Subgroup> all_subgroups_bruteforce(
    const GroupPtr& g, std::size_t max_order = kDefaultMaxEnumerationOrder);

std::size_t subgroup_count(const GroupPtr& g,
                           std::size_t max_order = kDefaultMaxEnumerationOrder);

}  // namespace goursat::oracle
