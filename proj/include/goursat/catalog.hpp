#pragma once

#include <string>

#include "goursat/error.hpp"
#include "goursat/group.hpp"

namespace goursat {

enum class GroupKind { kTrivial, kCyclic, kSymmetric, kAlternating, kDihedral, kQuaternion };

struct GroupSpec {
  GroupKind kind = GroupKind::kTrivial;
  int param = 1;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Canonical label: "1", "Z4", "S3", "A4", "D4", "Q8".
std::string spec_label(const GroupSpec& spec);

/// Builds a catalog group.
///
/// - Z_n: integers mod n, element k named "k".
/// - S_n, A_n (n <= 5): permutations of {1..n} in lexicographic order of their
///   one-line notation (even ones only for A_n); the product p*q applies q
///   first. Elements are named by one-line notation, e.g. "213".
/// - D_n: symmetries of the n-gon, order 2n. Element i*n + k is r^k s^i;
///   named by index.
/// - Q8: element 4*sign + u is (-1)^sign * {1, i, j, k}[u]; named by index.
///
/// Throws std::invalid_argument for unsupported parameters and CapExceeded
/// when the order exceeds `max_order`.
GroupPtr make_group(const GroupSpec& spec,
                    std::size_t max_order = kDefaultMaxGroupOrder);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
GroupPtr dihedral_group(int n);
GroupPtr quaternion_group();

}  // namespace goursat
