#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "orbicover/perm.hpp"

namespace orbicover {

// Isomorphism-class fingerprint of a small permutation group. The triple
// (order, element_orders, abelian) separates every pair of groups this
// pipeline needs to distinguish; full isomorphism testing is out of scope.
struct GroupSummary {
  int order = 0;
  std::vector<int> element_orders;  // sorted, one entry per element
  bool abelian = false;
  bool cyclic = false;
  std::string label;  // "C6", "D6-style", "order-24"

  auto fingerprint() const { return std::tie(order, element_orders, abelian); }
  bool same_class(const GroupSummary& o) const { return fingerprint() == o.fingerprint(); }
  bool operator==(const GroupSummary&) const = default;
};

// Breadth-first closure of the generated subgroup, sorted.
std::vector<Perm> group_closure(const std::vector<Perm>& gens);

GroupSummary subgroup_summary(const std::vector<Perm>& gens);

// True iff the orbit of point 0 under the generators is all of {0,...,degree-1}.
bool is_transitive(const std::vector<Perm>& gens, int degree);

// A block system: partition of the points into equal blocks, each generator
// mapping blocks to blocks. Blocks are sorted internally and by first element.
using BlockSystem = std::vector<std::vector<int>>;

// All nontrivial block systems (1 < #blocks < degree) of a transitive action,
// found by exhaustively checking every candidate equal-size partition.
// Requires degree <= 12.
std::vector<BlockSystem> block_systems(const std::vector<Perm>& gens, int degree);

}  // namespace orbicover
