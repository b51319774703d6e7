#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nzc/treedec.hpp"

namespace nzc {

/// Recursive centroid tree over the bags of T'.
struct AuxTree {
  int root = -1;
  std::vector<int> parent;  // per bag, -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> height;
  std::vector<long long> leaves;  // leaf count of the subtree rooted at each bag
  /// Vertices shared between a bag and the neighbouring bag in its
  /// auxiliary parent's subtree (empty at the root).
  std::vector<std::vector<VertexId>> attached_at;
  /// For a child c of p: the T' neighbour of p inside c's subtree.
  std::vector<int> attach_bag;

  /// Descendants of b (b included).
  std::vector<int> subtree(int b) const;
  bool is_ancestor(int a, int b) const;  // a == b counts
};

AuxTree build_aux_tree(const TreeDecomp& tprime);

/// (height, leaf count) of the auxiliary subtree rooted at b.
std::pair<int, long long> subtree_stats(const AuxTree& a, int b);

/// Every connected bag set of T' has a member that is an auxiliary ancestor
/// of the rest. Brute force over all connected subsets; only for at most
/// `max_bags` bags (returns "" unchecked above that).
std::string check_ancestor_property(const TreeDecomp& tprime, const AuxTree& a, int max_bags = 12);

}  // namespace nzc
