#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzc/graph.hpp"

namespace nzc {

struct BagOrigin {
  enum class Kind { PType, CType, Free };
  Kind kind = Kind::Free;
  int node = -1;       // component-tree node id
  int local_bag = -1;  // bag index inside the node's own decomposition (c-type)
};

struct Bag {
  std::vector<VertexId> vertices;  // sorted
  BagOrigin origin;
  std::vector<std::vector<VertexId>> separating_sets;

  bool contains(VertexId v) const;
  bool contains_all(const std::vector<VertexId>& vs) const;
};

/// Rooted tree decomposition. Bag ids are indices into `bags`.
struct TreeDecomp {
  std::vector<Bag> bags;
  std::vector<std::pair<int, int>> edges;
  int root = 0;

  int width() const;
  /// Parent bag per bag (-1 at the root); throws StructuralError when the
  /// bag graph is not a tree.
  std::vector<int> parents() const;
  std::vector<std::vector<int>> adjacency() const;
  /// Bags in breadth-first order from the root.
  std::vector<int> bfs_order() const;
};

/// Checks that the edges form a tree on the bags and the three tree
/// decomposition properties (cover, edge hosting, connected vertex support).
/// Returns an empty string on success, else the first violation.
std::string check_tree_decomposition(const Graph& g, const TreeDecomp& td);

/// Largest graph handed to the exact treewidth dynamic programme.
inline constexpr std::size_t kMaxExactTreewidthVertices = 16;

/// Exact treewidth by dynamic programming over vertex subsets. Throws
/// PreconditionError above kMaxExactTreewidthVertices.
int exact_treewidth(const Graph& g, std::vector<VertexId>* elimination_order = nullptr);

/// Exact decomposition of width <= `width`, or nullopt. Parallel edges and
/// edge tags are irrelevant (virtual edges count as edges).
std::optional<TreeDecomp> try_tree_decompose(const Graph& g, int width);
/// As above but throws NotDecomposable when the width is exceeded.
TreeDecomp tree_decompose(const Graph& g, int width);

/// Decomposition induced by an elimination ordering, with bags contained in
/// a neighbour merged away.
TreeDecomp decomposition_from_order(const Graph& g, const std::vector<VertexId>& order);

}  // namespace nzc
