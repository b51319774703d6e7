#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzc/graph.hpp"
#include "nzc/treedec.hpp"

namespace nzc {

enum class NodeKind { PType, CType };

/// One component of a clique-sum decomposition. The local graph uses global
/// vertex ids; its virtual edges carry negative ids.
struct ComponentNode {
  Graph graph;
  NodeKind kind = NodeKind::PType;
  /// Required for c-type nodes: a decomposition of the local graph
  /// (virtual edges included).
  std::optional<TreeDecomp> decomposition;
  /// Width recorded for c-type nodes (may exceed the input bound after merges
  /// and gadget insertion).
  int width = -1;
  bool is_beta = false;
};

/// A tree edge, labelled by the separating set shared by its endpoints.
struct TreeLink {
  int a = -1;
  int b = -1;
  std::vector<VertexId> sep;  // sorted, 1-3 vertices
};

struct ComponentTree {
  std::vector<ComponentNode> nodes;
  std::vector<TreeLink> links;
  int root = 0;

  std::vector<int> incident_links(int node) const;
  /// Distinct separating sets of a node (sorted, deduplicated).
  std::vector<std::vector<VertexId>> separating_sets(int node) const;
  /// Union of all real edges over their vertex sets.
  Graph reassemble() const;
  /// Smallest unused (most negative minus one) virtual edge id.
  EdgeId next_virtual_id() const;
  /// Neighbour lists over nodes.
  std::vector<std::vector<int>> adjacency() const;
};

/// Checks the component tree invariants: the links form a tree, each
/// separating set lies in both endpoint nodes and spans a virtual clique
/// there, real edges appear once, and every vertex's nodes are connected.
/// Returns an empty string when valid.
std::string check_component_tree(const ComponentTree& t);

/// Adds virtual edges so that `set` is a clique in `g` (ids from `next_id`,
/// decreasing).
void add_virtual_clique(Graph& g, const std::vector<VertexId>& set, EdgeId& next_id);

}  // namespace nzc
