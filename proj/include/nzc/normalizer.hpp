#pragma once

#include <map>
#include <vector>

#include "nzc/component_tree.hpp"
#include "nzc/graph.hpp"

namespace nzc {

/// Maps every real edge of a pre-gadget graph to a walk in the post-gadget
/// graph from the image of its stored tail to the image of its stored head.
/// Edges without an entry map to themselves.
struct GadgetMap {
  std::map<EdgeId, std::vector<DirectedEdge>> paths;
  /// Post-gadget vertex -> pre-gadget vertex, for vertices the gadgets added.
  std::map<VertexId, VertexId> origin;

  std::vector<DirectedEdge> path(EdgeId e) const;
  VertexId original(VertexId v) const;
  /// This map followed by `next` (pre -> this post -> next post), flattened.
  GadgetMap then(const GadgetMap& next) const;
};

struct GadgetResult {
  ComponentTree tree;
  GadgetMap map;
};

/// Replaces every vertex shared by two or more distinct separating sets of a
/// node by a star (gamma gadget): leaf v_i takes v's place in the i-th set
/// and in the part of the tree beyond it.
GadgetResult split_shared_vertices(ComponentTree t);

/// Replaces every separating set shared by more than two nodes with a beta
/// gadget node (t stars of k leaves, width 2t - 1 decomposition).
GadgetResult dedupe_separating_sets(ComponentTree t);

/// Splits p-type nodes along separating triangles until every virtual
/// triangle can be a face of one embedding. With `repair` off, a violation
/// throws StructuralError instead.
ComponentTree enforce_facial_virtual_triangles(ComponentTree t, bool repair = true);

/// Runs the three transforms to a fixed point.
GadgetResult normalize(ComponentTree t, bool repair_facial = true);

/// w1(e) = sum of w2 over P(e).
WeightAssignment pull_circulation_through_gadget(const WeightAssignment& w2, const GadgetMap& m,
                                                 const Graph& pre);

/// Empty string when the property holds.
std::string check_disjoint_separating_sets(const ComponentTree& t);
std::string check_sets_shared_by_two(const ComponentTree& t);
std::string check_facial_triangles(const ComponentTree& t);

/// Planarity test of the node graph with one extra vertex joined to every
/// separating set of the node.
bool stars_planar(const ComponentTree& t, int node);

}  // namespace nzc
