#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "nzc/graph.hpp"
#include "nzc/treedec.hpp"

namespace nzc {

/// The lifted graph: one vertex per (vertex, bag) incidence, one intra-bag
/// edge per original edge (at the highest bag holding both endpoints) and a
/// copy edge for every T' edge and every vertex its two bags share.
struct GPrime {
  Graph graph;
  TreeDecomp tprime;
  std::vector<int> parent;  // T' parent per bag
  std::vector<int> depth;   // T' depth per bag
  std::map<VertexId, std::pair<VertexId, int>> provenance;
  std::map<std::pair<VertexId, int>, VertexId> lift;
  /// Lifted edge -> bag it is associated with.
  std::map<EdgeId, int> association;
  /// Original edge -> its intra-bag copy (same orientation).
  std::map<EdgeId, EdgeId> intra_of;
  /// Copy edges, stored (v at child bag, v at parent bag).
  std::set<EdgeId> copy_edges;

  bool is_copy(EdgeId e) const { return copy_edges.count(e) != 0; }
  int bag_of(VertexId lifted) const { return provenance.at(lifted).second; }
  VertexId original(VertexId lifted) const { return provenance.at(lifted).first; }
  /// Bags of T' that host at least one edge of the cycle.
  std::set<int> associated_bags(const Cycle& c) const;
};

/// Throws StructuralError when tprime is not a tree decomposition of g.
GPrime build_gprime(const Graph& g, const TreeDecomp& tprime);

/// True when the bags associated with the cycle's edges induce a connected
/// subtree of T'.
bool check_connected_support(const GPrime& gp, const Cycle& c);

/// Same test for an arbitrary bag set, given T' parents.
bool bags_connected(const std::vector<int>& parent, const std::set<int>& bags);

}  // namespace nzc
