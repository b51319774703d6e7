#include "nzc/gprime.hpp"

#include <algorithm>

namespace nzc {

std::set<int> GPrime::associated_bags(const Cycle& c) const {
  std::set<int> out;
  for (const DirectedEdge& d : c.edges) out.insert(association.at(d.edge));
  return out;
}

GPrime build_gprime(const Graph& g, const TreeDecomp& tprime) {
  if (auto why = check_tree_decomposition(g.real_subgraph(), tprime); !why.empty()) {
    throw StructuralError("T' is not a tree decomposition: " + why);
  }
  GPrime gp;
  gp.tprime = tprime;
  gp.parent = tprime.parents();
  gp.depth.assign(tprime.bags.size(), 0);
  for (int b : tprime.bfs_order()) {
    if (gp.parent[b] >= 0) gp.depth[b] = gp.depth[gp.parent[b]] + 1;
  }

  VertexId next = 0;
  for (std::size_t b = 0; b < tprime.bags.size(); ++b) {
    for (VertexId v : tprime.bags[b].vertices) {
      gp.graph.add_vertex(next);
      gp.provenance[next] = {v, static_cast<int>(b)};
      gp.lift[{v, static_cast<int>(b)}] = next;
      ++next;
    }
  }

  EdgeId eid = 0;
  for (const Edge& e : g.edges()) {
    if (!e.is_real()) continue;
    int host = -1;
    for (std::size_t b = 0; b < tprime.bags.size(); ++b) {
      const Bag& bag = tprime.bags[b];
      if (!bag.contains(e.u) || !bag.contains(e.v)) continue;
      int p = gp.parent[b];
      if (p >= 0 && tprime.bags[p].contains(e.u) && tprime.bags[p].contains(e.v)) continue;
      if (host >= 0) throw StructuralError("edge " + std::to_string(e.id) + " has two host bags");
      host = static_cast<int>(b);
    }
    if (host < 0) throw StructuralError("edge " + std::to_string(e.id) + " has no host bag");
    gp.graph.add_edge(eid, gp.lift.at({e.u, host}), gp.lift.at({e.v, host}));
    gp.association[eid] = host;
    gp.intra_of[e.id] = eid;
    ++eid;
  }
  for (std::size_t b = 0; b < tprime.bags.size(); ++b) {
    int p = gp.parent[b];
    if (p < 0) continue;
    for (VertexId v : tprime.bags[b].vertices) {
      if (!tprime.bags[p].contains(v)) continue;
      gp.graph.add_edge(eid, gp.lift.at({v, static_cast<int>(b)}), gp.lift.at({v, p}));
      gp.association[eid] = p;
      gp.copy_edges.insert(eid);
      ++eid;
    }
  }
  return gp;
}

bool bags_connected(const std::vector<int>& parent, const std::set<int>& bags) {
  if (bags.empty()) return true;
  // connected in a rooted tree iff exactly one member has its parent outside
  int tops = 0;
  for (int b : bags) {
    if (parent[b] < 0 || !bags.count(parent[b])) ++tops;
  }
  return tops == 1;
}

bool check_connected_support(const GPrime& gp, const Cycle& c) {
  return bags_connected(gp.parent, gp.associated_bags(c));
}

}  // namespace nzc
