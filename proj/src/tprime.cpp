#include "nzc/tprime.hpp"

#include <algorithm>

namespace nzc {

TreeDecomp build_tprime(const ComponentTree& t) {
  TreeDecomp out;
  std::vector<int> first(t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const ComponentNode& node = t.nodes[i];
    auto sets = t.separating_sets(static_cast<int>(i));
    first[i] = static_cast<int>(out.bags.size());
    if (node.kind == NodeKind::PType) {
      Bag b;
      b.vertices = node.graph.vertices();
      std::sort(b.vertices.begin(), b.vertices.end());
      b.origin = {BagOrigin::Kind::PType, static_cast<int>(i), -1};
      b.separating_sets = sets;
      out.bags.push_back(std::move(b));
      continue;
    }
    if (!node.decomposition) {
      throw StructuralError("c-type node " + std::to_string(i) + " has no decomposition");
    }
    const TreeDecomp& d = *node.decomposition;
    for (std::size_t lb = 0; lb < d.bags.size(); ++lb) {
      Bag b;
      b.vertices = d.bags[lb].vertices;
      b.origin = {BagOrigin::Kind::CType, static_cast<int>(i), static_cast<int>(lb)};
      for (const auto& s : sets) {
        if (b.contains_all(s)) b.separating_sets.push_back(s);
      }
      out.bags.push_back(std::move(b));
    }
    for (auto [x, y] : d.edges) out.edges.emplace_back(first[i] + x, first[i] + y);
  }

  auto host = [&](int node, const std::vector<VertexId>& sep) {
    const ComponentNode& n = t.nodes[node];
    if (n.kind == NodeKind::PType) return first[node];
    for (int lb : n.decomposition->bfs_order()) {
      if (n.decomposition->bags[lb].contains_all(sep)) return first[node] + lb;
    }
    throw StructuralError("no bag of c-type node " + std::to_string(node) +
                          " holds a shared separating set");
  };
  for (const TreeLink& l : t.links) out.edges.emplace_back(host(l.a, l.sep), host(l.b, l.sep));

  const ComponentNode& r = t.nodes[t.root];
  out.root = first[t.root] + (r.kind == NodeKind::CType ? r.decomposition->root : 0);
  return out;
}

}  // namespace nzc
