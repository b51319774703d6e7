#include "nzc/component_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nzc {

std::vector<int> ComponentTree::incident_links(int node) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (links[i].a == node || links[i].b == node) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::vector<VertexId>> ComponentTree::separating_sets(int node) const {
  std::set<std::vector<VertexId>> sets;
  for (int li : incident_links(node)) sets.insert(links[li].sep);
  return {sets.begin(), sets.end()};
}

Graph ComponentTree::reassemble() const {
  Graph g;
  std::vector<VertexId> all;
  for (const auto& n : nodes) {
    for (VertexId v : n.graph.vertices()) all.push_back(v);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (VertexId v : all) g.add_vertex(v);
  std::vector<Edge> real;
  for (const auto& n : nodes) {
    for (const Edge& e : n.graph.edges()) {
      if (e.is_real()) real.push_back(e);
    }
  }
  std::sort(real.begin(), real.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (const Edge& e : real) g.add_edge(e.id, e.u, e.v, EdgeTag::Real);
  return g;
}

EdgeId ComponentTree::next_virtual_id() const {
  EdgeId lo = 0;
  for (const auto& n : nodes) {
    for (const Edge& e : n.graph.edges()) lo = std::min(lo, e.id);
  }
  return lo - 1;
}

std::vector<std::vector<int>> ComponentTree::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (const auto& l : links) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  return adj;
}

void add_virtual_clique(Graph& g, const std::vector<VertexId>& set, EdgeId& next_id) {
  for (VertexId v : set) g.add_vertex(v);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (!g.find_edge(set[i], set[j], EdgeTag::Virtual)) {
        g.add_edge(next_id--, set[i], set[j], EdgeTag::Virtual);
      }
    }
  }
}

std::string check_component_tree(const ComponentTree& t) {
  const std::size_t n = t.nodes.size();
  if (n == 0) return "empty tree";
  if (t.links.size() + 1 != n) return "link count does not match a tree";
  auto adj = t.adjacency();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{t.root};
  seen[t.root] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 0)) return "component tree is disconnected";

  for (std::size_t li = 0; li < t.links.size(); ++li) {
    const TreeLink& l = t.links[li];
    if (l.sep.empty() || l.sep.size() > 3) return "separating set size out of range";
    for (int end : {l.a, l.b}) {
      const Graph& g = t.nodes[end].graph;
      for (VertexId v : l.sep) {
        if (!g.has_vertex(v)) {
          return "separating set vertex " + std::to_string(v) + " missing from node " +
                 std::to_string(end);
        }
      }
      for (std::size_t i = 0; i < l.sep.size(); ++i) {
        for (std::size_t j = i + 1; j < l.sep.size(); ++j) {
          if (!g.find_edge(l.sep[i], l.sep[j], EdgeTag::Virtual)) {
            return "separating set of link " + std::to_string(li) + " lacks a virtual clique";
          }
        }
      }
    }
  }

  std::map<EdgeId, int> real_owner;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Edge& e : t.nodes[i].graph.edges()) {
      if (!e.is_real()) continue;
      if (!real_owner.emplace(e.id, static_cast<int>(i)).second) {
        return "real edge " + std::to_string(e.id) + " appears in two nodes";
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = t.nodes[i];
    if (node.kind == NodeKind::CType) {
      if (!node.decomposition) return "c-type node " + std::to_string(i) + " has no decomposition";
      if (auto why = check_tree_decomposition(node.graph, *node.decomposition); !why.empty()) {
        return "node " + std::to_string(i) + ": " + why;
      }
    }
  }

  // vertex support connectivity
  std::map<VertexId, std::vector<int>> holders;
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId v : t.nodes[i].graph.vertices()) holders[v].push_back(static_cast<int>(i));
  }
  for (const auto& [v, hs] : holders) {
    std::set<int> in(hs.begin(), hs.end()), reached{hs.front()};
    std::vector<int> st{hs.front()};
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int li : t.incident_links(x)) {
        const TreeLink& l = t.links[li];
        int y = l.a == x ? l.b : l.a;
        if (in.count(y) && std::binary_search(l.sep.begin(), l.sep.end(), v) &&
            reached.insert(y).second) {
          st.push_back(y);
        }
      }
    }
    if (reached.size() != in.size()) {
      return "nodes holding vertex " + std::to_string(v) + " are not joined through separating sets";
    }
  }
  return "";
}

}  // namespace nzc
