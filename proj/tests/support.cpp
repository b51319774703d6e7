#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nzc::test {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  Bipartition bp;
  for (int i = 0; i < a; ++i) bp.left.push_back(i);
  for (int j = 0; j < b; ++j) bp.right.push_back(a + j);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  Graph g = from_edges(a + b, e);
  g.set_bipartition(bp);
  return g;
}

Graph grid_graph(int rows, int cols) {
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  }
  return from_edges(rows * cols, e);
}

Graph two_k4() {
  return from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

Graph theta_graph(int a, int b, int c) {
  Graph g;
  g.add_vertex(0);
  g.add_vertex(1);
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

ComponentTree two_k4_tree() {
  ComponentTree t;
  EdgeId vid = -1;
  ComponentNode a, b;
  a.graph = from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  // ids follow two_k4(): triangle 0..2, apex 3 edges 3..5, apex 4 edges 6..8
  b.graph.add_edge(6, 0, 4);
  b.graph.add_edge(7, 1, 4);
  b.graph.add_edge(8, 2, 4);
  add_virtual_clique(a.graph, {0, 1, 2}, vid);
  add_virtual_clique(b.graph, {0, 1, 2}, vid);
  t.nodes = {a, b};
  t.links = {{0, 1, {0, 1, 2}}};
  return t;
}

ComponentTree nonfacial_triangle_tree() {
  ComponentTree t;
  EdgeId vid = -1;
  ComponentNode a, b;
  // node 0: apexes 3 and 4 on both sides of the virtual triangle
  a.graph.add_edge(0, 0, 3);
  a.graph.add_edge(1, 1, 3);
  a.graph.add_edge(2, 2, 3);
  a.graph.add_edge(3, 0, 4);
  a.graph.add_edge(4, 1, 4);
  a.graph.add_edge(5, 2, 4);
  add_virtual_clique(a.graph, {0, 1, 2}, vid);
  b.graph.add_edge(6, 0, 1);
  b.graph.add_edge(7, 1, 2);
  b.graph.add_edge(8, 0, 2);
  b.graph.add_edge(9, 0, 5);
  b.graph.add_edge(10, 1, 5);
  b.graph.add_edge(11, 2, 5);
  add_virtual_clique(b.graph, {0, 1, 2}, vid);
  t.nodes = {a, b};
  t.links = {{0, 1, {0, 1, 2}}};
  return t;
}

std::size_t count_cycles_by_subsets(const Graph& g) {
  const std::size_t m = g.num_edges();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::map<VertexId, int> deg;
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = g.edges()[i];
      ++deg[e.u];
      ++deg[e.v];
      parent.emplace(e.u, e.u);
      parent.emplace(e.v, e.v);
    }
    bool ok = std::all_of(deg.begin(), deg.end(), [](auto& p) { return p.second == 2; });
    if (!ok) continue;
    std::size_t comps = deg.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      VertexId a = find(g.edges()[i].u), b = find(g.edges()[i].v);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    if (comps == 1) ++count;
  }
  return count;
}

int treewidth_by_permutations(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::set<int>> base(n);
  for (const Edge& e : g.edges()) {
    int a = static_cast<int>(g.vertex_index(e.u)), b = static_cast<int>(g.vertex_index(e.v));
    base[a].insert(b);
    base[b].insert(a);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    auto adj = base;
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> nb;
      for (int u : adj[v]) {
        if (!gone[u]) nb.push_back(u);
      }
      width = std::max(width, static_cast<int>(nb.size()));
      for (int x : nb) {
        for (int y : nb) {
          if (x != y) adj[x].insert(y);
        }
      }
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return n == 0 ? -1 : best;
}

std::size_t count_pms_by_permutations(const Graph& g) {
  const auto& bp = g.bipartition();
  std::vector<VertexId> left, right;
  if (bp) {
    left = bp->left;
    right = bp->right;
  }
  if (left.size() != right.size()) return 0;
  std::sort(right.begin(), right.end());
  std::size_t count = 0;
  do {
    std::size_t ways = 1;
    for (std::size_t i = 0; i < left.size() && ways; ++i) {
      std::size_t k = 0;
      for (const Edge& e : g.edges()) {
        if ((e.u == left[i] && e.v == right[i]) || (e.v == left[i] && e.u == right[i])) ++k;
      }
      ways *= k;
    }
    count += ways;
  } while (std::next_permutation(right.begin(), right.end()));
  return count;
}

BigInt circulation_by_vertices(const Graph& g, const WeightAssignment& w,
                               const std::vector<VertexId>& seq) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    VertexId a = seq[i], b = seq[(i + 1) % seq.size()];
    for (const Edge& e : g.edges()) {
      if (!e.is_real()) continue;
      if (e.u == a && e.v == b) sum += w.forward(e.id);
      if (e.u == b && e.v == a) sum -= w.forward(e.id);
    }
  }
  return sum;
}

std::size_t components_after_removal(const Graph& g, const std::set<VertexId>& removed) {
  std::map<VertexId, int> label;
  int next = 0;
  for (VertexId v : g.vertices()) {
    if (!removed.count(v)) label[v] = next++;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : g.edges()) {
      if (removed.count(e.u) || removed.count(e.v)) continue;
      int lo = std::min(label[e.u], label[e.v]);
      if (label[e.u] != lo || label[e.v] != lo) {
        label[e.u] = label[e.v] = lo;
        changed = true;
      }
    }
  }
  std::set<int> distinct;
  for (auto& [v, l] : label) distinct.insert(l);
  return distinct.size();
}

std::vector<unsigned> connected_subsets(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<unsigned> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int start = __builtin_ctz(mask);
    unsigned seen = 1u << start, frontier = seen;
    while (frontier) {
      unsigned next = 0;
      for (int v = 0; v < n; ++v) {
        if (!(frontier >> v & 1)) continue;
        for (int u : adj[v]) {
          if ((mask >> u & 1) && !(seen >> u & 1)) next |= 1u << u;
        }
      }
      seen |= next;
      frontier = next;
    }
    if (seen == mask) out.push_back(mask);
  }
  return out;
}

}  // namespace nzc::test
