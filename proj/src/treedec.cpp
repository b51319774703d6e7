#include "nzc/treedec.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace nzc {

bool Bag::contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Bag::contains_all(const std::vector<VertexId>& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return contains(v); });
}

int TreeDecomp::width() const {
  std::size_t m = 0;
  for (const Bag& b : bags) m = std::max(m, b.vertices.size());
  return static_cast<int>(m) - 1;
}

std::vector<std::vector<int>> TreeDecomp::adjacency() const {
  std::vector<std::vector<int>> adj(bags.size());
  for (auto [a, b] : edges) {
    adj.at(a).push_back(b);
    adj.at(b).push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

std::vector<int> TreeDecomp::parents() const {
  if (bags.empty()) return {};
  if (edges.size() + 1 != bags.size()) {
    throw StructuralError("tree decomposition has " + std::to_string(edges.size()) +
                          " edges for " + std::to_string(bags.size()) + " bags");
  }
  auto adj = adjacency();
  std::vector<int> parent(bags.size(), -2);
  parent[root] = -1;
  std::deque<int> q{root};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : adj[x]) {
      if (parent[y] != -2) continue;
      parent[y] = x;
      q.push_back(y);
    }
  }
  if (std::count(parent.begin(), parent.end(), -2) != 0) {
    throw StructuralError("tree decomposition is disconnected");
  }
  return parent;
}

std::vector<int> TreeDecomp::bfs_order() const {
  auto adj = adjacency();
  std::vector<int> order;
  std::vector<char> seen(bags.size(), 0);
  std::deque<int> q{root};
  seen[root] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    order.push_back(x);
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        q.push_back(y);
      }
    }
  }
  return order;
}

std::string check_tree_decomposition(const Graph& g, const TreeDecomp& td) {
  if (td.bags.empty()) return g.num_vertices() == 0 ? "" : "no bags";
  try {
    td.parents();
  } catch (const StructuralError& e) {
    return e.what();
  }
  for (const Bag& b : td.bags) {
    if (!std::is_sorted(b.vertices.begin(), b.vertices.end())) return "bag not sorted";
  }
  for (VertexId v : g.vertices()) {
    bool found = std::any_of(td.bags.begin(), td.bags.end(),
                             [&](const Bag& b) { return b.contains(v); });
    if (!found) return "vertex " + std::to_string(v) + " in no bag";
  }
  for (const Edge& e : g.edges()) {
    bool found = std::any_of(td.bags.begin(), td.bags.end(),
                             [&](const Bag& b) { return b.contains(e.u) && b.contains(e.v); });
    if (!found) return "edge " + std::to_string(e.id) + " in no bag";
  }
  auto adj = td.adjacency();
  for (VertexId v : g.vertices()) {
    std::vector<int> holders;
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
      if (td.bags[i].contains(v)) holders.push_back(static_cast<int>(i));
    }
    std::set<int> seen{holders.front()};
    std::vector<int> stack{holders.front()};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (td.bags[y].contains(v) && seen.insert(y).second) stack.push_back(y);
      }
    }
    if (seen.size() != holders.size()) {
      return "bags holding vertex " + std::to_string(v) + " are not connected";
    }
  }
  return "";
}

int exact_treewidth(const Graph& g, std::vector<VertexId>* elimination_order) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxExactTreewidthVertices) {
    throw PreconditionError("exact treewidth limited to " +
                            std::to_string(kMaxExactTreewidthVertices) + " vertices, got " +
                            std::to_string(n));
  }
  if (n == 0) return -1;
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    std::size_t a = g.vertex_index(e.u), b = g.vertex_index(e.v);
    nbr[a] |= 1u << b;
    nbr[b] |= 1u << a;
  }
  // q(S, v): vertices outside S + v reachable from v through S.
  auto q = [&](std::uint32_t s, std::size_t v) {
    std::uint32_t visited = 1u << v, frontier = 1u << v, outside = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        std::size_t x = static_cast<std::size_t>(__builtin_ctz(f));
        std::uint32_t nb = nbr[x] & ~visited;
        outside |= nb & ~s;
        next |= nb & s;
        visited |= nb;
      }
      frontier = next;
    }
    return __builtin_popcount(outside & ~(1u << v));
  };
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  std::vector<int> tw(std::size_t(full) + 1, std::numeric_limits<int>::max());
  std::vector<std::int8_t> choice(std::size_t(full) + 1, -1);
  tw[0] = std::numeric_limits<int>::min();
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t f = s; f; f &= f - 1) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctz(f));
      std::uint32_t rest = s & ~(1u << v);
      int cand = std::max(tw[rest], q(rest, v));
      if (cand < tw[s]) {
        tw[s] = cand;
        choice[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  if (elimination_order) {
    std::vector<VertexId> rev;
    for (std::uint32_t s = full; s; s &= ~(1u << choice[s])) rev.push_back(g.vertices()[choice[s]]);
    elimination_order->assign(rev.rbegin(), rev.rend());
  }
  return tw[full];
}

TreeDecomp decomposition_from_order(const Graph& g, const std::vector<VertexId>& order) {
  const std::size_t n = order.size();
  std::map<VertexId, std::size_t> rank;
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
  std::vector<std::set<std::size_t>> fill(n);
  for (const Edge& e : g.edges()) {
    std::size_t a = rank.at(e.u), b = rank.at(e.v);
    fill[a].insert(b);
    fill[b].insert(a);
  }
  // bag_i = {i} + later neighbours in the filled graph.
  std::vector<std::vector<std::size_t>> bags(n);
  std::vector<int> parent(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> later;
    for (std::size_t j : fill[i]) {
      if (j > i) later.push_back(j);
    }
    for (std::size_t a : later) {
      for (std::size_t b : later) {
        if (a != b) fill[a].insert(b);
      }
    }
    bags[i] = later;
    bags[i].push_back(i);
    if (!later.empty()) parent[i] = static_cast<int>(*std::min_element(later.begin(), later.end()));
  }
  // forests: hang every root below the last eliminated vertex
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (parent[i] == -1) parent[i] = static_cast<int>(n - 1);
  }
  // merge bags into a superset neighbour
  std::vector<std::set<std::size_t>> sets(n);
  for (std::size_t i = 0; i < n; ++i) sets[i] = {bags[i].begin(), bags[i].end()};
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      // neighbours of i among alive bags
      std::vector<std::size_t> nb;
      if (parent[i] >= 0) nb.push_back(static_cast<std::size_t>(parent[i]));
      for (std::size_t j = 0; j < n; ++j) {
        if (alive[j] && parent[j] == static_cast<int>(i)) nb.push_back(j);
      }
      for (std::size_t j : nb) {
        if (!std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
          continue;
        }
        // absorb i into j
        for (std::size_t k = 0; k < n; ++k) {
          if (alive[k] && k != j && parent[k] == static_cast<int>(i)) {
            parent[k] = static_cast<int>(j);
          }
        }
        if (parent[j] == static_cast<int>(i)) parent[j] = parent[i];
        alive[i] = 0;
        changed = true;
        break;
      }
    }
  }
  TreeDecomp td;
  std::vector<int> id(n, -1);
  for (std::size_t i = n; i-- > 0;) {
    if (!alive[i]) continue;
    id[i] = static_cast<int>(td.bags.size());
    Bag b;
    for (std::size_t r : sets[i]) b.vertices.push_back(order[r]);
    std::sort(b.vertices.begin(), b.vertices.end());
    td.bags.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i] && parent[i] >= 0) td.edges.emplace_back(id[parent[i]], id[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i] && parent[i] < 0) td.root = id[i];
  }
  return td;
}

std::optional<TreeDecomp> try_tree_decompose(const Graph& g, int width) {
  if (g.num_vertices() == 0) return TreeDecomp{};
  std::vector<VertexId> order;
  int tw = exact_treewidth(g, &order);
  if (tw > width) return std::nullopt;
  TreeDecomp td = decomposition_from_order(g, order);
  if (auto why = check_tree_decomposition(g, td); !why.empty()) {
    throw StructuralError("elimination-order decomposition invalid: " + why);
  }
  return td;
}

TreeDecomp tree_decompose(const Graph& g, int width) {
  auto td = try_tree_decompose(g, width);
  if (!td) {
    throw NotDecomposable("treewidth exceeds " + std::to_string(width),
                          "{\"vertices\":" + std::to_string(g.num_vertices()) + "}");
  }
  return *td;
}

}  // namespace nzc
