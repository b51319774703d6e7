#include "nzc/cycles.hpp"

#include <algorithm>
#include <set>

namespace nzc {

namespace {

struct CycleSearch {
  const Graph& g;
  std::size_t cap;
  const std::function<void(const Cycle&)>& visit;
  std::size_t count = 0;
  std::size_t start = 0;
  std::vector<char> on_path;
  std::vector<char> can_reach;
  Cycle path;

  // Marks vertices (index > start, not on the current path) from which the
  // start vertex is still reachable; used to prune dead branches.
  void refresh_reach() {
    std::fill(can_reach.begin(), can_reach.end(), 0);
    std::vector<std::size_t> stack{start};
    can_reach[start] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t ei : g.incident(x)) {
        std::size_t y = g.vertex_index(g.edges()[ei].other(g.vertices()[x]));
        if (y < start || can_reach[y] || on_path[y]) continue;
        can_reach[y] = 1;
        stack.push_back(y);
      }
    }
  }

  bool touches_reach(std::size_t y) const {
    VertexId yv = g.vertices()[y];
    for (std::size_t ei : g.incident(y)) {
      if (can_reach[g.vertex_index(g.edges()[ei].other(yv))]) return true;
    }
    return false;
  }

  void emit(const DirectedEdge& closing) {
    const Edge& first = g.edge(path.edges.front().edge);
    const Edge& last = g.edge(closing.edge);
    std::size_t after = g.vertex_index(g.head(path.edges.front()));
    std::size_t before = g.vertex_index(g.tail(closing));
    // Keep only one of the two orientations.
    if (std::pair(after, first.id) > std::pair(before, last.id)) return;
    if (++count > cap) throw CapExceeded(cap);
    path.edges.push_back(closing);
    visit(path);
    path.edges.pop_back();
  }

  void extend(std::size_t x) {
    VertexId xv = g.vertices()[x];
    for (std::size_t ei : g.incident(x)) {
      const Edge& e = g.edges()[ei];
      std::size_t y = g.vertex_index(e.other(xv));
      if (y == start) {
        if (!path.edges.empty() && e.id != path.edges.front().edge) {
          emit(g.leaving(e.id, xv));
        }
        continue;
      }
      if (y < start || on_path[y]) continue;
      on_path[y] = 1;
      path.edges.push_back(g.leaving(e.id, xv));
      refresh_reach();
      if (touches_reach(y)) extend(y);
      path.edges.pop_back();
      on_path[y] = 0;
    }
  }
};

}  // namespace

std::size_t for_each_simple_cycle(const Graph& g, std::size_t cap,
                                  const std::function<void(const Cycle&)>& visit) {
  CycleSearch s{g, cap, visit, 0, 0, {}, {}, {}};
  s.on_path.assign(g.num_vertices(), 0);
  s.can_reach.assign(g.num_vertices(), 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    s.start = v;
    s.on_path[v] = 1;
    s.extend(v);
    s.on_path[v] = 0;
  }
  return s.count;
}

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap) {
  std::vector<Cycle> out;
  for_each_simple_cycle(g, cap, [&](const Cycle& c) { out.push_back(c); });
  return out;
}

std::vector<std::vector<VertexId>> components_without(const Graph& g,
                                                      const std::vector<VertexId>& removed) {
  std::vector<char> dead(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (VertexId r : removed) dead[g.vertex_index(r)] = 1;
  std::vector<std::vector<VertexId>> out;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (dead[s] || seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      comp.push_back(g.vertices()[x]);
      for (std::size_t ei : g.incident(x)) {
        std::size_t y = g.vertex_index(g.edges()[ei].other(g.vertices()[x]));
        if (dead[y] || seen[y]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  return components_without(g, {});
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace nzc
