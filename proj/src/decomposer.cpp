#include "nzc/decomposer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nzc/cycles.hpp"
#include "nzc/planar.hpp"
#include "nzc/treedec.hpp"

namespace nzc {

Classification classify(const Graph& g, int width) {
  if (is_planar(g)) return Classification::PType;
  if (g.num_vertices() > kMaxExactTreewidthVertices) return Classification::Neither;
  return exact_treewidth(g) <= width ? Classification::CType : Classification::Neither;
}

std::vector<Graph> split_biconnected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<Graph> blocks;
  int timer = 0;

  auto pop_block = [&](std::size_t until) {
    Graph b;
    while (true) {
      std::size_t ei = edge_stack.back();
      edge_stack.pop_back();
      const Edge& e = g.edges()[ei];
      b.add_edge(e.id, e.u, e.v, e.tag);
      if (ei == until) break;
    }
    blocks.push_back(std::move(b));
  };

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t x, std::size_t via) {
    disc[x] = low[x] = timer++;
    for (std::size_t ei : g.incident(x)) {
      if (ei == via) continue;
      std::size_t y = g.vertex_index(g.edges()[ei].other(g.vertices()[x]));
      if (disc[y] == -1) {
        edge_stack.push_back(ei);
        dfs(y, ei);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) pop_block(ei);
      } else if (disc[y] < disc[x]) {
        edge_stack.push_back(ei);
        low[x] = std::min(low[x], disc[y]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, static_cast<std::size_t>(-1));
  }
  for (Graph& b : blocks) {
    if (g.bipartition()) {
      Bipartition bp;
      for (VertexId v : b.vertices()) (g.is_left(v) ? bp.left : bp.right).push_back(v);
      b.set_bipartition(std::move(bp));
    }
  }
  return blocks;
}

namespace {

struct Sub {
  std::vector<ComponentNode> nodes;
  std::vector<TreeLink> links;
};

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (std::size_t i = 0; i < g.num_vertices(); ++i) os << (i ? "," : "") << g.vertices()[i];
  os << "],\"edges\":[";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    os << (i ? "," : "") << "[" << e.u << "," << e.v << "]";
  }
  os << "]}";
  return os.str();
}

int node_containing(const Sub& s, const std::vector<VertexId>& set) {
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const Graph& g = s.nodes[i].graph;
    if (std::all_of(set.begin(), set.end(), [&](VertexId v) { return g.has_vertex(v); })) {
      return static_cast<int>(i);
    }
  }
  throw StructuralError("no piece node holds its separating set");
}

std::vector<std::vector<VertexId>> candidate_separators(const Graph& piece) {
  std::vector<VertexId> vs = piece.vertices();
  std::sort(vs.begin(), vs.end());
  std::vector<std::vector<VertexId>> out;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({vs[i], vs[j]});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({vs[i], vs[j], vs[k]});
    }
  }
  return out;
}

class Decomposer {
 public:
  Decomposer(int width, EdgeId first_virtual) : width_(width), next_virtual_(first_virtual) {}

  std::optional<Sub> solve(const Graph& piece) {
    for (const auto& sep : candidate_separators(piece)) {
      auto comps = components_without(piece, sep);
      if (comps.size() < 2) continue;
      auto sub = split(piece, sep, comps);
      if (sub) return sub;
    }
    return leaf(piece);
  }

  std::string last_failure;

 private:
  std::optional<Sub> leaf(const Graph& piece) {
    ComponentNode node;
    node.graph = piece;
    switch (classify(piece, width_)) {
      case Classification::PType:
        node.kind = NodeKind::PType;
        break;
      case Classification::CType:
        node.kind = NodeKind::CType;
        node.decomposition = tree_decompose(piece, width_);
        node.width = node.decomposition->width();
        break;
      case Classification::Neither:
        last_failure = describe(piece);
        return std::nullopt;
    }
    Sub s;
    s.nodes.push_back(std::move(node));
    return s;
  }

  std::optional<Sub> split(const Graph& piece, const std::vector<VertexId>& sep,
                           const std::vector<std::vector<VertexId>>& comps) {
    std::set<VertexId> in_sep(sep.begin(), sep.end());
    std::vector<Sub> subs;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      std::set<VertexId> keep(comps[ci].begin(), comps[ci].end());
      keep.insert(sep.begin(), sep.end());
      Graph part;
      for (VertexId v : piece.vertices()) {
        if (keep.count(v)) part.add_vertex(v);
      }
      for (const Edge& e : piece.edges()) {
        if (!keep.count(e.u) || !keep.count(e.v)) continue;
        if (in_sep.count(e.u) && in_sep.count(e.v)) {
          if (ci == 0 && e.is_real()) part.add_edge(e.id, e.u, e.v, e.tag);
          continue;
        }
        part.add_edge(e.id, e.u, e.v, e.tag);
      }
      add_virtual_clique(part, sep, next_virtual_);
      auto sub = solve(part);
      if (!sub) return std::nullopt;
      subs.push_back(std::move(*sub));
    }
    Sub out;
    std::vector<int> anchor;
    for (auto& s : subs) {
      int offset = static_cast<int>(out.nodes.size());
      anchor.push_back(offset + node_containing(s, sep));
      for (auto& n : s.nodes) out.nodes.push_back(std::move(n));
      for (auto l : s.links) {
        l.a += offset;
        l.b += offset;
        out.links.push_back(std::move(l));
      }
    }
    for (std::size_t i = 1; i < anchor.size(); ++i) out.links.push_back({anchor[0], anchor[i], sep});
    return out;
  }

  int width_;
  EdgeId next_virtual_;
};

}  // namespace

ComponentTree decompose(const Graph& g, int width) {
  if (g.num_vertices() > 2) {
    for (VertexId v : g.vertices()) {
      if (components_without(g, {v}).size() > 1) {
        throw PreconditionError("decompose expects a biconnected graph; " + std::to_string(v) +
                                " is an articulation point");
      }
    }
  }
  EdgeId lowest = 0;
  for (const Edge& e : g.edges()) lowest = std::min(lowest, e.id);
  Decomposer d(width, lowest - 1);
  auto sub = d.solve(g);
  if (!sub) {
    throw NotDecomposable("graph is not a <=3-clique-sum of planar and treewidth-" +
                              std::to_string(width) + " pieces",
                          d.last_failure);
  }
  ComponentTree t;
  t.nodes = std::move(sub->nodes);
  t.links = std::move(sub->links);
  t.root = 0;
  return merge_ctype_neighbors(std::move(t));
}

ComponentTree merge_ctype_neighbors(ComponentTree t) {
  while (true) {
    auto it = std::find_if(t.links.begin(), t.links.end(), [&](const TreeLink& l) {
      return t.nodes[l.a].kind == NodeKind::CType && t.nodes[l.b].kind == NodeKind::CType;
    });
    if (it == t.links.end()) return t;
    TreeLink link = *it;
    t.links.erase(it);
    int keep = std::min(link.a, link.b), gone = std::max(link.a, link.b);
    ComponentNode& a = t.nodes[keep];
    const ComponentNode& b = t.nodes[gone];

    for (VertexId v : b.graph.vertices()) a.graph.add_vertex(v);
    for (const Edge& e : b.graph.edges()) {
      if (!e.is_real() && a.graph.find_edge(e.u, e.v, EdgeTag::Virtual)) continue;
      a.graph.add_edge(e.id, e.u, e.v, e.tag);
    }
    TreeDecomp& da = *a.decomposition;
    const TreeDecomp& db = *b.decomposition;
    auto host = [&](const TreeDecomp& td) {
      for (int bi : td.bfs_order()) {
        if (td.bags[bi].contains_all(link.sep)) return bi;
      }
      throw StructuralError("no bag holds the shared set while merging c-type nodes");
    };
    int ha = host(da), hb = host(db);
    int offset = static_cast<int>(da.bags.size());
    for (const Bag& bag : db.bags) da.bags.push_back(bag);
    for (auto [x, y] : db.edges) da.edges.emplace_back(x + offset, y + offset);
    da.edges.emplace_back(ha, hb + offset);
    a.width = std::max(a.width, b.width);

    for (auto& l : t.links) {
      if (l.a == gone) l.a = keep;
      if (l.b == gone) l.b = keep;
    }
    t.nodes.erase(t.nodes.begin() + gone);
    for (auto& l : t.links) {
      if (l.a > gone) --l.a;
      if (l.b > gone) --l.b;
    }
    if (t.root == gone) t.root = keep;
    else if (t.root > gone) --t.root;
  }
}

}  // namespace nzc
