#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "nzc/cycles.hpp"
#include "nzc/decomposer.hpp"
#include "nzc/planar.hpp"
#include "nzc/treedec.hpp"

namespace nzc {

namespace {

// Portable helpers over mt19937_64 (the std distributions are not
// specified bit-exactly across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[next() % v.size()];
  }

 private:
  std::mt19937_64 gen_;
};

struct Piece {
  Graph graph;                    // local ids 0..n-1
  std::map<VertexId, int> color;  // bipartite mode only
  bool planar_target = true;
};

Piece planar_piece(Rng& rng, const InstanceParams& p) {
  Piece piece;
  int n = rng.range(p.planar_min, p.planar_max);
  if (p.bipartite && n % 2) n = n == p.planar_max ? n - 1 : n + 1;
  for (int i = 0; i < n; ++i) {
    piece.graph.add_edge(i, (i + 1) % n);
    piece.color[i] = i % 2;
  }
  int chords = static_cast<int>(p.chord_density * n);
  for (int attempt = 0; attempt < 8 * n && chords > 0; ++attempt) {
    int a = rng.range(0, n - 1), b = rng.range(0, n - 1);
    if (a == b || piece.graph.find_edge(a, b)) continue;
    if (p.bipartite && piece.color[a] == piece.color[b]) continue;
    Graph trial = piece.graph;
    trial.add_edge(a, b);
    if (!is_planar(trial)) continue;
    piece.graph = std::move(trial);
    --chords;
  }
  return piece;
}

Piece ctype_piece(Rng& rng, const InstanceParams& p) {
  while (true) {
    Piece piece;
    piece.planar_target = false;
    int n = rng.range(p.ctype_min, p.ctype_max);
    int k = std::max(1, p.ctype_width);
    std::set<std::pair<int, int>> edges;
    std::vector<std::vector<int>> cliques;
    std::vector<int> base;
    for (int i = 0; i <= k && i < n; ++i) base.push_back(i);
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) edges.insert({base[i], base[j]});
    }
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<int> c;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (i != drop) c.push_back(base[i]);
      }
      cliques.push_back(c);
    }
    for (int v = static_cast<int>(base.size()); v < n; ++v) {
      std::vector<int> c = rng.pick(cliques);
      for (int u : c) edges.insert({u, v});
      for (std::size_t drop = 0; drop < c.size(); ++drop) {
        std::vector<int> d;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i != drop) d.push_back(c[i]);
        }
        d.push_back(v);
        std::sort(d.begin(), d.end());
        cliques.push_back(d);
      }
    }
    if (p.bipartite) {
      for (int v = 0; v < n; ++v) piece.color[v] = static_cast<int>(rng.next() & 1);
    }
    for (auto [a, b] : edges) {
      if (p.bipartite && piece.color[a] == piece.color[b]) continue;
      if (!p.bipartite && rng.chance(0.15)) continue;
      piece.graph.add_edge(a, b);
    }
    for (int v = 0; v < n; ++v) piece.graph.add_vertex(v);
    if (piece.graph.num_vertices() == static_cast<std::size_t>(n) && is_connected(piece.graph) &&
        split_biconnected(piece.graph).size() == 1) {
      return piece;
    }
  }
}

bool fits_class(const Graph& g, bool planar_target, int width) {
  if (planar_target) return is_planar(g);
  return g.num_vertices() <= kMaxExactTreewidthVertices && exact_treewidth(g) <= width;
}

}  // namespace

Instance generate_instance(std::uint64_t seed, const InstanceParams& params) {
  Rng rng(seed);
  ComponentTree tree;
  std::vector<bool> planar_target;
  std::map<VertexId, int> color;  // global colours (bipartite)
  VertexId next_vertex = 0;
  EdgeId next_real = 0;
  EdgeId next_virtual = -1;
  int total = 0;

  for (int pi = 0; pi < params.pieces; ++pi) {
    bool want_c = rng.chance(params.ctype_probability);
    Piece piece = want_c ? ctype_piece(rng, params) : planar_piece(rng, params);
    int n = static_cast<int>(piece.graph.num_vertices());

    if (pi == 0) {
      for (int attempt = 0; n > params.max_vertices && attempt < 40; ++attempt) {
        piece = planar_piece(rng, params);
        n = static_cast<int>(piece.graph.num_vertices());
      }
      if (n > params.max_vertices) {
        throw PreconditionError("max_vertices " + std::to_string(params.max_vertices) +
                                " is below every piece size");
      }
      ComponentNode node;
      for (VertexId v : piece.graph.vertices()) {
        node.graph.add_vertex(next_vertex + v);
        color[next_vertex + v] = piece.color.count(v) ? piece.color[v] : 0;
      }
      for (const Edge& e : piece.graph.edges()) {
        node.graph.add_edge(next_real++, next_vertex + e.u, next_vertex + e.v);
      }
      next_vertex += n;
      total = n;
      tree.nodes.push_back(std::move(node));
      planar_target.push_back(piece.planar_target);
      continue;
    }

    // choose the sum: attach node, clique sizes, vertex sets
    bool attached = false;
    for (int attempt = 0; attempt < 40 && !attached; ++attempt) {
      int s = rng.range(1, params.max_sum_size);
      if (total + n - s > params.max_vertices) continue;
      int target = rng.range(0, static_cast<int>(tree.nodes.size()) - 1);
      const Graph& tg = tree.nodes[target].graph;
      if (static_cast<int>(tg.num_vertices()) < s || n < s) continue;
      std::vector<VertexId> tv = tg.vertices(), pv = piece.graph.vertices();
      std::shuffle(tv.begin(), tv.end(), std::mt19937_64(rng.next()));
      std::shuffle(pv.begin(), pv.end(), std::mt19937_64(rng.next()));
      std::vector<VertexId> in_tree(tv.begin(), tv.begin() + s);
      std::vector<VertexId> in_piece(pv.begin(), pv.begin() + s);
      if (params.bipartite) {
        // colour patterns must agree up to flipping the piece
        bool same = true, flipped = true;
        for (int i = 0; i < s; ++i) {
          int ct = color[in_tree[i]], cp = piece.color[in_piece[i]];
          same = same && ct == cp;
          flipped = flipped && ct != cp;
        }
        if (!same && !flipped) continue;
        if (flipped) {
          for (auto& [v, c] : piece.color) c ^= 1;
        }
      }
      // both sides must keep their class with the virtual clique added
      Graph tg_trial = tg;
      EdgeId vid = next_virtual;
      std::vector<VertexId> tsorted = in_tree;
      std::sort(tsorted.begin(), tsorted.end());
      add_virtual_clique(tg_trial, tsorted, vid);
      if (!fits_class(tg_trial, planar_target[target], params.ctype_width)) continue;

      std::map<VertexId, VertexId> rename;
      for (int i = 0; i < s; ++i) rename[in_piece[i]] = in_tree[i];
      VertexId fresh = next_vertex;
      for (VertexId v : piece.graph.vertices()) {
        if (!rename.count(v)) rename[v] = fresh++;
      }
      ComponentNode node;
      for (VertexId v : piece.graph.vertices()) node.graph.add_vertex(rename[v]);
      std::set<std::pair<VertexId, VertexId>> clique_pairs;
      for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) clique_pairs.insert(std::minmax(in_tree[i], in_tree[j]));
      }
      // real edges of the piece outside the clique
      std::vector<std::pair<VertexId, VertexId>> piece_edges;
      for (const Edge& e : piece.graph.edges()) {
        auto key = std::minmax(rename[e.u], rename[e.v]);
        if (clique_pairs.count(key)) continue;
        piece_edges.push_back(key);
      }
      Graph trial_piece;
      for (VertexId v : piece.graph.vertices()) trial_piece.add_vertex(rename[v]);
      for (auto [a, b] : piece_edges) trial_piece.add_edge(a, b);
      EdgeId vid2 = -1;
      add_virtual_clique(trial_piece, tsorted, vid2);
      if (!fits_class(trial_piece, piece.planar_target, params.ctype_width)) continue;

      // commit
      next_virtual = vid;
      tree.nodes[target].graph = std::move(tg_trial);
      for (auto [a, b] : piece_edges) node.graph.add_edge(next_real++, a, b);
      for (auto [a, b] : clique_pairs) {
        Graph whole = tree.reassemble();
        bool real_already = whole.find_edge(a, b).has_value();
        bool colours_ok = !params.bipartite || color[a] != color[b];
        if (!real_already && colours_ok && rng.chance(params.keep_clique_edge)) {
          node.graph.add_edge(next_real++, a, b);
        }
      }
      add_virtual_clique(node.graph, tsorted, next_virtual);
      for (VertexId v : piece.graph.vertices()) {
        VertexId g = rename[v];
        if (!color.count(g)) color[g] = piece.color.count(v) ? piece.color[v] : 0;
      }
      next_vertex = fresh;
      total += n - s;
      tree.links.push_back({target, static_cast<int>(tree.nodes.size()), tsorted});
      tree.nodes.push_back(std::move(node));
      planar_target.push_back(piece.planar_target);
      attached = true;
    }
  }

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    auto& node = tree.nodes[i];
    Classification c = classify(node.graph, params.ctype_width);
    if (c == Classification::PType) {
      node.kind = NodeKind::PType;
    } else {
      node.kind = NodeKind::CType;
      node.decomposition = tree_decompose(node.graph, params.ctype_width);
      node.width = node.decomposition->width();
    }
  }
  tree.root = 0;

  Instance inst;
  inst.graph = tree.reassemble();
  inst.tree = std::move(tree);
  if (params.bipartite) {
    Bipartition bp;
    for (VertexId v : inst.graph.vertices()) (color[v] ? bp.right : bp.left).push_back(v);
    inst.graph.set_bipartition(std::move(bp));
  }
  return inst;
}

}  // namespace nzc
