#include "nzc/weights.hpp"

#include <algorithm>
#include <numeric>

namespace nzc {

namespace {

BigInt power(const BigInt& base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

bool is_ctype(const Bag& b) { return b.origin.kind == BagOrigin::Kind::CType; }

}  // namespace

BigInt smallest_K(int m) {
  BigInt two_pow = BigInt(1) << (m + 2);
  return (two_pow > 7 ? two_pow : BigInt(7)) + 1;
}

std::vector<EdgeId> associated_edges(const GPrime& gp, int bag) {
  std::vector<EdgeId> out;
  for (const auto& [e, b] : gp.association) {
    if (b == bag) out.push_back(e);
  }
  return out;  // std::map iteration is already sorted by id
}

WeightParams choose_K(const GPrime& gp) {
  WeightParams p;
  std::vector<int> count(gp.tprime.bags.size(), 0);
  for (const auto& [e, b] : gp.association) ++count[b];
  for (std::size_t b = 0; b < gp.tprime.bags.size(); ++b) {
    if (is_ctype(gp.tprime.bags[b])) p.m = std::max(p.m, count[b]);
  }
  p.K = smallest_K(p.m);
  return p;
}

StarGraph build_star_graph(const GPrime& gp, int bag) {
  StarGraph sg;
  const Bag& b = gp.tprime.bags[bag];
  for (VertexId v : b.vertices) sg.graph.add_vertex(gp.lift.at({v, bag}));
  EdgeId next_edge = 0;
  VertexId next_vertex = 0;
  for (const auto& [e, host] : gp.association) next_edge = std::max(next_edge, e + 1);
  for (VertexId v : gp.graph.vertices()) next_vertex = std::max(next_vertex, v + 1);
  for (const auto& [e, host] : gp.association) {
    if (host != bag || gp.is_copy(e)) continue;
    const Edge& edge = gp.graph.edge(e);
    sg.graph.add_edge(e, edge.u, edge.v);
  }
  for (const auto& sep : b.separating_sets) {
    VertexId x = next_vertex++;
    sg.star_of[sep] = x;
    for (VertexId v : sep) {
      sg.graph.add_edge(next_edge, x, gp.lift.at({v, bag}));
      sg.star_edges.insert(next_edge++);
    }
  }
  return sg;
}

WeightAssignment faces_to_edges(const Graph& g, const PlanarEmbedding& emb,
                                const std::vector<BigInt>& face_weight,
                                const std::set<EdgeId>& tree_first) {
  WeightAssignment w;
  for (const Edge& e : g.edges()) w.set(e.id, BigInt(0));

  UnionFind uf(g.num_vertices());
  std::set<EdgeId> tree;
  auto offer = [&](const Edge& e) {
    if (uf.unite(g.vertex_index(e.u), g.vertex_index(e.v))) tree.insert(e.id);
  };
  for (const Edge& e : g.edges()) {
    if (tree_first.count(e.id)) offer(e);
  }
  for (const Edge& e : g.edges()) {
    if (!tree_first.count(e.id)) offer(e);
  }

  // dual forest over the non-tree edges, rooted at each outer face
  const std::size_t nf = emb.faces.size();
  std::vector<std::vector<std::pair<std::size_t, DirectedEdge>>> dual(nf);
  for (const Edge& e : g.edges()) {
    if (tree.count(e.id)) continue;
    DirectedEdge d{e.id, false};
    std::size_t f1 = emb.face_of.at(d), f2 = emb.face_of.at(d.reverse());
    dual[f1].push_back({f2, d});
    dual[f2].push_back({f1, d.reverse()});
  }
  std::vector<int> parent_face(nf, -1);
  std::vector<DirectedEdge> parent_edge(nf);  // orientation lying on the child face
  std::vector<char> seen(nf, 0);
  std::vector<std::size_t> order;
  for (std::size_t root : emb.outer_faces) {
    seen[root] = 1;
    order.push_back(root);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      std::size_t f = order[i];
      for (const auto& [g2, d] : dual[f]) {
        if (seen[g2]) continue;
        seen[g2] = 1;
        parent_face[g2] = static_cast<int>(f);
        parent_edge[g2] = d.reverse();
        order.push_back(g2);
      }
    }
  }
  if (order.size() != nf) throw StructuralError("dual of the non-tree edges is not a forest");

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t f = *it;
    if (parent_face[f] < 0) continue;
    BigInt rest = 0;
    for (const DirectedEdge& d : emb.faces[f]) {
      if (d != parent_edge[f]) rest += w.at(d);
    }
    w.set(parent_edge[f], face_weight[f] - rest);
  }
  return w;
}

WeightAssignment planar_local_weights(const Graph& g, const PlanarEmbedding& emb) {
  std::vector<BigInt> fw(emb.faces.size(), BigInt(1));
  for (std::size_t f : emb.outer_faces) fw[f] = 0;
  return faces_to_edges(g, emb, fw);
}

std::vector<BigInt> planar_cross_weights(const StarGraph& sg, const PlanarEmbedding& emb,
                                         const AuxTree& aux, int bag, const BigInt& K) {
  std::vector<BigInt> fw(emb.faces.size(), BigInt(0));
  const BigInt scale = 2 * power(K, aux.height[bag] - 1);
  for (int c : aux.children[bag]) {
    auto it = sg.star_of.find(aux.attached_at[c]);
    if (it == sg.star_of.end()) {
      throw StructuralError("auxiliary child of bag " + std::to_string(bag) +
                            " does not hang on a separating set");
    }
    for (std::size_t f : emb.faces_at(sg.graph, it->second)) fw[f] += scale * aux.leaves[c];
  }
  for (std::size_t f : emb.outer_faces) fw[f] = 0;
  return fw;
}

WeightAssignment csize_weights(const std::vector<EdgeId>& edges, int h, long long l,
                               const BigInt& K, int m) {
  if (static_cast<int>(edges.size()) > m) {
    throw PreconditionError("bag has more associated edges than m");
  }
  WeightAssignment w;
  const BigInt scale = power(K, h - 1) * l;
  for (std::size_t j = 0; j < edges.size(); ++j) w.set(edges[j], (BigInt(1) << (j + 1)) * scale);
  return w;
}

namespace {

struct Layers {
  WeightAssignment cross;
  WeightAssignment local;
  std::size_t max_star_faces = 0;
};

Layers build_layers(const GPrime& gp, const AuxTree& aux, const BigInt& K, int m) {
  Layers out;
  for (const Edge& e : gp.graph.edges()) {
    out.cross.set(e.id, BigInt(0));
    out.local.set(e.id, BigInt(0));
  }
  for (std::size_t b = 0; b < gp.tprime.bags.size(); ++b) {
    const int bag = static_cast<int>(b);
    if (is_ctype(gp.tprime.bags[b])) {
      auto w = csize_weights(associated_edges(gp, bag), aux.height[b], aux.leaves[b], K, m);
      for (const auto& [e, x] : w.entries()) out.cross.set(e, x);
      continue;
    }
    StarGraph sg = build_star_graph(gp, bag);
    auto emb = embed(sg.graph);
    if (!emb) throw StructuralError("p-type bag " + std::to_string(b) + " is not planar with stars");
    for (const auto& [sep, x] : sg.star_of) {
      out.max_star_faces = std::max(out.max_star_faces, emb->faces_at(sg.graph, x).size());
    }
    auto cross = faces_to_edges(sg.graph, *emb,
                                planar_cross_weights(sg, *emb, aux, bag, K), sg.star_edges);
    auto local = planar_local_weights(sg.graph, *emb);
    for (const Edge& e : sg.graph.edges()) {
      if (sg.star_edges.count(e.id)) {
        if (cross.forward(e.id) != 0) throw StructuralError("star edge with nonzero cross weight");
        continue;
      }
      out.cross.set(e.id, cross.forward(e.id));
      out.local.set(e.id, local.forward(e.id));
    }
  }
  return out;
}

}  // namespace

WPrime assemble_wprime(const GPrime& gp, const AuxTree& aux, const AssembleOptions& opt) {
  WPrime out;
  out.params = choose_K(gp);
  Layers layers = build_layers(gp, aux, out.params.K, out.params.m);
  BigInt total = 0;
  for (const auto& [e, x] : layers.local.entries()) total += abs(x);
  BigInt n_max = BigInt(gp.graph.num_vertices()) * layers.local.max_abs();
  out.params.B_shift = (total > n_max ? total : n_max) + 1;
  out.max_star_faces = layers.max_star_faces;

  for (int attempt = 0;; ++attempt) {
    out.cross = layers.cross;
    out.local = layers.local;
    out.combined = WeightAssignment();
    for (const auto& [e, x] : layers.cross.entries()) {
      out.combined.set(e, out.params.B_shift * x + layers.local.forward(e));
    }
    out.max_bits = bit_length(out.combined.max_abs());
    out.retries = attempt;
    if (!opt.verify) return out;
    auto witness = opt.verify(out.combined);
    if (!witness) return out;
    if (attempt >= opt.max_retries) {
      std::string cyc;
      for (const auto& d : witness->edges) {
        cyc += (cyc.empty() ? "" : ",") + std::string(d.reversed ? "-" : "") + std::to_string(d.edge);
      }
      throw VerificationFailure("zero-circulation cycle in G' after retries", "[" + cyc + "]");
    }
    out.params.K *= 2;
    out.params.B_shift *= 2;
    layers = build_layers(gp, aux, out.params.K, out.params.m);
  }
}

}  // namespace nzc
