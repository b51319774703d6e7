#include "nzc/pullback.hpp"

#include <algorithm>

#include "nzc/decomposer.hpp"
#include "nzc/tprime.hpp"

namespace nzc {

std::vector<DirectedEdge> PullbackMap::path(DirectedEdge d) const {
  std::vector<DirectedEdge> p = forward.at(d.edge);
  if (d.reversed) {
    std::reverse(p.begin(), p.end());
    for (auto& x : p) x = x.reverse();
  }
  return p;
}

std::vector<DirectedEdge> PullbackMap::walk(const Cycle& c) const {
  std::vector<DirectedEdge> out;
  for (const DirectedEdge& d : c.edges) {
    auto p = path(d);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

namespace {

int highest_bag(const GPrime& gp, VertexId v) {
  int best = -1;
  for (std::size_t b = 0; b < gp.tprime.bags.size(); ++b) {
    if (!gp.tprime.bags[b].contains(v)) continue;
    if (best < 0 || gp.depth[b] < gp.depth[best]) best = static_cast<int>(b);
  }
  return best;
}

/// Copy edges carrying v from bag `top` down to its descendant `low`.
std::vector<DirectedEdge> down_chain(const GPrime& gp, VertexId v, int top, int low) {
  std::vector<DirectedEdge> up;  // from low towards top
  for (int b = low; b != top; b = gp.parent[b]) {
    if (b < 0) throw StructuralError("host bag is not below the highest bag");
    auto e = gp.graph.find_edge(gp.lift.at({v, b}), gp.lift.at({v, gp.parent[b]}));
    if (!e) throw StructuralError("missing copy edge for vertex " + std::to_string(v));
    up.push_back({*e, false});  // stored child -> parent
  }
  std::reverse(up.begin(), up.end());
  for (auto& d : up) d = d.reverse();
  return up;
}

}  // namespace

PullbackMap build_pullback_map(const Graph& g, const GPrime& gp) {
  PullbackMap pm;
  std::map<VertexId, int> top;
  for (VertexId v : g.vertices()) top[v] = highest_bag(gp, v);
  for (const Edge& e : g.edges()) {
    if (!e.is_real()) continue;
    EdgeId intra = gp.intra_of.at(e.id);
    int host = gp.association.at(intra);
    int b1 = top.at(e.u), b2 = top.at(e.v);
    if (host != b1 && host != b2) {
      throw StructuralError("highest bags of edge " + std::to_string(e.id) +
                            " are not comparable");
    }
    std::vector<DirectedEdge> p = down_chain(gp, e.u, b1, host);
    p.push_back({intra, false});
    auto back = down_chain(gp, e.v, b2, host);
    std::reverse(back.begin(), back.end());
    for (auto& d : back) p.push_back(d.reverse());
    pm.forward[e.id] = std::move(p);
  }
  return pm;
}

WeightAssignment pull_weights(const WeightAssignment& wprime, const PullbackMap& pm,
                              const Graph& g) {
  WeightAssignment w;
  for (const Edge& e : g.edges()) {
    if (!e.is_real()) continue;
    BigInt sum = 0;
    for (const DirectedEdge& d : pm.forward.at(e.id)) sum += wprime.at(d);
    w.set(e.id, sum);
  }
  return w;
}

Cycle cancel_reverse_pairs(const Graph& gprime, const std::vector<DirectedEdge>& walk) {
  std::map<EdgeId, int> net;  // forward uses minus reverse uses
  for (const DirectedEdge& d : walk) net[d.edge] += d.reversed ? -1 : 1;
  std::vector<DirectedEdge> rest;
  for (const auto& [e, k] : net) {
    if (k > 1 || k < -1) throw StructuralError("residue uses edge " + std::to_string(e) + " twice");
    if (k != 0) rest.push_back({e, k < 0});
  }
  if (rest.empty()) throw StructuralError("residue is empty");

  std::map<VertexId, DirectedEdge> out_of;
  for (const DirectedEdge& d : rest) {
    if (!out_of.emplace(gprime.tail(d), d).second) {
      throw StructuralError("residue is not a simple cycle");
    }
  }
  Cycle c;
  DirectedEdge d = rest.front();
  for (std::size_t i = 0; i < rest.size(); ++i) {
    c.edges.push_back(d);
    auto it = out_of.find(gprime.head(d));
    if (it == out_of.end()) throw StructuralError("residue is not closed");
    d = it->second;
  }
  if (d != rest.front() || !is_simple_cycle(gprime, c)) {
    throw StructuralError("residue is not a single simple cycle");
  }
  return c;
}

BlockRun run_block(const Graph& block, ComponentTree tree, const PipelineOptions& opt) {
  BlockRun r;
  r.block = block;
  r.decomposed = std::move(tree);
  auto norm = normalize(r.decomposed, opt.repair_facial);
  r.normalized = std::move(norm.tree);
  r.gadgets = std::move(norm.map);
  if (auto why = check_component_tree(r.normalized); !why.empty()) {
    throw StructuralError("normalized tree invalid: " + why);
  }
  r.graph = r.normalized.reassemble();
  r.tprime = build_tprime(r.normalized);
  r.gprime = build_gprime(r.graph, r.tprime);
  r.aux = build_aux_tree(r.tprime);
  r.wprime = assemble_wprime(r.gprime, r.aux, opt.assemble);
  r.pullback = build_pullback_map(r.graph, r.gprime);
  r.w_graph = pull_weights(r.wprime.combined, r.pullback, r.graph);
  r.w_block = pull_circulation_through_gadget(r.w_graph, r.gadgets, block);
  return r;
}

PipelineResult end_to_end(const Graph& g0, const PipelineOptions& opt) {
  PipelineResult out;
  for (const Edge& e : g0.edges()) out.weights.set(e.id, BigInt(0));
  for (const Graph& block : split_biconnected(g0)) {
    if (block.num_edges() < 2) continue;
    ComponentTree t = opt.tree ? *opt.tree : decompose(block, opt.width);
    BlockRun r = run_block(block, std::move(t), opt);
    for (const auto& [e, w] : r.w_block.entries()) out.weights.set(e, w);
    out.K = std::max(out.K, r.wprime.params.K);
    out.B_shift = std::max(out.B_shift, r.wprime.params.B_shift);
    out.m = std::max(out.m, r.wprime.params.m);
    out.blocks.push_back(std::move(r));
  }
  out.max_bits = bit_length(out.weights.max_abs());
  return out;
}

}  // namespace nzc
