#include "nzc/graph.hpp"

#include <algorithm>
#include <set>

namespace nzc {

void Graph::add_vertex(VertexId v) {
  if (vindex_.count(v)) return;
  vindex_.emplace(v, vertices_.size());
  vertices_.push_back(v);
  adj_.emplace_back();
}

void Graph::add_edge(EdgeId id, VertexId u, VertexId v, EdgeTag tag) {
  if (u == v) throw InvalidGraph("self-loop on vertex " + std::to_string(u));
  if (eindex_.count(id)) throw InvalidGraph("duplicate edge id " + std::to_string(id));
  for (std::size_t ei : has_vertex(u) ? adj_[vertex_index(u)] : std::vector<std::size_t>{}) {
    const Edge& other = edges_[ei];
    if (other.other(u) == v && other.tag == tag) {
      throw InvalidGraph("parallel edges of the same tag between " + std::to_string(u) + " and " +
                         std::to_string(v));
    }
  }
  add_vertex(u);
  add_vertex(v);
  eindex_.emplace(id, edges_.size());
  adj_[vindex_.at(u)].push_back(edges_.size());
  adj_[vindex_.at(v)].push_back(edges_.size());
  edges_.push_back({id, u, v, tag});
  next_edge_id_ = std::max(next_edge_id_, id + 1);
}

EdgeId Graph::add_edge(VertexId u, VertexId v, EdgeTag tag) {
  EdgeId id = next_edge_id_;
  add_edge(id, u, v, tag);
  return id;
}

std::size_t Graph::vertex_index(VertexId v) const {
  auto it = vindex_.find(v);
  if (it == vindex_.end()) throw InvalidGraph("unknown vertex " + std::to_string(v));
  return it->second;
}

std::size_t Graph::edge_index(EdgeId e) const {
  auto it = eindex_.find(e);
  if (it == eindex_.end()) throw InvalidGraph("unknown edge " + std::to_string(e));
  return it->second;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (std::size_t ei : adj_[vertex_index(v)]) out.push_back(edges_[ei].other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u)) return std::nullopt;
  for (std::size_t ei : adj_[vertex_index(u)]) {
    if (edges_[ei].other(u) == v) return edges_[ei].id;
  }
  return std::nullopt;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v, EdgeTag tag) const {
  if (!has_vertex(u)) return std::nullopt;
  for (std::size_t ei : adj_[vertex_index(u)]) {
    if (edges_[ei].other(u) == v && edges_[ei].tag == tag) return edges_[ei].id;
  }
  return std::nullopt;
}

DirectedEdge Graph::leaving(EdgeId e, VertexId from) const {
  const Edge& ed = edge(e);
  if (ed.u == from) return {e, false};
  if (ed.v == from) return {e, true};
  throw InvalidGraph("edge " + std::to_string(e) + " does not touch " + std::to_string(from));
}

void Graph::set_bipartition(Bipartition b) {
  side_.clear();
  for (VertexId v : b.left) side_[v] = true;
  for (VertexId v : b.right) side_[v] = false;
  bipartition_ = std::move(b);
}

bool Graph::is_left(VertexId v) const {
  auto it = side_.find(v);
  if (it == side_.end()) throw InvalidGraph("vertex " + std::to_string(v) + " not in bipartition");
  return it->second;
}

Graph Graph::real_subgraph() const {
  Graph g;
  for (VertexId v : vertices_) g.add_vertex(v);
  for (const Edge& e : edges_) {
    if (e.is_real()) g.add_edge(e.id, e.u, e.v, e.tag);
  }
  if (bipartition_) g.set_bipartition(*bipartition_);
  return g;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::set<VertexId> k(keep.begin(), keep.end());
  Graph g;
  for (VertexId v : vertices_) {
    if (k.count(v)) g.add_vertex(v);
  }
  for (const Edge& e : edges_) {
    if (k.count(e.u) && k.count(e.v)) g.add_edge(e.id, e.u, e.v, e.tag);
  }
  return g;
}

void Graph::validate() const {
  std::map<std::pair<VertexId, VertexId>, std::pair<int, int>> pairs;
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InvalidGraph("self-loop");
    auto key = std::minmax(e.u, e.v);
    auto& [real, virt] = pairs[{key.first, key.second}];
    (e.is_real() ? real : virt) += 1;
    if (real > 1 || virt > 1) throw InvalidGraph("disallowed parallel edges");
  }
  if (bipartition_) {
    std::set<VertexId> seen;
    for (VertexId v : bipartition_->left) seen.insert(v);
    for (VertexId v : bipartition_->right) {
      if (!seen.insert(v).second) throw InvalidGraph("vertex on both sides of bipartition");
    }
    for (VertexId v : vertices_) {
      if (!seen.count(v)) throw InvalidGraph("vertex missing from bipartition");
    }
    for (const Edge& e : edges_) {
      if (is_left(e.u) == is_left(e.v)) {
        throw InvalidGraph("edge " + std::to_string(e.id) + " does not cross the bipartition");
      }
    }
  }
}

BigInt WeightAssignment::at(DirectedEdge d) const {
  auto it = fwd_.find(d.edge);
  if (it == fwd_.end()) {
    throw IncompleteAssignment("no weight for edge " + std::to_string(d.edge));
  }
  return d.reversed ? BigInt(-it->second) : it->second;
}

const BigInt& WeightAssignment::forward(EdgeId e) const {
  auto it = fwd_.find(e);
  if (it == fwd_.end()) throw IncompleteAssignment("no weight for edge " + std::to_string(e));
  return it->second;
}

BigInt WeightAssignment::max_abs() const {
  BigInt m = 0;
  for (const auto& [e, w] : fwd_) m = std::max(m, BigInt(abs(w)));
  return m;
}

bool WeightAssignment::covers(const Graph& g) const {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return contains(e.id); });
}

Cycle Cycle::reversed() const {
  Cycle r;
  r.edges.reserve(edges.size());
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) r.edges.push_back(it->reverse());
  return r;
}

BigInt circulation(const Cycle& c, const WeightAssignment& w) {
  BigInt sum = 0;
  for (const DirectedEdge& d : c.edges) sum += w.at(d);
  return sum;
}

std::vector<VertexId> cycle_vertices(const Graph& g, const Cycle& c) {
  std::vector<VertexId> out;
  out.reserve(c.edges.size());
  for (const DirectedEdge& d : c.edges) out.push_back(g.tail(d));
  return out;
}

bool is_simple_cycle(const Graph& g, const Cycle& c) {
  if (c.edges.size() < 2) return false;
  std::set<VertexId> seen;
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const DirectedEdge& d = c.edges[i];
    if (!g.has_edge(d.edge)) return false;
    if (!used.insert(d.edge).second) return false;
    if (!seen.insert(g.tail(d)).second) return false;
    const DirectedEdge& next = c.edges[(i + 1) % c.edges.size()];
    if (g.head(d) != g.tail(next)) return false;
  }
  return true;
}

WeightAssignment combine_shifted(std::span<const WeightAssignment> layers, const BigInt& base,
                                 std::size_t n) {
  if (layers.empty()) return {};
  BigInt max_abs = 0;
  for (const auto& l : layers) max_abs = std::max(max_abs, l.max_abs());
  if (layers.size() > 1 && base <= BigInt(n) * max_abs) {
    throw PreconditionError("shift base too small: need B > n * max|w_i(e)| = " +
                            (BigInt(n) * max_abs).str());
  }
  WeightAssignment out;
  for (const auto& [e, w0] : layers.front().entries()) {
    BigInt acc = 0;
    for (const auto& l : layers) acc = acc * base + l.forward(e);
    out.set(e, acc);
  }
  return out;
}

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(BigInt(abs(x))) + 1;
}

}  // namespace nzc
