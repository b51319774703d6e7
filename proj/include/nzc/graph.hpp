#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nzc/errors.hpp"

namespace nzc {

using BigInt = boost::multiprecision::cpp_int;
using VertexId = int;
using EdgeId = int;

enum class EdgeTag { Real, Virtual };

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  EdgeTag tag = EdgeTag::Real;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool is_real() const { return tag == EdgeTag::Real; }
};

struct Bipartition {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

/// A view of an undirected edge in one of its two orientations. Forward is
/// the stored (u, v) order.
struct DirectedEdge {
  EdgeId edge = -1;
  bool reversed = false;

  DirectedEdge reverse() const { return {edge, !reversed}; }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Undirected multigraph with opaque vertex/edge ids.
///
/// Parallel edges are only accepted as one real + one virtual edge between
/// the same endpoints; self-loops are rejected.
class Graph {
 public:
  Graph() = default;

  void add_vertex(VertexId v);
  /// Adds an edge with an explicit id; both endpoints are created on demand.
  void add_edge(EdgeId id, VertexId u, VertexId v, EdgeTag tag = EdgeTag::Real);
  /// Adds an edge with the next unused id and returns it.
  EdgeId add_edge(VertexId u, VertexId v, EdgeTag tag = EdgeTag::Real);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(VertexId v) const { return vindex_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return eindex_.count(e) != 0; }
  std::size_t vertex_index(VertexId v) const;
  std::size_t edge_index(EdgeId e) const;
  const Edge& edge(EdgeId e) const { return edges_[edge_index(e)]; }

  /// Edge indices incident to the vertex with the given index.
  const std::vector<std::size_t>& incident(std::size_t vertex_index) const {
    return adj_[vertex_index];
  }
  std::vector<VertexId> neighbors(VertexId v) const;
  /// First edge (any tag) joining u and v, if any.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v, EdgeTag tag) const;

  VertexId tail(DirectedEdge d) const {
    const Edge& e = edge(d.edge);
    return d.reversed ? e.v : e.u;
  }
  VertexId head(DirectedEdge d) const {
    const Edge& e = edge(d.edge);
    return d.reversed ? e.u : e.v;
  }
  /// Orientation of `e` that leaves `from`.
  DirectedEdge leaving(EdgeId e, VertexId from) const;

  const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  void set_bipartition(Bipartition b);
  bool is_left(VertexId v) const;

  /// Real edges only, same vertex set.
  Graph real_subgraph() const;
  /// Induced on `keep` (all tags).
  Graph induced(std::span<const VertexId> keep) const;
  EdgeId next_edge_id() const { return next_edge_id_; }

  /// Throws InvalidGraph when an invariant fails.
  void validate() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, std::size_t> vindex_;
  std::unordered_map<EdgeId, std::size_t> eindex_;
  std::vector<std::vector<std::size_t>> adj_;
  std::optional<Bipartition> bipartition_;
  std::unordered_map<VertexId, bool> side_;
  EdgeId next_edge_id_ = 0;
};

/// Skew-symmetric integer weights, stored once per undirected edge in the
/// forward orientation.
class WeightAssignment {
 public:
  void set(EdgeId e, BigInt forward) { fwd_[e] = std::move(forward); }
  void set(DirectedEdge d, const BigInt& w) { fwd_[d.edge] = d.reversed ? BigInt(-w) : w; }
  bool contains(EdgeId e) const { return fwd_.count(e) != 0; }
  /// Throws IncompleteAssignment when the edge has no weight.
  BigInt at(DirectedEdge d) const;
  const BigInt& forward(EdgeId e) const;
  const std::map<EdgeId, BigInt>& entries() const { return fwd_; }
  std::size_t size() const { return fwd_.size(); }
  BigInt max_abs() const;
  /// Every edge of g carries a weight.
  bool covers(const Graph& g) const;

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;

 private:
  std::map<EdgeId, BigInt> fwd_;
};

/// A closed walk of directed edges; `is_simple_cycle` checks that no vertex
/// repeats.
struct Cycle {
  std::vector<DirectedEdge> edges;

  Cycle reversed() const;
  std::size_t size() const { return edges.size(); }
};

BigInt circulation(const Cycle& c, const WeightAssignment& w);
std::vector<VertexId> cycle_vertices(const Graph& g, const Cycle& c);
bool is_simple_cycle(const Graph& g, const Cycle& c);

/// Layered combination e -> sum_i w_i(e) * B^(k-i). Requires
/// B > n * max_i,e |w_i(e)| so that no layer can overflow into the next.
WeightAssignment combine_shifted(std::span<const WeightAssignment> layers, const BigInt& base,
                                 std::size_t n);

/// Number of bits of |x| (0 for x == 0).
std::size_t bit_length(const BigInt& x);

}  // namespace nzc
