#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nzc/cycles.hpp"
#include "nzc/graph.hpp"

namespace nzc {

/// Undirected weights, one per edge.
using EdgeWeights = std::map<EdgeId, BigInt>;
/// Edge ids, sorted ascending.
using Matching = std::vector<EdgeId>;

/// The stored bipartition, or a two-colouring found by BFS (smallest vertex
/// of each component on the left). Throws PreconditionError on an odd cycle.
Bipartition bipartition_of(const Graph& g);

/// w_und(e) = w(e oriented left -> right).
EdgeWeights matching_weights(const Graph& g, const WeightAssignment& w);

BigInt matching_weight(const Matching& m, const EdgeWeights& w);

/// Every perfect matching. Throws CapExceeded past `cap`.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g,
                                                  std::size_t cap = kDefaultCycleCap);
/// Every matching of maximum cardinality. Throws CapExceeded past `cap`
/// matchings of any size.
std::vector<Matching> enumerate_maximum_matchings(const Graph& g,
                                                  std::size_t cap = kDefaultCycleCap);

/// Minimum weight among matchings of maximum cardinality (successive
/// shortest paths, Bellman-Ford on exact integers). Edges listed in
/// `banned` are not used.
struct MinMatching {
  Matching matching;
  BigInt weight;
};
MinMatching min_weight_maximum_matching(const Graph& g, const EdgeWeights& w,
                                        const std::vector<EdgeId>& banned = {});

struct TieReport {
  bool unique = true;
  Matching best;
  BigInt weight;
  Matching other;  // a second optimum when !unique
};

/// Minimum weight maximum-cardinality matching with a uniqueness audit: it
/// is unique iff dropping any of its edges either shrinks the maximum or
/// makes the optimum strictly heavier.
TieReport extract_min_max_matching(const Graph& g, const EdgeWeights& w);

/// The unique minimum weight perfect matching, or none when g has no
/// perfect matching. Throws VerificationFailure carrying both matchings on
/// a tie.
std::optional<Matching> extract_min_pm(const Graph& g, const EdgeWeights& w);

/// Exhaustive audit: PM count and whether the minimum is attained once.
struct PmAudit {
  std::size_t perfect_matchings = 0;
  std::size_t at_minimum = 0;
  BigInt minimum;
  std::vector<Matching> tied;  // the minimisers when more than one
};
PmAudit audit_pm_isolation(const Graph& g, const EdgeWeights& w,
                           std::size_t cap = kDefaultCycleCap);

struct PathTie {
  VertexId s;
  VertexId t;
  std::vector<DirectedEdge> first;
  std::vector<DirectedEdge> second;
};

struct PathReport {
  std::size_t pairs = 0;
  std::size_t paths = 0;
  std::vector<PathTie> ties;
  bool unique() const { return ties.empty(); }
};

/// M = n * max|w| + 1, the least valid shift.
BigInt path_shift(const Graph& g, const WeightAssignment& w);

/// With w*(d) = M + w(d) on both orientations of every edge, checks for
/// every ordered pair in one component that exactly one simple path attains
/// the minimum w*. Throws PreconditionError when M <= n * max|w|.
PathReport unique_shortest_paths(const Graph& g, const WeightAssignment& w, const BigInt& M,
                                 std::size_t cap = kDefaultCycleCap);

}  // namespace nzc
