#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nzc/auxtree.hpp"
#include "nzc/gprime.hpp"
#include "nzc/graph.hpp"
#include "nzc/planar.hpp"

namespace nzc {

struct WeightParams {
  BigInt K;
  BigInt B_shift;
  int m = 0;  // most edges associated with one c-type bag
};

/// m from the associations, K = max(2^(m+2), 7) + 1. B_shift is left 0.
WeightParams choose_K(const GPrime& gp);
BigInt smallest_K(int m);

/// The lifted edges hosted at a p-type bag, plus one star vertex per
/// separating set of the bag joined to the set's copies. Star edges carry
/// ids above every lifted edge id.
struct StarGraph {
  Graph graph;
  std::map<std::vector<VertexId>, VertexId> star_of;  // set (original ids) -> star vertex
  std::set<EdgeId> star_edges;
};
StarGraph build_star_graph(const GPrime& gp, int bag);

/// Skew-symmetric edge weights whose boundary sum on every bounded face
/// equals its face weight. Edges of a spanning forest that contains all of
/// `tree_first` (when acyclic) get 0.
WeightAssignment faces_to_edges(const Graph& g, const PlanarEmbedding& emb,
                                const std::vector<BigInt>& face_weight,
                                const std::set<EdgeId>& tree_first = {});

/// Unit weight on every bounded face: each simple cycle's circulation is
/// plus or minus the number of faces it encloses.
WeightAssignment planar_local_weights(const Graph& g, const PlanarEmbedding& emb);

/// Face weights of p-type bag `bag`: every bounded face at the star of the
/// set through which an auxiliary child subtree T_c hangs gets
/// 2 * K^(h(bag) - 1) * l(T_c), summed over such sets.
std::vector<BigInt> planar_cross_weights(const StarGraph& sg, const PlanarEmbedding& emb,
                                         const AuxTree& aux, int bag, const BigInt& K);

/// e_j -> 2^j * K^(h - 1) * l for j = 1..k in the given order.
WeightAssignment csize_weights(const std::vector<EdgeId>& edges, int h, long long l,
                               const BigInt& K, int m);

/// Edges associated with a bag, sorted by id.
std::vector<EdgeId> associated_edges(const GPrime& gp, int bag);

struct WPrime {
  WeightAssignment cross;
  WeightAssignment local;
  WeightAssignment combined;  // B_shift * cross + local
  WeightParams params;
  std::size_t max_bits = 0;
  /// Most faces any attachment star lies on.
  std::size_t max_star_faces = 0;
  int retries = 0;
};

struct AssembleOptions {
  /// Returns a zero-circulation witness, if any, for the combined weights.
  std::function<std::optional<Cycle>(const WeightAssignment&)> verify;
  int max_retries = 3;
};

/// Throws VerificationFailure when the hook still finds a witness after
/// doubling K and B_shift `max_retries` times.
WPrime assemble_wprime(const GPrime& gp, const AuxTree& aux, const AssembleOptions& opt = {});

}  // namespace nzc
