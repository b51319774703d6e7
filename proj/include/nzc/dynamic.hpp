#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "nzc/graph.hpp"
#include "nzc/isolation.hpp"

namespace nzc {

/// Inserted edges are "real" and numbered e_1..e_N in the given order; all
/// other edges are "fictitious" and keep their old weight.
struct EdgePartition {
  std::vector<EdgeId> fictitious;
  std::vector<EdgeId> real;

  std::set<EdgeId> real_set() const { return {real.begin(), real.end()}; }
};

/// Throws PreconditionError when an inserted id is not an edge of g.
EdgePartition partition_edges(const Graph& g, const std::vector<EdgeId>& inserted);

/// w0(e_j) = 2^j on real edges, 0 on fictitious ones (forward orientation).
WeightAssignment base_weights(const Graph& g, const EdgePartition& part);

/// Number of stages: ceil(log2 N), at least 1. Zero when N == 0.
int stage_count(std::size_t N);

/// Odd primes below 2^bits.
std::vector<std::uint64_t> odd_primes_below(int bits);

/// Default prime bit budget for N insertions: bit_length(4N) + 1.
int default_prime_bits(std::size_t N);

struct Candidate {
  std::vector<std::uint64_t> primes;  // p_1..p_l
  std::vector<EdgeWeights> stages;    // W_1..W_l on real edges
  BigInt B;                           // stage shift
  BigInt B_final;                     // shift of W_l above the old weights
  EdgeWeights weights;                // B_final * W_l + w_old
};

/// All prime vectors (p_1..p_l) over the configured primes, enumerated
/// lexicographically and built on demand.
class CandidateFamily {
 public:
  CandidateFamily(const Graph& g, EdgePartition part, EdgeWeights w_old, int prime_bits = 0);

  std::size_t size() const;
  int stages() const { return stages_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const EdgePartition& partition() const { return part_; }
  Candidate at(std::size_t index) const;
  /// The first `limit` candidates.
  std::vector<Candidate> materialize(std::size_t limit) const;

 private:
  EdgePartition part_;
  EdgeWeights w_old_;
  std::vector<std::uint64_t> primes_;
  int stages_ = 0;
  BigInt old_sum_;
};

/// Undirected old weights from a skew-symmetric assignment (left -> right),
/// restricted to the fictitious edges.
EdgeWeights old_matching_weights(const Graph& g, const EdgePartition& part,
                                 const WeightAssignment& w_static);

/// Union of all minimum weight perfect matchings of g under `w` (edges of g
/// missing from `w` weigh 0), as a subgraph on the same vertices.
Graph min_pm_union(const Graph& g, const EdgeWeights& w, std::size_t cap = kDefaultCycleCap);

/// True iff g has no simple cycle whose number of real edges r satisfies
/// 1 <= r <= 2^(i+1).
bool check_invariant_stage(const Graph& g, int i, const std::set<EdgeId>& real,
                           std::size_t cap = kDefaultCycleCap);

/// The cycle's four path-starting real edges: traverse from its least
/// numbered real edge in that edge's stored direction, split into four
/// consecutive paths each starting with a real edge, the first three with
/// floor(k/4) real edges each. None when k < 4.
std::optional<std::array<EdgeId, 4>> four_tuple(const Cycle& c,
                                                const std::vector<EdgeId>& real_order);

struct StageAudit {
  std::vector<Graph> graphs;            // G_0..G_l
  std::vector<bool> invariant;          // per stage i >= 1 (index i - 1)
  /// Per stage i >= 0. The uniqueness claim only covers stages i >= 1,
  /// where the invariant holds; stage 0 is reported for reference.
  std::vector<std::size_t> tuple_cycles;
  std::vector<std::size_t> tuple_duplicates;
};

/// G_0 = g; G_i = min_pm_union(G_(i-1), W_i). Checks the invariant on G_i
/// and 4-tuple distinctness over cycles of G_i with 4..2^(i+2) real edges.
StageAudit run_stages(const Graph& g, const EdgePartition& part, const Candidate& c,
                      std::size_t cap = kDefaultCycleCap);

struct Selection {
  std::size_t index = 0;
  std::size_t examined = 0;
  Candidate candidate;
};

/// First candidate whose minimum weight perfect matching is unique. With no
/// perfect matching in g the first candidate is returned. Throws
/// VerificationFailure when no candidate isolates; throws PreconditionError
/// on an empty family.
Selection select_isolating(const CandidateFamily& family, const Graph& g);

}  // namespace nzc
