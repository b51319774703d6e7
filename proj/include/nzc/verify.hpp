#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nzc/auxtree.hpp"
#include "nzc/cycles.hpp"
#include "nzc/gprime.hpp"
#include "nzc/graph.hpp"

namespace nzc {

struct CirculationReport {
  std::size_t cycles_total = 0;
  std::vector<Cycle> zero_witnesses;
  BigInt min_abs_circulation = -1;  // -1 when there are no cycles
  bool passed() const { return zero_witnesses.empty(); }
};

/// Exhaustive: every simple cycle's circulation. Throws CapExceeded past
/// `cap` cycles. At most `keep` witnesses are stored.
CirculationReport verify_nonzero_circulation(const Graph& g, const WeightAssignment& w,
                                             std::size_t cap = kDefaultCycleCap,
                                             std::size_t keep = 16);

/// Weights given explicitly for both orientations: true iff every pair
/// present sums to zero and no orientation is missing its partner.
bool verify_skew_symmetry(const std::map<DirectedEdge, BigInt>& both);

struct LemmaReport {
  std::size_t cycles = 0;
  std::size_t multi_bag_cycles = 0;
  std::size_t lemma4_violations = 0;
  std::size_t lemma5_violations = 0;
  std::size_t claim3_violations = 0;
  /// Largest |subtree sum| / (K^h * l) seen (must stay below 1).
  double lemma4_tightest = 0;
  /// Smallest |highest bag sum| / |rest| over multi-bag cycles with a
  /// nonzero rest (must stay above 1); -1 when there is no such cycle.
  double lemma5_tightest = 0;
  std::vector<std::string> witnesses;
};

/// Per cycle of G' and per auxiliary subtree T_r: |sum of cross weights on
/// edges associated with T_r| < K^h(r) * l(T_r); and on cycles spanning two
/// or more bags, the highest bag's share exceeds the rest in absolute value.
LemmaReport audit_lemma_bounds(const GPrime& gp, const AuxTree& aux,
                               const WeightAssignment& w_cross, const BigInt& K,
                               std::size_t cap = kDefaultCycleCap);

struct BoundFit {
  double slope = 0;
  double intercept = 0;
};

/// Least squares of log2(max|w|) against log2(n); entries with max|w| == 0
/// count as 0 bits.
BoundFit report_weight_bound(const std::vector<std::pair<std::size_t, BigInt>>& samples);

/// Report JSON (cycles_total, zero_witnesses, min_abs_circulation,
/// lemma4_violations, lemma5_violations, max_bits).
std::string report_json(const CirculationReport& c, const LemmaReport* lemmas,
                        std::size_t max_bits);

}  // namespace nzc
