#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nzc/auxtree.hpp"
#include "nzc/component_tree.hpp"
#include "nzc/gprime.hpp"
#include "nzc/normalizer.hpp"
#include "nzc/weights.hpp"

namespace nzc {

/// For every edge (u, v) of G, a walk in G' from the highest copy of u to
/// the highest copy of v: copy edges down to the edge's host bag, the
/// intra-bag edge, copy edges back up.
struct PullbackMap {
  std::map<EdgeId, std::vector<DirectedEdge>> forward;

  std::vector<DirectedEdge> path(DirectedEdge d) const;
  /// P(C): concatenation over the cycle's edges.
  std::vector<DirectedEdge> walk(const Cycle& c) const;
};

PullbackMap build_pullback_map(const Graph& g, const GPrime& gp);

/// w(e) = sum of w' over P(e).
WeightAssignment pull_weights(const WeightAssignment& wprime, const PullbackMap& pm,
                              const Graph& g);

/// Drops every edge whose reverse also occurs and returns the remaining
/// edges as one simple cycle of `gprime`; throws StructuralError when they
/// do not form one.
Cycle cancel_reverse_pairs(const Graph& gprime, const std::vector<DirectedEdge>& walk);

/// Artifacts of one biconnected block.
struct BlockRun {
  Graph block;                // as found in the input
  ComponentTree decomposed;   // T0
  ComponentTree normalized;   // T
  GadgetMap gadgets;          // block edges -> G edges
  Graph graph;                // G, the glued normalized graph
  TreeDecomp tprime;
  GPrime gprime;
  AuxTree aux;
  WPrime wprime;
  PullbackMap pullback;
  WeightAssignment w_graph;   // on G
  WeightAssignment w_block;   // on the block
};

struct PipelineOptions {
  int width = 3;
  bool repair_facial = true;
  AssembleOptions assemble;
  /// Skip decomposition and use this tree for a biconnected input.
  std::optional<ComponentTree> tree;
};

struct PipelineResult {
  WeightAssignment weights;  // on the input graph, every edge
  std::vector<BlockRun> blocks;
  BigInt K;        // largest over blocks
  BigInt B_shift;  // largest over blocks
  int m = 0;
  std::size_t max_bits = 0;
};

/// Weights for one biconnected block from its component tree.
BlockRun run_block(const Graph& block, ComponentTree tree, const PipelineOptions& opt);

/// Splits into blocks, decomposes, normalizes, weighs and pulls the
/// weights back to g0. Bridges get weight 0.
PipelineResult end_to_end(const Graph& g0, const PipelineOptions& opt = {});

}  // namespace nzc
