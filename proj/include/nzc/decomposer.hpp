#pragma once

#include <cstdint>
#include <vector>

#include "nzc/component_tree.hpp"
#include "nzc/graph.hpp"

namespace nzc {

enum class Classification { PType, CType, Neither };

/// p-type when planar, else c-type when the exact treewidth is at most
/// `width`, else neither. Graphs too large for the exact treewidth routine
/// are reported as neither.
Classification classify(const Graph& g, int width);

/// Biconnected blocks (edges only; isolated vertices are dropped). Every
/// simple cycle lies inside exactly one block.
std::vector<Graph> split_biconnected(const Graph& g);

/// Decomposes a biconnected graph into planar / bounded-treewidth components
/// glued along separating sets of size 2 or 3. Separators are tried
/// smallest size first, then lexicographically; a split is kept only when
/// every resulting piece can itself be decomposed. Adjacent c-type nodes are
/// merged. Throws NotDecomposable with the offending piece as witness.
ComponentTree decompose(const Graph& g, int width);

/// Merges every pair of adjacent c-type nodes (their decompositions are
/// glued along the shared set).
ComponentTree merge_ctype_neighbors(ComponentTree t);

struct InstanceParams {
  int pieces = 3;
  int planar_max = 10;
  int planar_min = 4;
  int ctype_max = 8;
  int ctype_min = 5;
  int ctype_width = 3;
  int max_vertices = 28;
  double ctype_probability = 0.4;
  /// Probability of keeping a real edge between identified clique vertices.
  double keep_clique_edge = 0.5;
  int max_sum_size = 3;
  bool bipartite = false;
  /// Extra chords added to planar pieces, as a fraction of their vertices.
  double chord_density = 0.6;
};

struct Instance {
  Graph graph;
  ComponentTree tree;  // ground truth assembly
};

/// Random clique-sum instance, deterministic in the seed.
Instance generate_instance(std::uint64_t seed, const InstanceParams& params);

}  // namespace nzc
