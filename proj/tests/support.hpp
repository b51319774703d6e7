#pragma once

#include <set>
#include <vector>

#include "nzc/component_tree.hpp"
#include "nzc/graph.hpp"

namespace nzc::test {

// Fixtures. Vertices are 0..n-1 and edge ids follow insertion order.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // left 0..a-1, right a..a+b-1
/// rows x cols grid; vertex r * cols + c.
Graph grid_graph(int rows, int cols);
/// Two K4s glued on the triangle {0, 1, 2}; apexes 3 and 4.
Graph two_k4();
/// Two vertices 0, 1 joined by three internally disjoint paths of the given
/// numbers of edges.
Graph theta_graph(int a, int b, int c);
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Component tree of two_k4 with the triangle as virtual clique in both
/// nodes and the real triangle edges kept on node 0.
ComponentTree two_k4_tree();

/// A p-type node whose virtual triangle {0, 1, 2} separates apexes 3 and 4
/// (two K4s on one triangle), linked to a K4 on {0, 1, 2, 5}.
ComponentTree nonfacial_triangle_tree();

// Oracles, independent of the library's algorithms.

/// Simple cycles counted as edge subsets whose edges form one connected
/// 2-regular subgraph. Exponential in the edge count.
std::size_t count_cycles_by_subsets(const Graph& g);

/// Treewidth as the minimum over all elimination orders of the largest
/// neighbourhood at elimination time.
int treewidth_by_permutations(const Graph& g);

/// Perfect matchings of a bipartite graph counted over permutations of the
/// right side.
std::size_t count_pms_by_permutations(const Graph& g);

/// Circulation evaluated from a closed vertex sequence; the edge between
/// consecutive vertices is the unique real edge joining them.
BigInt circulation_by_vertices(const Graph& g, const WeightAssignment& w,
                               const std::vector<VertexId>& seq);

/// Connected components of g - removed, by repeated flooding over the edge
/// list.
std::size_t components_after_removal(const Graph& g, const std::set<VertexId>& removed);

/// All bag subsets (as bitmasks) that are connected in the tree with the
/// given adjacency; requires at most 20 bags.
std::vector<unsigned> connected_subsets(const std::vector<std::vector<int>>& adj);

}  // namespace nzc::test
