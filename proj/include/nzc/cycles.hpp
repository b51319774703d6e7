#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "nzc/graph.hpp"

namespace nzc {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Calls `visit` once for every simple cycle of `g` (all edge tags),
/// canonicalised: it starts at its smallest vertex (by insertion order) and
/// leaves towards the smaller of its two neighbours, edge id breaking ties
/// between parallel edges. Returns the number of cycles; throws CapExceeded
/// as soon as more than `cap` cycles exist.
std::size_t for_each_simple_cycle(const Graph& g, std::size_t cap,
                                  const std::function<void(const Cycle&)>& visit);

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// Vertex sets of connected components.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Components of g - removed (vertex sets), honouring all edges.
std::vector<std::vector<VertexId>> components_without(const Graph& g,
                                                      const std::vector<VertexId>& removed);

}  // namespace nzc
