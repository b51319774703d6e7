#include <algorithm>
#include <random>

#include "doctest.h"
#include "nzc/decomposer.hpp"
#include "nzc/isolation.hpp"
#include "nzc/pullback.hpp"
#include "support.hpp"

using namespace nzc;
using namespace nzc::test;

namespace {

WeightAssignment weights_of(const std::vector<long long>& xs) {
  WeightAssignment w;
  for (std::size_t i = 0; i < xs.size(); ++i) w.set(static_cast<EdgeId>(i), BigInt(xs[i]));
  return w;
}

EdgeWeights random_edge_weights(const Graph& g, std::mt19937_64& rng, int range) {
  EdgeWeights w;
  for (const Edge& e : g.edges()) w[e.id] = BigInt(static_cast<long long>(rng() % (2 * range + 1)) - range);
  return w;
}

Graph random_bipartite(std::mt19937_64& rng, int a, int b, int edges) {
  Graph g;
  for (int v = 0; v < a + b; ++v) g.add_vertex(v);
  for (int t = 0; t < 4 * edges && static_cast<int>(g.num_edges()) < edges; ++t) {
    int u = static_cast<int>(rng() % a), v = a + static_cast<int>(rng() % b);
    if (!g.find_edge(u, v)) g.add_edge(u, v);
  }
  std::vector<VertexId> left, right;
  for (int v = 0; v < a; ++v) left.push_back(v);
  for (int v = a; v < a + b; ++v) right.push_back(v);
  g.set_bipartition({left, right});
  return g;
}

}  // namespace

TEST_CASE("bipartition_of rejects odd cycles") {
  CHECK_THROWS_AS(bipartition_of(cycle_graph(3)), PreconditionError);
  Bipartition bp = bipartition_of(path_graph(4));
  CHECK(bp.left == std::vector<VertexId>{0, 2});
  CHECK(bp.right == std::vector<VertexId>{1, 3});
}

TEST_CASE("a single edge is its own perfect matching") {
  Graph g = path_graph(2);
  auto m = extract_min_pm(g, matching_weights(g, weights_of({7})));
  REQUIRE(m);
  CHECK(*m == Matching{0});
}

TEST_CASE("square: the circulation is the gap between its two perfect matchings") {
  Graph g = cycle_graph(4);
  g.set_bipartition({{0, 2}, {1, 3}});
  EdgeWeights w = matching_weights(g, weights_of({1, 2, 3, 4}));
  CHECK(w.at(0) == 1);
  CHECK(w.at(1) == -2);
  CHECK(w.at(2) == 3);
  CHECK(w.at(3) == -4);
  CHECK(enumerate_perfect_matchings(g).size() == 2);
  CHECK(matching_weight({0, 2}, w) - matching_weight({1, 3}, w) == 10);
  auto m = extract_min_pm(g, w);
  REQUIRE(m);
  CHECK(*m == Matching{1, 3});

  EdgeWeights zero = matching_weights(g, weights_of({1, 2, -1, -2}));
  CHECK_THROWS_AS(extract_min_pm(g, zero), VerificationFailure);
  PmAudit a = audit_pm_isolation(g, zero);
  CHECK(a.at_minimum == 2);
  CHECK(a.tied.size() == 2);
}

TEST_CASE("hexagon with pipeline weights has an isolated perfect matching") {
  Graph g = cycle_graph(6);
  PipelineResult r = end_to_end(g);
  EdgeWeights w = matching_weights(g, r.weights);
  PmAudit a = audit_pm_isolation(g, w);
  CHECK(a.perfect_matchings == 2);
  CHECK(a.at_minimum == 1);
  CHECK(extract_min_pm(g, w));
}

TEST_CASE("K3,3 with pipeline weights") {
  Graph g = complete_bipartite(3, 3);
  CHECK(count_pms_by_permutations(g) == 6);
  PipelineResult r = end_to_end(g);
  EdgeWeights w = matching_weights(g, r.weights);
  PmAudit a = audit_pm_isolation(g, w);
  CHECK(a.perfect_matchings == 6);
  CHECK(a.at_minimum == 1);
  auto m = extract_min_pm(g, w);
  REQUIRE(m);
  CHECK(matching_weight(*m, w) == a.minimum);
}

TEST_CASE("no perfect matching") {
  Graph g = path_graph(3);
  EdgeWeights w = matching_weights(g, weights_of({1, 1}));
  CHECK_FALSE(extract_min_pm(g, w));
  CHECK(enumerate_perfect_matchings(g).empty());
  CHECK(audit_pm_isolation(g, w).perfect_matchings == 0);
}

TEST_CASE("maximum matchings of short paths") {
  CHECK(enumerate_maximum_matchings(path_graph(3)).size() == 2);
  CHECK(enumerate_maximum_matchings(path_graph(5)).size() == 3);
  Graph p5 = path_graph(5);
  EdgeWeights oriented = matching_weights(p5, weights_of({4, 1, 1, 4}));
  CHECK(oriented.at(1) == -1);
  // {0,2}, {0,3}, {1,3} weigh 5, 0, -5
  TieReport u = extract_min_max_matching(p5, oriented);
  CHECK(u.unique);
  CHECK(u.best == Matching{1, 3});
  CHECK(u.weight == -5);
  // {0,2}, {0,3}, {1,3} weigh 1, 0, 0
  EdgeWeights w{{0, 0}, {1, 0}, {2, 1}, {3, 0}};
  TieReport t = extract_min_max_matching(p5, w);
  CHECK_FALSE(t.unique);
  CHECK(t.weight == 0);
  CHECK(matching_weight(t.other, w) == 0);
  CHECK(t.best != t.other);
}

TEST_CASE("successive shortest paths agree with enumeration") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 80; ++round) {
    int a = 2 + static_cast<int>(rng() % 4), b = 2 + static_cast<int>(rng() % 4);
    Graph g = random_bipartite(rng, a, b, 3 + static_cast<int>(rng() % 8));
    EdgeWeights w = random_edge_weights(g, rng, 3);
    auto all = enumerate_maximum_matchings(g);
    REQUIRE(!all.empty());
    BigInt best = matching_weight(all[0], w);
    for (const Matching& m : all) best = std::min(best, matching_weight(m, w));
    std::size_t at_best = static_cast<std::size_t>(
        std::count_if(all.begin(), all.end(), [&](const Matching& m) { return matching_weight(m, w) == best; }));
    MinMatching mm = min_weight_maximum_matching(g, w);
    CHECK(mm.weight == best);
    CHECK(mm.matching.size() == all[0].size());
    TieReport t = extract_min_max_matching(g, w);
    CHECK(t.unique == (at_best == 1));
    if (a == b) {
      auto pms = enumerate_perfect_matchings(g);
      if (!pms.empty() && at_best == 1) {
        auto m = extract_min_pm(g, w);
        REQUIRE(m);
        CHECK(matching_weight(*m, w) == best);
      }
    }
  }
}

TEST_CASE("banned edges are avoided") {
  Graph g = cycle_graph(4);
  g.set_bipartition({{0, 2}, {1, 3}});
  EdgeWeights w = matching_weights(g, weights_of({1, 2, 3, 4}));
  MinMatching m = min_weight_maximum_matching(g, w, {1});
  CHECK(m.matching == Matching{0, 2});
}

TEST_CASE("trees have unique shortest paths") {
  Graph g = from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  WeightAssignment w = weights_of({0, 0, 0, 0, 0});
  PathReport r = unique_shortest_paths(g, w, path_shift(g, w));
  CHECK(r.unique());
  CHECK(r.pairs == 30);
}

TEST_CASE("square: paths tie exactly when the circulation vanishes") {
  Graph g = cycle_graph(4);
  WeightAssignment zero = weights_of({1, 2, -1, -2});
  PathReport r = unique_shortest_paths(g, zero, path_shift(g, zero));
  CHECK_FALSE(r.unique());
  for (const PathTie& t : r.ties) CHECK(t.first != t.second);
  WeightAssignment good = weights_of({1, 2, 3, 4});
  CHECK(unique_shortest_paths(g, good, path_shift(g, good)).unique());
}

TEST_CASE("path shift must dominate the weights") {
  Graph g = cycle_graph(4);
  WeightAssignment w = weights_of({1, 2, 3, 4});
  CHECK(path_shift(g, w) == 17);
  CHECK_THROWS_AS(unique_shortest_paths(g, w, 16), PreconditionError);
}

TEST_CASE("pipeline weights give unique shortest paths on generated instances") {
  InstanceParams p;
  p.pieces = 3;
  p.max_vertices = 12;
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = generate_instance(s, p).graph;
    PipelineResult r = end_to_end(g);
    CAPTURE(s);
    CHECK(unique_shortest_paths(g, r.weights, path_shift(g, r.weights)).unique());
  }
}
