#include <random>

#include "doctest.h"
#include "nzc/cycles.hpp"
#include "nzc/decomposer.hpp"
#include "nzc/pullback.hpp"
#include "support.hpp"

using namespace nzc;
using namespace nzc::test;

namespace {

WeightAssignment random_weights(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WeightAssignment w;
  for (const Edge& e : g.edges()) w.set(e.id, BigInt(static_cast<long long>(rng() % 2001) - 1000));
  return w;
}

/// Vertex 0 runs down a chain of three bags; 1, 2, 3 sit in one bag each.
TreeDecomp chain_decomposition() {
  TreeDecomp td;
  td.bags = {Bag{{0, 1}, {}, {}}, Bag{{0, 2}, {}, {}}, Bag{{0, 3}, {}, {}}};
  td.edges = {{0, 1}, {1, 2}};
  return td;
}

}  // namespace

TEST_CASE("a single bag maps every edge to its copy") {
  Graph g = complete_graph(4);
  BlockRun r = run_block(g, decompose(g, 3), {});
  for (const Edge& e : r.graph.edges()) {
    auto p = r.pullback.path({e.id, false});
    REQUIRE(p.size() == 1);
    CHECK(p[0] == DirectedEdge{r.gprime.intra_of.at(e.id), false});
  }
}

TEST_CASE("an edge two bags below its endpoint's top copy") {
  Graph g = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  GPrime gp = build_gprime(g, chain_decomposition());
  PullbackMap pm = build_pullback_map(g, gp);
  CHECK(pm.path({0, false}).size() == 1);
  CHECK(pm.path({1, false}).size() == 2);
  auto p = pm.path({2, false});
  REQUIRE(p.size() == 3);
  CHECK(gp.is_copy(p[0].edge));
  CHECK(gp.is_copy(p[1].edge));
  CHECK(p[2].edge == gp.intra_of.at(2));
  CHECK(gp.original(gp.graph.tail(p[0])) == 0);
  CHECK(gp.bag_of(gp.graph.tail(p[0])) == 0);
  CHECK(gp.original(gp.graph.head(p[2])) == 3);
}

TEST_CASE("reversed edges map to reversed paths") {
  Graph g = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  GPrime gp = build_gprime(g, chain_decomposition());
  PullbackMap pm = build_pullback_map(g, gp);
  for (EdgeId e = 0; e < 3; ++e) {
    auto fwd = pm.path({e, false});
    auto back = pm.path({e, true});
    REQUIRE(fwd.size() == back.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) CHECK(back[i] == fwd[fwd.size() - 1 - i].reverse());
  }
}

TEST_CASE("pull_weights sums along the path") {
  Graph g = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  GPrime gp = build_gprime(g, chain_decomposition());
  PullbackMap pm = build_pullback_map(g, gp);
  WeightAssignment wp = random_weights(gp.graph, 4);
  WeightAssignment w = pull_weights(wp, pm, g);
  for (const Edge& e : g.edges()) {
    BigInt s = 0;
    for (const DirectedEdge& d : pm.path({e.id, false})) s += wp.at(d);
    CHECK(w.forward(e.id) == s);
  }
}

TEST_CASE("cancel_reverse_pairs examples") {
  Graph g = cycle_graph(3);
  g.add_vertex(3);
  g.add_edge(3, 0, 3);
  std::vector<DirectedEdge> walk{{0, false}, {3, false}, {3, true}, {1, false}, {2, false}};
  Cycle c = cancel_reverse_pairs(g, walk);
  CHECK(c.size() == 3);
  CHECK(is_simple_cycle(g, c));
  CHECK_THROWS_AS(cancel_reverse_pairs(g, {{0, false}, {1, false}}), StructuralError);
}

TEST_CASE("two K4s: cycle circulations survive the pullback") {
  BlockRun r = run_block(two_k4(), two_k4_tree(), {});
  auto cycles = enumerate_simple_cycles(r.graph);
  CHECK(cycles.size() == count_cycles_by_subsets(r.graph));
  for (const Cycle& c : cycles) {
    Cycle residue = cancel_reverse_pairs(r.gprime.graph, r.pullback.walk(c));
    CHECK(is_simple_cycle(r.gprime.graph, residue));
    CHECK(circulation(c, r.w_graph) == circulation(residue, r.wprime.combined));
    CHECK(circulation(c, r.w_graph) != 0);
  }
}

TEST_CASE("end_to_end rejects graphs without a decomposition") {
  PipelineOptions opt;
  opt.width = 4;
  CHECK_THROWS_AS(end_to_end(complete_graph(6), opt), NotDecomposable);
}

TEST_CASE("end_to_end on planar and bridged inputs") {
  Graph grid = grid_graph(3, 3);
  PipelineResult r = end_to_end(grid);
  CHECK(r.blocks.size() == 1);
  for (const Cycle& c : enumerate_simple_cycles(grid)) CHECK(circulation(c, r.weights) != 0);

  Graph p5 = path_graph(5);
  PipelineResult path = end_to_end(p5);
  CHECK(path.blocks.empty());
  for (const Edge& e : p5.edges()) CHECK(path.weights.forward(e.id) == 0);

  Graph bowtie = from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {5, 6}});
  PipelineResult b = end_to_end(bowtie);
  CHECK(b.blocks.size() == 2);
  CHECK(b.weights.forward(3) == 0);
  CHECK(b.weights.forward(7) == 0);
  for (const Cycle& c : enumerate_simple_cycles(bowtie)) CHECK(circulation(c, b.weights) != 0);
}

TEST_CASE("pullback residues on generated instances") {
  InstanceParams p;
  p.pieces = 4;
  p.max_vertices = 16;
  for (std::uint64_t s = 0; s < 15; ++s) {
    Instance inst = generate_instance(s, p);
    PipelineResult res = end_to_end(inst.graph);
    for (const BlockRun& r : res.blocks) {
      CAPTURE(s);
      for (const Cycle& c : enumerate_simple_cycles(r.graph)) {
        Cycle residue = cancel_reverse_pairs(r.gprime.graph, r.pullback.walk(c));
        CHECK(is_simple_cycle(r.gprime.graph, residue));
        CHECK(circulation(c, r.w_graph) == circulation(residue, r.wprime.combined));
      }
    }
    for (const Cycle& c : enumerate_simple_cycles(inst.graph)) CHECK(circulation(c, res.weights) != 0);
  }
}
