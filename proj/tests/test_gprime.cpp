#include <algorithm>

#include "doctest.h"
#include "nzc/cycles.hpp"
#include "nzc/decomposer.hpp"
#include "nzc/gprime.hpp"
#include "nzc/normalizer.hpp"
#include "nzc/tprime.hpp"
#include "support.hpp"

using namespace nzc;
using namespace nzc::test;

namespace {

std::size_t shared_count(const Bag& a, const Bag& b) {
  std::vector<VertexId> common;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(common));
  return common.size();
}

void check_shape(const Graph& g, const GPrime& gp) {
  const TreeDecomp& tp = gp.tprime;
  std::size_t lifted = 0, copies = 0;
  for (const Bag& b : tp.bags) lifted += b.vertices.size();
  for (auto [a, b] : tp.edges) copies += shared_count(tp.bags[a], tp.bags[b]);
  CHECK(gp.graph.num_vertices() == lifted);
  CHECK(gp.copy_edges.size() == copies);
  CHECK(gp.graph.num_edges() == copies + g.num_edges());
  CHECK(gp.intra_of.size() == g.num_edges());

  for (const auto& [lv, orig] : gp.provenance) CHECK(gp.lift.at(orig) == lv);
  for (const Edge& e : g.edges()) {
    EdgeId c = gp.intra_of.at(e.id);
    int bag = gp.association.at(c);
    const Edge& ce = gp.graph.edge(c);
    CHECK(gp.original(ce.u) == e.u);
    CHECK(gp.original(ce.v) == e.v);
    CHECK(gp.bag_of(ce.u) == bag);
    CHECK(gp.bag_of(ce.v) == bag);
    // hosted at the shallowest bag holding both endpoints
    for (std::size_t b = 0; b < tp.bags.size(); ++b) {
      if (tp.bags[b].contains(e.u) && tp.bags[b].contains(e.v)) CHECK(gp.depth[b] >= gp.depth[bag]);
    }
  }
  for (EdgeId c : gp.copy_edges) {
    const Edge& ce = gp.graph.edge(c);
    CHECK(gp.original(ce.u) == gp.original(ce.v));
    CHECK(gp.parent[gp.bag_of(ce.u)] == gp.bag_of(ce.v));
  }
}

}  // namespace

TEST_CASE("a single bag lifts to a copy of the graph") {
  Graph g = complete_graph(4);
  ComponentTree t = decompose(g, 3);
  TreeDecomp tp = build_tprime(t);
  REQUIRE(tp.bags.size() == 1);
  GPrime gp = build_gprime(g, tp);
  CHECK(gp.graph.num_vertices() == 4);
  CHECK(gp.graph.num_edges() == 6);
  CHECK(gp.copy_edges.empty());
  CHECK(enumerate_simple_cycles(gp.graph).size() == 7);
  check_shape(g, gp);
}

TEST_CASE("two K4s lift with one copy edge per shared vertex") {
  ComponentTree t = two_k4_tree();
  Graph g = t.reassemble();
  TreeDecomp tp = build_tprime(t);
  GPrime gp = build_gprime(g, tp);
  CHECK(gp.graph.num_vertices() == 8);
  CHECK(gp.copy_edges.size() == 3);
  check_shape(g, gp);
}

TEST_CASE("build_gprime rejects a decomposition that does not cover the graph") {
  Graph g = cycle_graph(4);
  TreeDecomp td;
  td.bags = {Bag{{0, 1, 2}, {}, {}}, Bag{{2, 3}, {}, {}}};
  td.edges = {{0, 1}};
  CHECK_THROWS_AS(build_gprime(g, td), StructuralError);
}

TEST_CASE("bags_connected examples") {
  // path of bags 0 - 1 - 2 rooted at 0
  std::vector<int> parent{-1, 0, 1};
  CHECK(bags_connected(parent, {0, 1, 2}));
  CHECK(bags_connected(parent, {1, 2}));
  CHECK(bags_connected(parent, {2}));
  CHECK_FALSE(bags_connected(parent, {0, 2}));
  // star with hub 0
  std::vector<int> star{-1, 0, 0, 0};
  CHECK_FALSE(bags_connected(star, {1, 2}));
  CHECK(bags_connected(star, {0, 1, 2}));
}

TEST_CASE("lifted cycles have connected bag support on generated instances") {
  InstanceParams p;
  p.pieces = 4;
  p.max_vertices = 16;
  std::size_t multi = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Instance inst = generate_instance(s, p);
    for (const Graph& block : split_biconnected(inst.graph)) {
      if (block.num_edges() < 2) continue;
      CAPTURE(s);
      GadgetResult r = normalize(decompose(block, 3));
      Graph g = r.tree.reassemble();
      GPrime gp = build_gprime(g, build_tprime(r.tree));
      check_shape(g, gp);
      for (const Cycle& c : enumerate_simple_cycles(gp.graph, 200000)) {
        CHECK(check_connected_support(gp, c));
        if (gp.associated_bags(c).size() > 1) ++multi;
      }
    }
  }
  CHECK(multi > 0);
}
