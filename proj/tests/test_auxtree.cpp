#include <cmath>
#include <random>

#include "doctest.h"
#include "nzc/auxtree.hpp"
#include "nzc/decomposer.hpp"
#include "nzc/normalizer.hpp"
#include "nzc/tprime.hpp"
#include "nzc/weights.hpp"
#include "support.hpp"

using namespace nzc;
using namespace nzc::test;

namespace {

TreeDecomp bag_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  TreeDecomp td;
  for (int i = 0; i < n; ++i) td.bags.push_back(Bag{{i, 1000 + i}, {}, {}});
  td.edges = edges;
  return td;
}

TreeDecomp bag_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return bag_tree(n, e);
}

int ceil_log2(std::size_t b) {
  int k = 0;
  while ((std::size_t{1} << k) < b) ++k;
  return k;
}

/// Oracle: brute force over connected bag sets.
bool ancestor_property_holds(const TreeDecomp& td, const AuxTree& a) {
  for (unsigned mask : connected_subsets(td.adjacency())) {
    bool found = false;
    for (std::size_t x = 0; x < td.bags.size() && !found; ++x) {
      if (!(mask >> x & 1u)) continue;
      bool all = true;
      for (std::size_t y = 0; y < td.bags.size(); ++y) {
        if (mask >> y & 1u) all = all && a.is_ancestor(static_cast<int>(x), static_cast<int>(y));
      }
      found = all;
    }
    if (!found) return false;
  }
  return true;
}

void check_all(const TreeDecomp& td, const AuxTree& a) {
  std::size_t b = td.bags.size();
  CHECK(a.height[a.root] <= ceil_log2(b) + 1);
  CHECK(a.subtree(a.root).size() == b);
  if (b <= 12) {
    CHECK(check_ancestor_property(td, a).empty());
    CHECK(ancestor_property_holds(td, a));
  }
  BigInt K = 8;
  for (std::size_t x = 0; x < b; ++x) {
    BigInt sum = 0;
    for (int c : a.children[x]) sum += pow(K, a.height[c]) * a.leaves[c];
    if (!a.children[x].empty()) CHECK(sum <= pow(K, a.height[x] - 1) * a.leaves[x]);
  }
}

}  // namespace

TEST_CASE("a single bag has height 1") {
  TreeDecomp td = bag_path(1);
  AuxTree a = build_aux_tree(td);
  CHECK(a.root == 0);
  CHECK(subtree_stats(a, 0) == std::pair<int, long long>{1, 1});
}

TEST_CASE("a path of seven bags") {
  TreeDecomp td = bag_path(7);
  AuxTree a = build_aux_tree(td);
  CHECK(a.root == 3);
  CHECK(subtree_stats(a, 3) == std::pair<int, long long>{3, 4});
  CHECK(subtree_stats(a, 1) == std::pair<int, long long>{2, 2});
  CHECK(subtree_stats(a, 0) == std::pair<int, long long>{1, 1});
  CHECK(a.parent[0] == 1);
  CHECK(a.parent[5] == 3);
  CHECK(a.attach_bag[1] == 2);
  CHECK(a.attached_at[1] == std::vector<VertexId>{});
  CHECK(a.is_ancestor(3, 6));
  CHECK_FALSE(a.is_ancestor(1, 5));
  check_all(td, a);
}

TEST_CASE("a star is rooted at its hub") {
  TreeDecomp td = bag_tree(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  AuxTree a = build_aux_tree(td);
  CHECK(a.root == 0);
  CHECK(subtree_stats(a, 0) == std::pair<int, long long>{2, 5});
  for (int leaf = 1; leaf < 6; ++leaf) CHECK(subtree_stats(a, leaf) == std::pair<int, long long>{1, 1});
  check_all(td, a);
}

TEST_CASE("attached_at holds the shared vertices") {
  ComponentTree t = two_k4_tree();
  TreeDecomp tp = build_tprime(t);
  AuxTree a = build_aux_tree(tp);
  int child = a.root == 0 ? 1 : 0;
  CHECK(a.attached_at[child] == std::vector<VertexId>{0, 1, 2});
  CHECK(a.attached_at[a.root].empty());
  CHECK_THROWS_AS(subtree_stats(a, 7), PreconditionError);
}

TEST_CASE("height bound and ancestor property on random bag trees") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + static_cast<int>(rng() % 30);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(static_cast<int>(rng() % i), i);
    TreeDecomp td = bag_tree(n, e);
    CAPTURE(n);
    check_all(td, build_aux_tree(td));
  }
}

TEST_CASE("aux trees of generated instances") {
  InstanceParams p;
  p.pieces = 6;
  p.max_vertices = 30;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Instance inst = generate_instance(s, p);
    for (const Graph& block : split_biconnected(inst.graph)) {
      if (block.num_edges() < 2) continue;
      TreeDecomp tp = build_tprime(normalize(decompose(block, 3)).tree);
      check_all(tp, build_aux_tree(tp));
    }
  }
}
