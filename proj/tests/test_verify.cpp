#include <cmath>

#include "doctest.h"
#include "json.hpp"
#include "nzc/decomposer.hpp"
#include "nzc/pullback.hpp"
#include "nzc/verify.hpp"
#include "support.hpp"

using namespace nzc;
using namespace nzc::test;

namespace {

WeightAssignment weights_of(const std::vector<long long>& xs) {
  WeightAssignment w;
  for (std::size_t i = 0; i < xs.size(); ++i) w.set(static_cast<EdgeId>(i), BigInt(xs[i]));
  return w;
}

}  // namespace

TEST_CASE("triangle with weights 1, 2, 3 passes") {
  CirculationReport r = verify_nonzero_circulation(cycle_graph(3), weights_of({1, 2, 3}));
  CHECK(r.passed());
  CHECK(r.cycles_total == 1);
  CHECK(r.min_abs_circulation == 6);
}

TEST_CASE("a square with cancelling weights fails") {
  Graph g = cycle_graph(4);
  WeightAssignment w = weights_of({1, 2, -1, -2});
  CirculationReport r = verify_nonzero_circulation(g, w);
  CHECK_FALSE(r.passed());
  REQUIRE(r.zero_witnesses.size() == 1);
  CHECK(circulation(r.zero_witnesses[0], w) == 0);
  CHECK(r.min_abs_circulation == 0);
}

TEST_CASE("acyclic graphs pass vacuously and the cap is enforced") {
  CirculationReport r = verify_nonzero_circulation(path_graph(4), weights_of({0, 0, 0}));
  CHECK(r.passed());
  CHECK(r.cycles_total == 0);
  CHECK(r.min_abs_circulation == -1);
  Graph k6 = complete_graph(6);
  WeightAssignment w;
  for (const Edge& e : k6.edges()) w.set(e.id, BigInt(1) << e.id);
  CHECK_THROWS_AS(verify_nonzero_circulation(k6, w, 50), CapExceeded);
}

TEST_CASE("witness storage is bounded") {
  Graph k4 = complete_graph(4);
  WeightAssignment zero;
  for (const Edge& e : k4.edges()) zero.set(e.id, BigInt(0));
  CirculationReport r = verify_nonzero_circulation(k4, zero, kDefaultCycleCap, 3);
  CHECK(r.cycles_total == 7);
  CHECK(r.zero_witnesses.size() == 3);
}

TEST_CASE("skew symmetry check") {
  CHECK(verify_skew_symmetry({{{0, false}, 3}, {{0, true}, -3}}));
  CHECK_FALSE(verify_skew_symmetry({{{0, false}, 3}, {{0, true}, 3}}));
  CHECK_FALSE(verify_skew_symmetry({{{0, false}, 3}}));
  CHECK(verify_skew_symmetry({}));
}

TEST_CASE("weight bound fit recovers known exponents") {
  std::vector<std::pair<std::size_t, BigInt>> flat, square;
  for (std::size_t n : {8, 16, 32, 64, 128}) {
    flat.emplace_back(n, BigInt(5));
    square.emplace_back(n, BigInt(n * n));
  }
  CHECK(report_weight_bound(flat).slope == doctest::Approx(0.0));
  CHECK(report_weight_bound(square).slope == doctest::Approx(2.0));
  CHECK(report_weight_bound(square).intercept == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(report_weight_bound({{8, BigInt(1)}}).slope == 0);
}

TEST_CASE("lemma audit on two K4s") {
  BlockRun r = run_block(two_k4(), two_k4_tree(), {});
  LemmaReport rep = audit_lemma_bounds(r.gprime, r.aux, r.wprime.cross, r.wprime.params.K);
  CHECK(rep.cycles > 0);
  CHECK(rep.multi_bag_cycles > 0);
  CHECK(rep.lemma4_violations == 0);
  CHECK(rep.lemma5_violations == 0);
  CHECK(rep.claim3_violations == 0);
  CHECK(rep.lemma4_tightest < 1.0);
  // the leaf bag carries no cross weight, so no cycle has a nonzero rest
  CHECK(rep.lemma5_tightest == -1.0);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("lemma audit on generated instances") {
  InstanceParams p;
  p.pieces = 4;
  p.max_vertices = 14;
  std::size_t multi = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    PipelineResult res = end_to_end(generate_instance(s, p).graph);
    for (const BlockRun& r : res.blocks) {
      CAPTURE(s);
      LemmaReport rep = audit_lemma_bounds(r.gprime, r.aux, r.wprime.cross, r.wprime.params.K);
      CHECK(rep.lemma4_violations == 0);
      CHECK(rep.lemma5_violations == 0);
      CHECK(rep.claim3_violations == 0);
      CHECK(rep.lemma4_tightest < 1.0);
      if (rep.lemma5_tightest != -1.0) {
        CHECK(rep.lemma5_tightest > 1.0);
        ++multi;
      }
    }
  }
  CHECK(multi > 0);
}

TEST_CASE("lemma audit flags oversized cross weights") {
  BlockRun r = run_block(two_k4(), two_k4_tree(), {});
  WeightAssignment big;
  BigInt huge = pow(r.wprime.params.K, 4);
  for (const Edge& e : r.gprime.graph.edges()) big.set(e.id, huge);
  LemmaReport rep = audit_lemma_bounds(r.gprime, r.aux, big, r.wprime.params.K);
  CHECK(rep.lemma4_violations > 0);
  CHECK_FALSE(rep.witnesses.empty());
}

TEST_CASE("report JSON carries the expected keys") {
  Graph g = cycle_graph(4);
  CirculationReport c = verify_nonzero_circulation(g, weights_of({1, 2, -1, -2}));
  BlockRun r = run_block(two_k4(), two_k4_tree(), {});
  LemmaReport l = audit_lemma_bounds(r.gprime, r.aux, r.wprime.cross, r.wprime.params.K);
  auto j = nlohmann::json::parse(report_json(c, &l, 12));
  for (const char* key : {"cycles_total", "zero_witnesses", "min_abs_circulation", "lemma4_violations",
                          "lemma5_violations", "max_bits"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["cycles_total"] == 1);
  CHECK(j["zero_witnesses"].size() == 1);
  CHECK(j["max_bits"] == 12);
  auto plain = nlohmann::json::parse(report_json(c, nullptr, 3));
  CHECK(plain.contains("cycles_total"));
}
