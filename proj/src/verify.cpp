#include "nzc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"

namespace nzc {

CirculationReport verify_nonzero_circulation(const Graph& g, const WeightAssignment& w,
                                             std::size_t cap, std::size_t keep) {
  CirculationReport r;
  r.cycles_total = for_each_simple_cycle(g, cap, [&](const Cycle& c) {
    BigInt x = abs(circulation(c, w));
    if (x == 0 && r.zero_witnesses.size() < keep) r.zero_witnesses.push_back(c);
    if (r.min_abs_circulation < 0 || x < r.min_abs_circulation) r.min_abs_circulation = x;
  });
  return r;
}

bool verify_skew_symmetry(const std::map<DirectedEdge, BigInt>& both) {
  for (const auto& [d, x] : both) {
    auto it = both.find(d.reverse());
    if (it == both.end() || it->second != -x) return false;
  }
  return true;
}

namespace {

double ratio(const BigInt& a, const BigInt& b) {
  if (b == 0) return 0;
  // both may exceed double range only in the far tail; scale by bit length
  std::size_t shift = std::max(bit_length(a), bit_length(b));
  shift = shift > 60 ? shift - 60 : 0;
  return static_cast<double>(static_cast<long double>(BigInt(a >> shift))) /
         static_cast<double>(static_cast<long double>(BigInt(b >> shift)));
}

}  // namespace

LemmaReport audit_lemma_bounds(const GPrime& gp, const AuxTree& aux,
                               const WeightAssignment& w_cross, const BigInt& K,
                               std::size_t cap) {
  LemmaReport r;
  const std::size_t nb = gp.tprime.bags.size();
  std::vector<BigInt> bound(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    BigInt p = 1;
    for (int i = 0; i < aux.height[b]; ++i) p *= K;
    bound[b] = p * aux.leaves[b];
  }
  // bags ordered children before parents in the auxiliary tree
  std::vector<int> order = aux.subtree(aux.root);
  std::reverse(order.begin(), order.end());
  r.lemma5_tightest = -1;

  std::vector<BigInt> own(nb), sub(nb);
  std::vector<char> touched(nb);
  r.cycles = for_each_simple_cycle(gp.graph, cap, [&](const Cycle& c) {
    std::fill(own.begin(), own.end(), BigInt(0));
    std::fill(touched.begin(), touched.end(), 0);
    std::set<int> bags;
    for (const DirectedEdge& d : c.edges) {
      int b = gp.association.at(d.edge);
      own[b] += w_cross.at(d);
      touched[b] = 1;
      bags.insert(b);
    }
    if (!bags_connected(gp.parent, bags)) {
      ++r.claim3_violations;
      if (r.witnesses.size() < 16) r.witnesses.push_back("claim 3: associated bags disconnected");
    }
    for (int b : order) {
      sub[b] = own[b];
      for (int ch : aux.children[b]) sub[b] += sub[ch];
      if (abs(sub[b]) >= bound[b]) {
        ++r.lemma4_violations;
        if (r.witnesses.size() < 16) {
          r.witnesses.push_back("lemma 4 at bag " + std::to_string(b) + ": " +
                                BigInt(abs(sub[b])).str() + " >= " + bound[b].str());
        }
      }
      r.lemma4_tightest = std::max(r.lemma4_tightest, ratio(BigInt(abs(sub[b])), bound[b]));
    }
    if (bags.size() < 2) return;
    ++r.multi_bag_cycles;
    int top = -1;
    for (int b : bags) {
      bool all = true;
      for (int o : bags) all = all && aux.is_ancestor(b, o);
      if (all) top = b;
    }
    if (top < 0) {
      ++r.lemma5_violations;
      if (r.witnesses.size() < 16) r.witnesses.push_back("lemma 5: no unique highest bag");
      return;
    }
    BigInt total = 0;
    for (int b : bags) total += own[b];
    BigInt rest = abs(total - own[top]), mine = abs(own[top]);
    if (mine <= rest) {
      ++r.lemma5_violations;
      if (r.witnesses.size() < 16) {
        r.witnesses.push_back("lemma 5 at bag " + std::to_string(top) + ": " + mine.str() +
                              " <= " + rest.str());
      }
    }
    if (rest != 0) {
      double q = ratio(mine, rest);
      if (r.lemma5_tightest < 0 || q < r.lemma5_tightest) r.lemma5_tightest = q;
    }
  });
  return r;
}

BoundFit report_weight_bound(const std::vector<std::pair<std::size_t, BigInt>>& samples) {
  BoundFit fit;
  const double k = static_cast<double>(samples.size());
  if (samples.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, w] : samples) {
    double x = std::log2(static_cast<double>(n));
    double y = w == 0 ? 0.0 : std::log2(static_cast<double>(static_cast<long double>(w)));
    if (!std::isfinite(y)) y = static_cast<double>(bit_length(w));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double den = k * sxx - sx * sx;
  if (den == 0) return fit;
  fit.slope = (k * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / k;
  return fit;
}

std::string report_json(const CirculationReport& c, const LemmaReport* lemmas,
                        std::size_t max_bits) {
  nlohmann::json j;
  j["cycles_total"] = c.cycles_total;
  j["zero_witnesses"] = nlohmann::json::array();
  for (const Cycle& cyc : c.zero_witnesses) {
    nlohmann::json edges = nlohmann::json::array();
    for (const DirectedEdge& d : cyc.edges) {
      edges.push_back({{"edge", d.edge}, {"reversed", d.reversed}});
    }
    j["zero_witnesses"].push_back(edges);
  }
  j["min_abs_circulation"] = c.min_abs_circulation < 0 ? "" : c.min_abs_circulation.str();
  j["lemma4_violations"] = lemmas ? lemmas->lemma4_violations : 0;
  j["lemma5_violations"] = lemmas ? lemmas->lemma5_violations : 0;
  j["max_bits"] = max_bits;
  return j.dump(2);
}

}  // namespace nzc
