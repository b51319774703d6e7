#include "nzc/dynamic.hpp"

#include <algorithm>
#include <limits>

#include "nzc/cycles.hpp"

namespace nzc {

EdgePartition partition_edges(const Graph& g, const std::vector<EdgeId>& inserted) {
  EdgePartition p;
  std::set<EdgeId> ins;
  for (EdgeId e : inserted) {
    if (!g.has_edge(e)) throw PreconditionError("inserted edge " + std::to_string(e) + " not in graph");
    if (!ins.insert(e).second) throw PreconditionError("inserted edge " + std::to_string(e) + " listed twice");
    p.real.push_back(e);
  }
  for (const Edge& e : g.edges()) {
    if (!ins.count(e.id)) p.fictitious.push_back(e.id);
  }
  return p;
}

WeightAssignment base_weights(const Graph& g, const EdgePartition& part) {
  WeightAssignment w;
  for (const Edge& e : g.edges()) w.set(e.id, BigInt(0));
  BigInt x = 1;
  for (EdgeId e : part.real) {
    x *= 2;
    w.set(e, x);
  }
  return w;
}

int stage_count(std::size_t N) {
  if (N == 0) return 0;
  int l = 0;
  while ((std::size_t{1} << l) < N) ++l;
  return std::max(l, 1);
}

std::vector<std::uint64_t> odd_primes_below(int bits) {
  std::vector<std::uint64_t> out;
  if (bits <= 1) return out;
  const std::uint64_t limit = std::uint64_t{1} << std::min(bits, 24);
  std::vector<char> composite(limit, 0);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    if (i > 2) out.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = 1;
  }
  return out;
}

int default_prime_bits(std::size_t N) {
  return static_cast<int>(bit_length(BigInt(4 * N))) + 1;
}

CandidateFamily::CandidateFamily(const Graph& g, EdgePartition part, EdgeWeights w_old,
                                 int prime_bits)
    : part_(std::move(part)), w_old_(std::move(w_old)) {
  for (EdgeId e : part_.fictitious) {
    auto it = w_old_.find(e);
    if (it == w_old_.end()) {
      throw PreconditionError("old edge " + std::to_string(e) + " has no weight");
    }
    old_sum_ += abs(it->second);
  }
  for (EdgeId e : part_.real) {
    if (!g.has_edge(e)) throw PreconditionError("inserted edge " + std::to_string(e) + " not in graph");
  }
  const std::size_t N = part_.real.size();
  stages_ = stage_count(N);
  if (N == 0) return;
  primes_ = odd_primes_below(prime_bits > 0 ? prime_bits : default_prime_bits(N));
  if (primes_.empty()) throw PreconditionError("prime space is empty for the configured bit budget");
}

std::size_t CandidateFamily::size() const {
  if (part_.real.empty()) return 0;
  std::size_t s = 1;
  for (int i = 0; i < stages_; ++i) {
    if (s > std::numeric_limits<std::size_t>::max() / primes_.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    s *= primes_.size();
  }
  return s;
}

Candidate CandidateFamily::at(std::size_t index) const {
  if (index >= size()) throw PreconditionError("candidate index out of range");
  Candidate c;
  c.primes.assign(stages_, 0);
  for (int i = stages_ - 1; i >= 0; --i) {
    c.primes[i] = primes_[index % primes_.size()];
    index /= primes_.size();
  }
  const std::size_t N = part_.real.size();
  std::vector<std::vector<BigInt>> w(stages_, std::vector<BigInt>(N));
  BigInt top = 0;
  for (int i = 0; i < stages_; ++i) {
    BigInt pow2 = 1;
    for (std::size_t j = 0; j < N; ++j) {
      pow2 *= 2;
      w[i][j] = pow2 % c.primes[i];
      top = std::max(top, w[i][j]);
    }
  }
  c.B = BigInt(N) * top + 1;
  std::vector<BigInt> W(N, BigInt(0));
  for (int i = 0; i < stages_; ++i) {
    EdgeWeights stage;
    for (std::size_t j = 0; j < N; ++j) {
      W[j] = W[j] * c.B + w[i][j];
      stage[part_.real[j]] = W[j];
    }
    c.stages.push_back(std::move(stage));
  }
  c.B_final = 2 * old_sum_ + 1;
  for (EdgeId e : part_.fictitious) c.weights[e] = w_old_.at(e);
  for (std::size_t j = 0; j < N; ++j) c.weights[part_.real[j]] = c.B_final * W[j];
  return c;
}

std::vector<Candidate> CandidateFamily::materialize(std::size_t limit) const {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < std::min(limit, size()); ++i) out.push_back(at(i));
  return out;
}

EdgeWeights old_matching_weights(const Graph& g, const EdgePartition& part,
                                 const WeightAssignment& w_static) {
  Bipartition b = bipartition_of(g);
  std::set<VertexId> left(b.left.begin(), b.left.end());
  EdgeWeights out;
  for (EdgeId e : part.fictitious) {
    const Edge& ed = g.edge(e);
    out[e] = w_static.at({e, !left.count(ed.u)});
  }
  return out;
}

Graph min_pm_union(const Graph& g, const EdgeWeights& w, std::size_t cap) {
  Graph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  std::vector<Matching> all = enumerate_perfect_matchings(g, cap);
  std::optional<BigInt> best;
  std::set<EdgeId> keep;
  for (const Matching& m : all) {
    BigInt x = 0;
    for (EdgeId e : m) {
      auto it = w.find(e);
      if (it != w.end()) x += it->second;
    }
    if (!best || x < *best) {
      best = x;
      keep.clear();
    }
    if (x == *best) keep.insert(m.begin(), m.end());
  }
  for (const Edge& e : g.edges()) {
    if (keep.count(e.id)) out.add_edge(e.id, e.u, e.v, e.tag);
  }
  if (g.bipartition()) out.set_bipartition(*g.bipartition());
  return out;
}

namespace {

std::size_t real_count(const Cycle& c, const std::set<EdgeId>& real) {
  std::size_t r = 0;
  for (const DirectedEdge& d : c.edges) r += real.count(d.edge);
  return r;
}

}  // namespace

bool check_invariant_stage(const Graph& g, int i, const std::set<EdgeId>& real,
                           std::size_t cap) {
  const std::size_t bound = std::size_t{1} << (i + 1);
  bool ok = true;
  for_each_simple_cycle(g, cap, [&](const Cycle& c) {
    std::size_t r = real_count(c, real);
    if (r >= 1 && r <= bound) ok = false;
  });
  return ok;
}

std::optional<std::array<EdgeId, 4>> four_tuple(const Cycle& c,
                                                const std::vector<EdgeId>& real_order) {
  std::map<EdgeId, std::size_t> rank;
  for (std::size_t j = 0; j < real_order.size(); ++j) rank[real_order[j]] = j;
  std::optional<std::size_t> start;
  std::size_t k = 0;
  for (std::size_t p = 0; p < c.edges.size(); ++p) {
    auto it = rank.find(c.edges[p].edge);
    if (it == rank.end()) continue;
    ++k;
    if (!start || it->second < rank.at(c.edges[*start].edge)) start = p;
  }
  if (k < 4) return std::nullopt;
  Cycle walk = c;
  if (c.edges[*start].reversed) {
    const EdgeId first = c.edges[*start].edge;
    walk = c.reversed();
    for (std::size_t p = 0; p < walk.edges.size(); ++p) {
      if (walk.edges[p].edge == first) start = p;
    }
  }
  std::vector<EdgeId> reals;
  for (std::size_t s = 0; s < walk.edges.size(); ++s) {
    EdgeId e = walk.edges[(*start + s) % walk.edges.size()].edge;
    if (rank.count(e)) reals.push_back(e);
  }
  const std::size_t q = k / 4;
  return std::array<EdgeId, 4>{reals[0], reals[q], reals[2 * q], reals[3 * q]};
}

StageAudit run_stages(const Graph& g, const EdgePartition& part, const Candidate& c,
                      std::size_t cap) {
  StageAudit a;
  const std::set<EdgeId> real = part.real_set();
  a.graphs.push_back(g);
  const int l = static_cast<int>(c.stages.size());
  for (int i = 0; i <= l; ++i) {
    const Graph& gi = a.graphs.back();
    if (i > 0) a.invariant.push_back(check_invariant_stage(gi, i, real, cap));
    const std::size_t bound = std::size_t{1} << (i + 2);
    std::set<std::array<EdgeId, 4>> seen;
    std::size_t dup = 0, audited = 0;
    for_each_simple_cycle(gi, cap, [&](const Cycle& cyc) {
      std::size_t r = real_count(cyc, real);
      if (r < 4 || r > bound) return;
      ++audited;
      if (!seen.insert(*four_tuple(cyc, part.real)).second) ++dup;
    });
    a.tuple_cycles.push_back(audited);
    a.tuple_duplicates.push_back(dup);
    if (i < l) a.graphs.push_back(min_pm_union(gi, c.stages[i], cap));
  }
  return a;
}

Selection select_isolating(const CandidateFamily& family, const Graph& g) {
  const std::size_t n = family.size();
  if (n == 0) throw PreconditionError("empty candidate family");
  Selection s;
  for (std::size_t i = 0; i < n; ++i) {
    Candidate c = family.at(i);
    TieReport r = extract_min_max_matching(g, c.weights);
    ++s.examined;
    if (2 * r.best.size() != g.num_vertices() || r.unique) {
      s.index = i;
      s.candidate = std::move(c);
      return s;
    }
  }
  throw VerificationFailure("no candidate isolates a minimum weight perfect matching",
                            "{\"candidates\":" + std::to_string(n) + "}");
}

}  // namespace nzc
