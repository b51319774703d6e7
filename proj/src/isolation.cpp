#include "nzc/isolation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nzc {

Bipartition bipartition_of(const Graph& g) {
  if (const auto& b = g.bipartition()) {
    for (const Edge& e : g.edges()) {
      if (g.is_left(e.u) == g.is_left(e.v)) {
        throw PreconditionError("edge " + std::to_string(e.id) + " does not cross the bipartition");
      }
    }
    return *b;
  }
  std::map<VertexId, int> side;
  Bipartition out;
  for (VertexId s : g.vertices()) {
    if (side.count(s)) continue;
    side[s] = 0;
    std::deque<VertexId> q{s};
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      (side[v] ? out.right : out.left).push_back(v);
      for (std::size_t ei : g.incident(g.vertex_index(v))) {
        VertexId u = g.edges()[ei].other(v);
        auto [it, fresh] = side.emplace(u, 1 - side[v]);
        if (fresh) {
          q.push_back(u);
        } else if (it->second == side[v]) {
          throw PreconditionError("graph is not bipartite (odd cycle through vertex " +
                                  std::to_string(v) + ")");
        }
      }
    }
  }
  return out;
}

EdgeWeights matching_weights(const Graph& g, const WeightAssignment& w) {
  Bipartition b = bipartition_of(g);
  std::set<VertexId> left(b.left.begin(), b.left.end());
  EdgeWeights out;
  for (const Edge& e : g.edges()) {
    out[e.id] = w.at({e.id, !left.count(e.u)});
  }
  return out;
}

BigInt matching_weight(const Matching& m, const EdgeWeights& w) {
  BigInt s = 0;
  for (EdgeId e : m) s += w.at(e);
  return s;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::vector<Matching> out;
  if (n % 2) return out;
  std::vector<char> used(n, 0);
  Matching cur;
  auto rec = [&](auto&& self) -> void {
    std::size_t v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) {
      if (out.size() >= cap) throw CapExceeded(cap);
      Matching m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    used[v] = 1;
    for (std::size_t ei : g.incident(v)) {
      const Edge& e = g.edges()[ei];
      std::size_t u = g.vertex_index(e.other(g.vertices()[v]));
      if (used[u]) continue;
      used[u] = 1;
      cur.push_back(e.id);
      self(self);
      cur.pop_back();
      used[u] = 0;
    }
    used[v] = 0;
  };
  rec(rec);
  return out;
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::vector<Matching> best;
  std::size_t seen = 0;
  std::vector<char> done(n, 0);  // matched, or decided to stay unmatched
  Matching cur;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    while (v < n && done[v]) ++v;
    if (v == n) {
      if (++seen > cap) throw CapExceeded(cap);
      if (!best.empty() && cur.size() < best.front().size()) return;
      if (!best.empty() && cur.size() > best.front().size()) best.clear();
      Matching m = cur;
      std::sort(m.begin(), m.end());
      best.push_back(std::move(m));
      return;
    }
    done[v] = 1;
    self(self, v + 1);
    for (std::size_t ei : g.incident(v)) {
      const Edge& e = g.edges()[ei];
      std::size_t u = g.vertex_index(e.other(g.vertices()[v]));
      if (done[u]) continue;
      done[u] = 1;
      cur.push_back(e.id);
      self(self, v + 1);
      cur.pop_back();
      done[u] = 0;
    }
    done[v] = 0;
  };
  rec(rec, 0);
  return best;
}

namespace {

struct Arc {
  int to;
  int cap;
  BigInt cost;
  EdgeId edge;  // -1 for source/sink arcs
};

}  // namespace

MinMatching min_weight_maximum_matching(const Graph& g, const EdgeWeights& w,
                                        const std::vector<EdgeId>& banned) {
  Bipartition b = bipartition_of(g);
  std::map<VertexId, int> node;
  int next = 2;  // 0 = source, 1 = sink
  for (VertexId v : b.left) node[v] = next++;
  for (VertexId v : b.right) node[v] = next++;
  std::set<VertexId> left(b.left.begin(), b.left.end());
  std::set<EdgeId> skip(banned.begin(), banned.end());

  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(next);
  auto add = [&](int a, int c, const BigInt& cost, EdgeId e) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({c, 1, cost, e});
    out[c].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0, -cost, e});
  };
  for (VertexId v : b.left) add(0, node[v], 0, -1);
  for (VertexId v : b.right) add(node[v], 1, 0, -1);
  for (const Edge& e : g.edges()) {
    if (skip.count(e.id)) continue;
    VertexId l = left.count(e.u) ? e.u : e.v;
    add(node[l], node[e.other(l)], w.at(e.id), e.id);
  }

  MinMatching res;
  res.weight = 0;
  for (;;) {
    std::vector<std::optional<BigInt>> dist(next);
    std::vector<int> via(next, -1);
    dist[0] = BigInt(0);
    for (int round = 0; round < next; ++round) {
      bool changed = false;
      for (int a = 0; a < next; ++a) {
        if (!dist[a]) continue;
        for (int ai : out[a]) {
          const Arc& arc = arcs[ai];
          if (arc.cap == 0) continue;
          BigInt d = *dist[a] + arc.cost;
          if (!dist[arc.to] || d < *dist[arc.to]) {
            dist[arc.to] = d;
            via[arc.to] = ai;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (!dist[1]) break;
    for (int x = 1; x != 0;) {
      int ai = via[x];
      arcs[ai].cap -= 1;
      arcs[ai ^ 1].cap += 1;
      x = arcs[ai ^ 1].to;
    }
  }
  for (std::size_t ai = 0; ai < arcs.size(); ai += 2) {
    if (arcs[ai].edge >= 0 && arcs[ai].cap == 0) {
      res.matching.push_back(arcs[ai].edge);
      res.weight += arcs[ai].cost;
    }
  }
  std::sort(res.matching.begin(), res.matching.end());
  return res;
}

TieReport extract_min_max_matching(const Graph& g, const EdgeWeights& w) {
  TieReport r;
  MinMatching best = min_weight_maximum_matching(g, w);
  r.best = best.matching;
  r.weight = best.weight;
  for (EdgeId e : best.matching) {
    MinMatching alt = min_weight_maximum_matching(g, w, {e});
    if (alt.matching.size() == best.matching.size() && alt.weight == best.weight) {
      r.unique = false;
      r.other = alt.matching;
      break;
    }
  }
  return r;
}

namespace {

std::string ids(const Matching& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "]";
}

}  // namespace

std::optional<Matching> extract_min_pm(const Graph& g, const EdgeWeights& w) {
  if (g.num_vertices() % 2) return std::nullopt;
  TieReport r = extract_min_max_matching(g, w);
  if (2 * r.best.size() != g.num_vertices()) return std::nullopt;
  if (!r.unique) {
    throw VerificationFailure("minimum weight perfect matching is not unique (weight " +
                                  r.weight.str() + ")",
                              "{\"first\":" + ids(r.best) + ",\"second\":" + ids(r.other) + "}");
  }
  return r.best;
}

PmAudit audit_pm_isolation(const Graph& g, const EdgeWeights& w, std::size_t cap) {
  PmAudit a;
  std::vector<Matching> all = enumerate_perfect_matchings(g, cap);
  a.perfect_matchings = all.size();
  for (const Matching& m : all) {
    BigInt x = matching_weight(m, w);
    if (a.at_minimum == 0 || x < a.minimum) {
      a.minimum = x;
      a.at_minimum = 1;
      a.tied = {m};
    } else if (x == a.minimum) {
      ++a.at_minimum;
      a.tied.push_back(m);
    }
  }
  if (a.at_minimum < 2) a.tied.clear();
  return a;
}

BigInt path_shift(const Graph& g, const WeightAssignment& w) {
  return BigInt(g.num_vertices()) * w.max_abs() + 1;
}

PathReport unique_shortest_paths(const Graph& g, const WeightAssignment& w, const BigInt& M,
                                 std::size_t cap) {
  if (M <= BigInt(g.num_vertices()) * w.max_abs()) {
    throw PreconditionError("path shift M must exceed n * max|w|");
  }
  PathReport rep;
  const std::size_t n = g.num_vertices();
  for (std::size_t s = 0; s < n; ++s) {
    struct Best {
      std::optional<BigInt> value;
      std::vector<DirectedEdge> path;
      std::optional<std::vector<DirectedEdge>> tie;
    };
    std::vector<Best> best(n);
    std::vector<char> on(n, 0);
    std::vector<DirectedEdge> path;
    on[s] = 1;
    auto dfs = [&](auto&& self, std::size_t v, const BigInt& len) -> void {
      for (std::size_t ei : g.incident(v)) {
        const Edge& e = g.edges()[ei];
        DirectedEdge d = g.leaving(e.id, g.vertices()[v]);
        std::size_t u = g.vertex_index(g.head(d));
        if (on[u]) continue;
        if (++rep.paths > cap) throw CapExceeded(cap);
        BigInt l = len + M + w.at(d);
        path.push_back(d);
        Best& b = best[u];
        if (!b.value || l < *b.value) {
          b.value = l;
          b.path = path;
          b.tie.reset();
        } else if (l == *b.value) {
          b.tie = path;
        }
        on[u] = 1;
        self(self, u, l);
        on[u] = 0;
        path.pop_back();
      }
    };
    dfs(dfs, s, BigInt(0));
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || !best[t].value) continue;
      ++rep.pairs;
      if (best[t].tie) {
        rep.ties.push_back({g.vertices()[s], g.vertices()[t], best[t].path, *best[t].tie});
      }
    }
  }
  return rep;
}

}  // namespace nzc
