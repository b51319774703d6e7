#include "nzc/normalizer.hpp"

#include <algorithm>
#include <set>

#include "nzc/cycles.hpp"
#include "nzc/planar.hpp"

namespace nzc {

std::vector<DirectedEdge> GadgetMap::path(EdgeId e) const {
  auto it = paths.find(e);
  if (it == paths.end()) return {DirectedEdge{e, false}};
  return it->second;
}

VertexId GadgetMap::original(VertexId v) const {
  auto it = origin.find(v);
  return it == origin.end() ? v : it->second;
}

GadgetMap GadgetMap::then(const GadgetMap& next) const {
  GadgetMap out;
  std::set<EdgeId> keys;
  for (const auto& [e, p] : paths) keys.insert(e);
  for (const auto& [e, p] : next.paths) {
    // edges of this map's post graph that only `next` rewrites
    if (!paths.count(e)) keys.insert(e);
  }
  for (EdgeId e : keys) {
    std::vector<DirectedEdge> flat;
    for (const DirectedEdge& d : path(e)) {
      std::vector<DirectedEdge> sub = next.path(d.edge);
      if (d.reversed) {
        std::reverse(sub.begin(), sub.end());
        for (auto& s : sub) s = s.reverse();
      }
      flat.insert(flat.end(), sub.begin(), sub.end());
    }
    if (flat.size() != 1 || flat.front() != DirectedEdge{e, false}) out.paths[e] = std::move(flat);
  }
  out.origin = origin;
  for (const auto& [v, o] : next.origin) out.origin[v] = original(o);
  return out;
}

WeightAssignment pull_circulation_through_gadget(const WeightAssignment& w2, const GadgetMap& m,
                                                 const Graph& pre) {
  WeightAssignment w1;
  for (const Edge& e : pre.edges()) {
    if (!e.is_real()) continue;
    BigInt sum = 0;
    for (const DirectedEdge& d : m.path(e.id)) sum += w2.at(d);
    w1.set(e.id, sum);
  }
  return w1;
}

namespace {

Graph rename_vertex(const Graph& g, VertexId from, VertexId to) {
  Graph out;
  auto r = [&](VertexId x) { return x == from ? to : x; };
  for (VertexId v : g.vertices()) out.add_vertex(r(v));
  for (const Edge& e : g.edges()) out.add_edge(e.id, r(e.u), r(e.v), e.tag);
  return out;
}

void rename_in_sorted(std::vector<VertexId>& vs, VertexId from, VertexId to) {
  bool hit = false;
  for (VertexId& x : vs) {
    if (x == from) {
      x = to;
      hit = true;
    }
  }
  if (hit) std::sort(vs.begin(), vs.end());
}

void rename_in_node(ComponentNode& node, VertexId from, VertexId to) {
  if (!node.graph.has_vertex(from)) return;
  node.graph = rename_vertex(node.graph, from, to);
  if (node.decomposition) {
    for (Bag& b : node.decomposition->bags) rename_in_sorted(b.vertices, from, to);
  }
}

/// Nodes reachable from `start` without stepping back over link `via`.
std::vector<int> branch(const ComponentTree& t, int start, int via) {
  std::vector<int> out{start};
  std::set<int> seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int li : t.incident_links(x)) {
      if (li == via) continue;
      int y = t.links[li].a == x ? t.links[li].b : t.links[li].a;
      if (seen.insert(y).second) {
        out.push_back(y);
        stack.push_back(y);
      }
    }
  }
  return out;
}

/// Links reachable beyond `via` (exclusive) in the branch rooted at `start`.
std::vector<int> branch_links(const ComponentTree& t, const std::vector<int>& nodes, int via) {
  std::set<int> in(nodes.begin(), nodes.end());
  std::vector<int> out;
  for (std::size_t li = 0; li < t.links.size(); ++li) {
    if (static_cast<int>(li) == via) continue;
    if (in.count(t.links[li].a) && in.count(t.links[li].b)) out.push_back(static_cast<int>(li));
  }
  return out;
}

struct Fresh {
  VertexId vertex = 0;
  EdgeId real = 0;
  EdgeId virt = -1;

  explicit Fresh(const ComponentTree& t) {
    for (const auto& n : t.nodes) {
      for (VertexId v : n.graph.vertices()) vertex = std::max(vertex, v + 1);
      for (const Edge& e : n.graph.edges()) {
        if (e.is_real()) real = std::max(real, e.id + 1);
      }
    }
    virt = t.next_virtual_id();
  }
};

bool contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void record_rename(GadgetMap& step, const Edge& e, VertexId v, EdgeId star) {
  if (e.u == v) {
    step.paths[e.id] = {DirectedEdge{star, false}, DirectedEdge{e.id, false}};
  } else {
    step.paths[e.id] = {DirectedEdge{e.id, false}, DirectedEdge{star, true}};
  }
}

/// One gamma gadget: the first (node, vertex) pair violating disjointness.
bool split_one(ComponentTree& t, Fresh& fresh, GadgetMap& total) {
  for (std::size_t d = 0; d < t.nodes.size(); ++d) {
    auto sets = t.separating_sets(static_cast<int>(d));
    std::map<VertexId, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (VertexId v : sets[i]) holders[v].push_back(i);
    }
    for (const auto& [v, idx] : holders) {
      if (idx.size() < 2) continue;
      GadgetMap step;
      std::vector<std::vector<VertexId>> sv;
      for (std::size_t i : idx) sv.push_back(sets[i]);
      std::vector<VertexId> leaf;
      std::vector<EdgeId> star;
      for (std::size_t i = 0; i < sv.size(); ++i) {
        leaf.push_back(fresh.vertex++);
        star.push_back(fresh.real++);
        step.origin[leaf.back()] = v;
      }
      // the tree beyond each set
      for (std::size_t i = 0; i < sv.size(); ++i) {
        for (int li : t.incident_links(static_cast<int>(d))) {
          if (t.links[li].sep != sv[i]) continue;
          int other = t.links[li].a == static_cast<int>(d) ? t.links[li].b : t.links[li].a;
          auto nodes = branch(t, other, li);
          for (int n : nodes) {
            for (const Edge& e : t.nodes[n].graph.edges()) {
              if (e.is_real() && (e.u == v || e.v == v)) record_rename(step, e, v, star[i]);
            }
            rename_in_node(t.nodes[n], v, leaf[i]);
          }
          for (int bl : branch_links(t, nodes, li)) rename_in_sorted(t.links[bl].sep, v, leaf[i]);
        }
      }
      // the node itself
      ComponentNode& node = t.nodes[d];
      Graph g;
      for (VertexId x : node.graph.vertices()) g.add_vertex(x);
      for (VertexId x : leaf) g.add_vertex(x);
      for (const Edge& e : node.graph.edges()) {
        if (e.u != v && e.v != v) {
          g.add_edge(e.id, e.u, e.v, e.tag);
          continue;
        }
        VertexId u = e.other(v);
        std::vector<std::size_t> in;
        for (std::size_t i = 0; i < sv.size(); ++i) {
          if (contains(sv[i], u)) in.push_back(i);
        }
        if (in.empty()) {
          g.add_edge(e.id, e.u, e.v, e.tag);
        } else if (!e.is_real()) {
          for (std::size_t i : in) g.add_edge(fresh.virt--, leaf[i], u, EdgeTag::Virtual);
        } else {
          std::size_t i = in.front();
          record_rename(step, e, v, star[i]);
          if (e.u == v) {
            g.add_edge(e.id, leaf[i], u, EdgeTag::Real);
          } else {
            g.add_edge(e.id, u, leaf[i], EdgeTag::Real);
          }
        }
      }
      for (std::size_t i = 0; i < sv.size(); ++i) g.add_edge(star[i], v, leaf[i], EdgeTag::Real);
      node.graph = std::move(g);
      if (node.decomposition) {
        for (std::size_t i = 0; i < sv.size(); ++i) {
          bool placed = false;
          for (Bag& b : node.decomposition->bags) {
            if (!b.contains_all(sv[i])) continue;
            b.vertices.insert(std::upper_bound(b.vertices.begin(), b.vertices.end(), leaf[i]),
                              leaf[i]);
            placed = true;
          }
          if (!placed) throw StructuralError("no bag of a c-type node holds a separating set");
        }
        node.width = std::max(node.width, node.decomposition->width());
      }
      for (int li : t.incident_links(static_cast<int>(d))) {
        for (std::size_t i = 0; i < sv.size(); ++i) {
          if (t.links[li].sep == sv[i]) {
            rename_in_sorted(t.links[li].sep, v, leaf[i]);
            break;
          }
        }
      }
      total = total.then(step);
      return true;
    }
  }
  return false;
}

/// One beta gadget for the first separating set shared by three or more
/// nodes.
bool dedupe_one(ComponentTree& t, Fresh& fresh, GadgetMap& total) {
  std::map<std::vector<VertexId>, std::vector<int>> by_set;
  for (std::size_t li = 0; li < t.links.size(); ++li) by_set[t.links[li].sep].push_back(li);
  for (const auto& [tau, lis] : by_set) {
    if (lis.size() < 2) continue;
    // nodes joined by links labelled tau, grouped into connected families
    std::map<int, std::vector<int>> adj;
    for (int li : lis) {
      adj[t.links[li].a].push_back(t.links[li].b);
      adj[t.links[li].b].push_back(t.links[li].a);
    }
    std::set<int> seen;
    for (const auto& [start, nb] : adj) {
      if (seen.count(start)) continue;
      std::vector<int> group{start}, stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
          if (seen.insert(y).second) {
            group.push_back(y);
            stack.push_back(y);
          }
        }
      }
      if (group.size() < 3) continue;
      std::sort(group.begin(), group.end());

      GadgetMap step;
      const std::size_t k = group.size(), ts = tau.size();
      ComponentNode beta;
      beta.kind = NodeKind::CType;
      beta.is_beta = true;
      for (VertexId x : tau) beta.graph.add_vertex(x);
      std::vector<std::vector<VertexId>> leaves(k);  // leaves[j][i] = x_i^j
      std::vector<std::vector<EdgeId>> stars(k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < ts; ++i) {
          VertexId x = fresh.vertex++;
          EdgeId s = fresh.real++;
          leaves[j].push_back(x);
          stars[j].push_back(s);
          step.origin[x] = tau[i];
          beta.graph.add_edge(s, tau[i], x, EdgeTag::Real);
        }
      }
      for (std::size_t j = 0; j < k; ++j) {
        ComponentNode& node = t.nodes[group[j]];
        // real edges inside tau move into beta
        Graph kept;
        for (VertexId x : node.graph.vertices()) kept.add_vertex(x);
        for (const Edge& e : node.graph.edges()) {
          if (e.is_real() && contains(tau, e.u) && contains(tau, e.v)) {
            beta.graph.add_edge(e.id, e.u, e.v, EdgeTag::Real);
          } else {
            kept.add_edge(e.id, e.u, e.v, e.tag);
          }
        }
        node.graph = std::move(kept);
        for (std::size_t i = 0; i < ts; ++i) {
          for (const Edge& e : node.graph.edges()) {
            if (e.is_real() && (e.u == tau[i] || e.v == tau[i])) {
              record_rename(step, e, tau[i], stars[j][i]);
            }
          }
          rename_in_node(node, tau[i], leaves[j][i]);
        }
        std::sort(leaves[j].begin(), leaves[j].end());
      }
      add_virtual_clique(beta.graph, tau, fresh.virt);
      for (std::size_t j = 0; j < k; ++j) add_virtual_clique(beta.graph, leaves[j], fresh.virt);

      TreeDecomp td;
      Bag b0;
      b0.vertices = tau;
      td.bags.push_back(b0);
      for (std::size_t j = 0; j < k; ++j) {
        Bag bj;
        bj.vertices = tau;
        bj.vertices.insert(bj.vertices.end(), leaves[j].begin(), leaves[j].end());
        std::sort(bj.vertices.begin(), bj.vertices.end());
        td.bags.push_back(bj);
        td.edges.emplace_back(0, static_cast<int>(j + 1));
      }
      td.root = 0;
      beta.width = td.width();
      beta.decomposition = std::move(td);

      int beta_id = static_cast<int>(t.nodes.size());
      t.nodes.push_back(std::move(beta));
      std::set<int> in_group(group.begin(), group.end());
      std::vector<TreeLink> links;
      for (const TreeLink& l : t.links) {
        if (l.sep == tau && in_group.count(l.a) && in_group.count(l.b)) continue;
        links.push_back(l);
      }
      for (std::size_t j = 0; j < k; ++j) links.push_back({beta_id, group[j], leaves[j]});
      t.links = std::move(links);
      total = total.then(step);
      return true;
    }
  }
  return false;
}

}  // namespace

GadgetResult split_shared_vertices(ComponentTree t) {
  Fresh fresh(t);
  GadgetMap map;
  while (split_one(t, fresh, map)) {
  }
  return {std::move(t), std::move(map)};
}

GadgetResult dedupe_separating_sets(ComponentTree t) {
  Fresh fresh(t);
  GadgetMap map;
  while (dedupe_one(t, fresh, map)) {
  }
  return {std::move(t), std::move(map)};
}

bool stars_planar(const ComponentTree& t, int node) {
  Graph h;
  const Graph& g = t.nodes[node].graph;
  for (VertexId v : g.vertices()) h.add_vertex(v);
  for (const Edge& e : g.edges()) {
    if (!h.find_edge(e.u, e.v)) h.add_edge(e.u, e.v);
  }
  VertexId x = 0;
  for (VertexId v : g.vertices()) x = std::max(x, v + 1);
  for (const auto& sep : t.separating_sets(node)) {
    for (VertexId v : sep) h.add_edge(x, v);
    ++x;
  }
  return is_planar(h);
}

namespace {

/// Splits p-type node d along the separating triple tau.
void split_node(ComponentTree& t, int d, const std::vector<VertexId>& tau, EdgeId& next_virtual) {
  const Graph g = t.nodes[d].graph;
  auto comps = components_without(g, tau);
  std::vector<int> ids{d};
  std::vector<Graph> parts;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::set<VertexId> keep(comps[c].begin(), comps[c].end());
    keep.insert(tau.begin(), tau.end());
    Graph part;
    for (VertexId v : g.vertices()) {
      if (keep.count(v)) part.add_vertex(v);
    }
    for (const Edge& e : g.edges()) {
      if (!keep.count(e.u) || !keep.count(e.v)) continue;
      bool inside = contains(tau, e.u) && contains(tau, e.v);
      if (inside && (!e.is_real() || c != 0)) continue;
      part.add_edge(e.id, e.u, e.v, e.tag);
    }
    add_virtual_clique(part, tau, next_virtual);
    parts.push_back(std::move(part));
  }
  std::vector<int> node_of(parts.size());
  node_of[0] = d;
  t.nodes[d].graph = std::move(parts[0]);
  for (std::size_t c = 1; c < parts.size(); ++c) {
    ComponentNode n;
    n.kind = NodeKind::PType;
    n.graph = std::move(parts[c]);
    node_of[c] = static_cast<int>(t.nodes.size());
    t.nodes.push_back(std::move(n));
  }
  for (TreeLink& l : t.links) {
    int* end = l.a == d ? &l.a : (l.b == d ? &l.b : nullptr);
    if (!end || l.sep == tau) continue;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      bool fits = std::all_of(l.sep.begin(), l.sep.end(), [&](VertexId v) {
        return contains(tau, v) || std::binary_search(comps[c].begin(), comps[c].end(), v);
      });
      if (fits) {
        *end = node_of[c];
        break;
      }
    }
  }
  for (std::size_t c = 1; c < parts.size(); ++c) t.links.push_back({d, node_of[c], tau});
}

}  // namespace

ComponentTree enforce_facial_virtual_triangles(ComponentTree t, bool repair) {
  EdgeId next_virtual = t.next_virtual_id();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t d = 0; d < t.nodes.size() && !changed; ++d) {
      if (t.nodes[d].kind != NodeKind::PType || stars_planar(t, static_cast<int>(d))) continue;
      const Graph& g = t.nodes[d].graph;
      std::vector<VertexId> cut;
      for (const auto& sep : t.separating_sets(static_cast<int>(d))) {
        if (sep.size() == 3 && components_without(g, sep).size() > 1) {
          cut = sep;
          break;
        }
      }
      std::string where = "p-type node " + std::to_string(d);
      if (cut.empty()) {
        throw StructuralError(where + " has virtual triangles that cannot all be faces", where);
      }
      if (!repair) {
        throw StructuralError(where + " has a non-facial virtual triangle",
                              "[" + std::to_string(cut[0]) + "," + std::to_string(cut[1]) + "," +
                                  std::to_string(cut[2]) + "]");
      }
      split_node(t, static_cast<int>(d), cut, next_virtual);
      changed = true;
    }
  }
  return t;
}

GadgetResult normalize(ComponentTree t, bool repair_facial) {
  GadgetMap map;
  for (int round = 0;; ++round) {
    if (round > 1000) throw StructuralError("normalization does not converge");
    t = enforce_facial_virtual_triangles(std::move(t), repair_facial);
    auto a = split_shared_vertices(std::move(t));
    auto b = dedupe_separating_sets(std::move(a.tree));
    t = enforce_facial_virtual_triangles(std::move(b.tree), repair_facial);
    bool quiet = a.map.paths.empty() && a.map.origin.empty() && b.map.paths.empty() &&
                 b.map.origin.empty();
    map = map.then(a.map).then(b.map);
    if (quiet && check_disjoint_separating_sets(t).empty() && check_sets_shared_by_two(t).empty()) {
      break;
    }
  }
  for (std::size_t d = 0; d < t.nodes.size(); ++d) {
    if (t.nodes[d].kind == NodeKind::PType && !is_planar(t.nodes[d].graph)) {
      throw StructuralError("p-type node " + std::to_string(d) + " lost planarity");
    }
  }
  return {std::move(t), std::move(map)};
}

std::string check_disjoint_separating_sets(const ComponentTree& t) {
  for (std::size_t d = 0; d < t.nodes.size(); ++d) {
    auto sets = t.separating_sets(static_cast<int>(d));
    std::set<VertexId> seen;
    for (const auto& s : sets) {
      for (VertexId v : s) {
        if (!seen.insert(v).second) {
          return "vertex " + std::to_string(v) + " lies in two separating sets of node " +
                 std::to_string(d);
        }
      }
    }
  }
  return "";
}

std::string check_sets_shared_by_two(const ComponentTree& t) {
  std::map<std::vector<VertexId>, std::set<int>> holders;
  for (const auto& l : t.links) {
    holders[l.sep].insert(l.a);
    holders[l.sep].insert(l.b);
  }
  for (const auto& [sep, nodes] : holders) {
    if (nodes.size() > 2) {
      return "a separating set is shared by " + std::to_string(nodes.size()) + " nodes";
    }
  }
  return "";
}

std::string check_facial_triangles(const ComponentTree& t) {
  for (std::size_t d = 0; d < t.nodes.size(); ++d) {
    if (t.nodes[d].kind == NodeKind::PType && !stars_planar(t, static_cast<int>(d))) {
      return "p-type node " + std::to_string(d) + " has a non-facial virtual triangle";
    }
  }
  return "";
}

}  // namespace nzc
