#include "nzc/planar.hpp"

#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "nzc/cycles.hpp"

namespace nzc {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct Converted {
  BoostGraph bg;
  std::vector<EdgeId> edge_ids;  // boost edge index -> our id
};

Converted convert(const Graph& g, bool collapse_parallel) {
  Converted c{BoostGraph(g.num_vertices()), {}};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : g.edges()) {
    std::size_t a = g.vertex_index(e.u), b = g.vertex_index(e.v);
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      if (collapse_parallel) continue;
      throw PreconditionError("embedding requires a graph without parallel edges");
    }
    boost::add_edge(a, b, static_cast<int>(c.edge_ids.size()), c.bg);
    c.edge_ids.push_back(e.id);
  }
  return c;
}

}  // namespace

bool PlanarEmbedding::is_outer(std::size_t f) const {
  return std::find(outer_faces.begin(), outer_faces.end(), f) != outer_faces.end();
}

std::vector<std::size_t> PlanarEmbedding::faces_at(const Graph& g, VertexId v) const {
  std::set<std::size_t> out;
  auto it = rotation.find(v);
  if (it == rotation.end()) return {};
  for (EdgeId e : it->second) {
    DirectedEdge d = g.leaving(e, v);
    out.insert(face_of.at(d));
    out.insert(face_of.at(d.reverse()));
  }
  return {out.begin(), out.end()};
}

bool is_planar(const Graph& g) {
  Converted c = convert(g, true);
  return boost::boyer_myrvold_planarity_test(c.bg);
}

std::optional<PlanarEmbedding> embed(const Graph& g) {
  Converted c = convert(g, false);
  using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
  EmbeddingStorage storage(boost::num_vertices(c.bg));
  auto emb_map = boost::make_iterator_property_map(storage.begin(),
                                                   boost::get(boost::vertex_index, c.bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = c.bg,
                                           boost::boyer_myrvold_params::embedding = emb_map)) {
    return std::nullopt;
  }
  auto eidx = boost::get(boost::edge_index, c.bg);

  PlanarEmbedding emb;
  for (std::size_t i = 0; i < storage.size(); ++i) {
    auto& rot = emb.rotation[g.vertices()[i]];
    for (const BoostEdge& be : storage[i]) rot.push_back(c.edge_ids[eidx[be]]);
  }

  // position of each edge in its endpoints' rotations
  std::map<std::pair<VertexId, EdgeId>, std::size_t> pos;
  for (const auto& [v, rot] : emb.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) pos[{v, rot[i]}] = i;
  }

  std::vector<DirectedEdge> all;
  for (const Edge& e : g.edges()) {
    all.push_back({e.id, false});
    all.push_back({e.id, true});
  }
  for (const DirectedEdge& start : all) {
    if (emb.face_of.count(start)) continue;
    std::size_t f = emb.faces.size();
    std::vector<DirectedEdge> face;
    DirectedEdge d = start;
    do {
      emb.face_of[d] = f;
      face.push_back(d);
      VertexId v = g.head(d);
      const auto& rot = emb.rotation.at(v);
      std::size_t i = pos.at({v, d.edge});
      EdgeId next = rot[(i + 1) % rot.size()];
      d = g.leaving(next, v);
    } while (d != start);
    emb.faces.push_back(std::move(face));
  }

  // components and outer faces
  Graph edges_only;
  for (const Edge& e : g.edges()) edges_only.add_edge(e.id, e.u, e.v, e.tag);
  auto comps = connected_components(edges_only);
  std::map<VertexId, std::size_t> comp_of;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (VertexId v : comps[i]) comp_of[v] = i;
  }
  emb.face_component.resize(emb.faces.size());
  emb.outer_faces.assign(comps.size(), static_cast<std::size_t>(-1));
  for (std::size_t f = 0; f < emb.faces.size(); ++f) {
    std::size_t ci = comp_of.at(g.tail(emb.faces[f].front()));
    emb.face_component[f] = ci;
    std::size_t& best = emb.outer_faces[ci];
    if (best == static_cast<std::size_t>(-1) || emb.faces[f].size() > emb.faces[best].size()) {
      best = f;
    }
  }
  return emb;
}

bool satisfies_euler(const Graph& g, const PlanarEmbedding& emb) {
  std::set<VertexId> touched;
  for (const Edge& e : g.edges()) {
    touched.insert(e.u);
    touched.insert(e.v);
  }
  long v = static_cast<long>(touched.size());
  long e = static_cast<long>(g.num_edges());
  long f = static_cast<long>(emb.faces.size());
  long c = static_cast<long>(emb.outer_faces.size());
  return v - e + f == 1 + c;
}

}  // namespace nzc
