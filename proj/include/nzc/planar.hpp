#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nzc/graph.hpp"

namespace nzc {

/// Combinatorial embedding: a rotation system plus the faces it induces.
///
/// Faces are closed walks of directed edges; every directed edge lies on
/// exactly one face. Each connected component (with at least one edge) has
/// its own designated outer face.
struct PlanarEmbedding {
  std::map<VertexId, std::vector<EdgeId>> rotation;
  std::vector<std::vector<DirectedEdge>> faces;
  std::vector<std::size_t> face_component;  // component index per face
  std::vector<std::size_t> outer_faces;     // one per component
  std::map<DirectedEdge, std::size_t> face_of;

  bool is_outer(std::size_t f) const;
  /// Faces whose boundary passes through v.
  std::vector<std::size_t> faces_at(const Graph& g, VertexId v) const;
};

/// Planarity over all edges; parallel edges are collapsed for the test.
bool is_planar(const Graph& g);

/// Embedding of a graph without parallel edges, or nullopt when nonplanar.
/// The outer face of each component is its longest face (lowest index on
/// ties) so that results are deterministic.
std::optional<PlanarEmbedding> embed(const Graph& g);

/// V - E + F == 1 + C for the traced faces (C = components with edges).
bool satisfies_euler(const Graph& g, const PlanarEmbedding& emb);

}  // namespace nzc
