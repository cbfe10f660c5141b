#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "plumbstein/plumbing.hpp"

namespace plumbstein {

/// Closed walk bounding a face: vertices[i] -- edges[i] -- vertices[i+1].
struct Face {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  bool operator==(const Face&) const = default;
};

struct PlanarEmbedding {
  /// Cyclic order of incident edge indices around each vertex.
  std::vector<std::vector<std::size_t>> rotation;
  std::vector<Face> faces;
  std::size_t outer_face = 0;

  bool operator==(const PlanarEmbedding&) const = default;
};

/// Edges of a Kuratowski subgraph. With valence <= 3 this is always a
/// subdivided K3,3; `is_k33` is set when the input graph is K3,3 itself.
struct NonplanarCertificate {
  std::vector<std::size_t> edges;
  bool is_k33 = false;

  bool operator==(const NonplanarCertificate&) const = default;
};

bool is_k33(const PlumbingGraph& g);

/// Faces traced from a rotation system, outer face chosen canonically.
PlanarEmbedding embedding_from_rotation(const PlumbingGraph& g, std::vector<std::vector<std::size_t>> rotation);

/// Faces ordered for use as the outer face: longest boundary first, then the
/// face containing the earliest vertex, then face index.
std::vector<std::size_t> outer_face_candidates(const PlanarEmbedding& emb);

std::variant<PlanarEmbedding, NonplanarCertificate> planar_embed(const PlumbingGraph& g);

struct DualEdge {
  std::size_t a;
  std::size_t b;
  std::size_t primal;

  bool operator==(const DualEdge&) const = default;
};

struct DualGraph {
  std::size_t face_count = 0;
  std::size_t outer = 0;
  std::vector<DualEdge> edges;

  /// Faces sharing at least one primal edge with f, ascending.
  std::vector<std::size_t> adjacent(std::size_t f) const;
  bool operator==(const DualGraph&) const = default;
};

DualGraph dual_graph(const PlanarEmbedding& emb);

struct HamPath {
  std::vector<std::size_t> faces;
  /// crossed[k] is the smallest primal edge shared by faces[k] and faces[k+1].
  std::vector<std::size_t> crossed;

  bool operator==(const HamPath&) const = default;
};

/// Hamiltonian path of the dual ending at d.outer. Built backwards from the
/// outer face, peeling the smallest adjacent face that keeps the rest
/// connected, with backtracking when that greedy choice dead-ends.
/// Throws SearchExhausted when no such path exists.
HamPath hamiltonian_path(const DualGraph& d);

}  // namespace plumbstein
