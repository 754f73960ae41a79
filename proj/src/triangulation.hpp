#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "instance.hpp"
#include "types.hpp"
#include "weight.hpp"

namespace mwpsp {

enum class Validation {
  /// Counts, two faces per edge, one link cycle per vertex, connectivity and
  /// an independent planarity test of the edge set.
  full,
  /// Everything except the planarity test. Used on the results of moves,
  /// which always yield valid triangulations, inside hot search loops.
  structural,
};

/// A maximal planar graph on {1..n} together with its triangular faces.
/// Values are immutable; moves build new ones.
class Triangulation {
 public:
  /// Validates and indexes `faces`. Errors: too_small, vertex_out_of_range,
  /// invalid_face, duplicate_face, euler_violation, non_manifold,
  /// disconnected, not_planar.
  static Triangulation build(VertexId n, std::vector<Face> faces,
                             Validation validation = Validation::full);

  /// Recovers the faces of a maximal planar edge set: a triangle is a face
  /// exactly when deleting its corners leaves the graph connected.
  static Triangulation from_edges(VertexId n, std::span<const Edge> edges);

  VertexId vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  /// Lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Lexicographically sorted.
  const std::vector<Face>& faces() const { return faces_; }

  bool has_edge(const Edge& e) const;
  bool has_edge(VertexId a, VertexId b) const { return a != b && has_edge(Edge(a, b)); }
  bool has_face(const Face& f) const;
  std::optional<std::size_t> face_index(const Face& f) const;

  /// The two faces on `e`, in lexicographic order. Throws edge_not_present.
  std::pair<Face, Face> faces_of_edge(const Edge& e) const;
  /// Indices into faces() of the two faces on `e`.
  std::array<std::size_t, 2> face_indices_of_edge(const Edge& e) const;
  /// Third corners of the two faces on `e`, ascending.
  std::pair<VertexId, VertexId> opposite_vertices(const Edge& e) const;

  std::size_t degree(VertexId v) const;
  /// Sorted neighbor ids.
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Neighbors in the cyclic order induced by the faces around `v`, starting
  /// at the smallest and continuing toward the smaller of its two cycle
  /// neighbors. Throws vertex_out_of_range.
  std::vector<VertexId> link(VertexId v) const;

  /// Edge-set and face-set equality.
  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  Triangulation() = default;
  void check_vertex(VertexId v) const;
  std::size_t edge_position(const Edge& e) const;

  VertexId n_ = 0;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::array<std::uint32_t, 2>> edge_faces_;  // parallel to edges_
  std::vector<std::uint32_t> degree_;                     // index 0 unused
};

/// Face adjacency: neighbors[i] lists the faces sharing an edge with faces()[i].
struct DualGraph {
  std::vector<std::array<std::size_t, 3>> neighbors;
};

DualGraph dual_graph(const Triangulation& g);

/// Face sequence f_0 .. f_s in which consecutive faces share an edge.
struct DualPath {
  std::vector<Face> faces;
  std::size_t length() const { return faces.empty() ? 0 : faces.size() - 1; }
};

/// Breadth-first shortest face path from `src` to `dst`. With `avoid`, faces
/// strictly inside the path never contain that vertex; the endpoints may.
/// Throws face_not_present, or no_path when the constraint cuts `dst` off.
DualPath dual_shortest_path(const Triangulation& g, const Face& src, const Face& dst,
                            std::optional<VertexId> avoid = std::nullopt);

/// Sum of instance weights over the edges of g. Throws size_mismatch.
Weight weight(const Triangulation& g, const WeightedInstance& instance);

/// Sorted edge list such as "1-2,1-3,2-3". Equal exactly for equal edge sets.
std::string canonical_key(const Triangulation& g);

/// K4 on {1,2,3,4}, then each k = 5..n placed in the face {1, 2, k-1}.
Triangulation stacked_triangulation(VertexId n);

}  // namespace mwpsp
