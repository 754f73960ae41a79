#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include "triangulation.hpp"
#include "types.hpp"

namespace mwpsp::detail {

/// Mutable bitmask triangulation for n <= 10: neighbor masks per vertex, one
/// bit per lexicographic pair for edges and one bit per triple for faces.
/// Flips run in constant time, which is what exhaustive searches need.
class CompactTriangulation {
 public:
  static constexpr VertexId kMaxVertices = 10;
  using FaceMask = unsigned __int128;

  explicit CompactTriangulation(const Triangulation& g);

  VertexId vertex_count() const { return n_; }
  std::uint64_t edge_mask() const { return edges_; }
  FaceMask face_mask() const { return faces_; }

  bool has_edge(VertexId a, VertexId b) const { return (adj_[a] >> b) & 1U; }
  bool has_face(VertexId a, VertexId b, VertexId c) const {
    return (faces_ >> triple_rank(a, b, c)) & 1U;
  }

  std::pair<VertexId, VertexId> opposite(VertexId a, VertexId b) const;

  /// Edge that flipping {a,b} would add, without flipping.
  Edge added_by_flip(VertexId a, VertexId b) const;

  /// Edge substitution in place; returns the added edge. {a,b} must be an
  /// edge and n >= 5.
  Edge flip(VertexId a, VertexId b);

  Triangulation expand(Validation validation = Validation::structural) const;

  /// Lexicographic rank of the i-th bit of edge_mask().
  Edge edge_at(unsigned rank) const;

  static unsigned triple_rank(VertexId a, VertexId b, VertexId c);

 private:
  void set_edge(VertexId a, VertexId b, bool present);

  std::uint8_t n_;
  std::array<std::uint16_t, kMaxVertices + 1> adj_{};
  std::uint64_t edges_ = 0;
  FaceMask faces_ = 0;
};

/// Lexicographic order of sorted edge lists, evaluated on lex-rank masks of
/// equal popcount: the lowest differing bit decides.
inline bool mask_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

}  // namespace mwpsp::detail
