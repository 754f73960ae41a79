#pragma once

#include <cstddef>
#include <vector>

#include "triangulation.hpp"
#include "types.hpp"

namespace mwpsp {

/// One transformational move: an edge substitution naming the removed edge,
/// or a vertex relocation naming a degree-3 vertex and its target face.
struct Move {
  enum class Kind { edge_substitution, vertex_relocation };

  Kind kind = Kind::edge_substitution;
  Edge edge;            // edge_substitution
  VertexId vertex = 0;  // vertex_relocation
  Face target;          // vertex_relocation

  static Move flip(const Edge& e) { return Move{Kind::edge_substitution, e, 0, Face{}}; }
  static Move relocate(VertexId u, const Face& f) {
    return Move{Kind::vertex_relocation, Edge{}, u, f};
  }

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

struct FlipResult {
  Triangulation graph;
  Edge added;
};

/// Removes `e` = {a,b} and inserts the other diagonal {c,d} of its 4-cycle
/// when absent; otherwise inserts {e*,f*}, the pair opposite {c,d}, with the
/// four faces around the two diagonals rewired. Errors: too_small,
/// edge_not_present, internal_contradiction.
FlipResult edge_substitute(const Triangulation& g, const Edge& e,
                           Validation validation = Validation::full);

/// The edge edge_substitute(g, e) would add, without building the result.
Edge substitution_target(const Triangulation& g, const Edge& e);

/// Deletes the degree-3 vertex `u` (merging its faces into one) and reinserts
/// it into face `f`. Returns g unchanged when u is a corner of f. Errors:
/// too_small, vertex_out_of_range, degree_not_3, face_not_present.
Triangulation vertex_relocate(const Triangulation& g, VertexId u, const Face& f,
                              Validation validation = Validation::full);

/// Face path the relocation compiler follows: from `f` to the nearest face
/// incident to `u`, never passing through another face incident to `u`. Ties
/// go to the lexicographically smallest incident face.
DualPath relocation_path(const Triangulation& g, VertexId u, const Face& f);

/// Edge substitutions whose replay equals vertex_relocate(g, u, f) exactly.
/// Each step flips the edge {a,b} shared by the last two faces of the path and
/// then {c,u}, moving u one face closer to f; the result has 2 * (path length)
/// moves.
MoveSequence relocation_as_flips(const Triangulation& g, VertexId u, const Face& f);

Triangulation apply_move(const Triangulation& g, const Move& move,
                         Validation validation = Validation::full);

/// Left fold of moves with full validation of every intermediate. A failing
/// move is reported with its index (Error::move_index).
Triangulation apply_sequence(const Triangulation& g, const MoveSequence& moves);

/// Sequence mapping apply_sequence(g, moves) back to g.
MoveSequence invert_sequence(const Triangulation& g, const MoveSequence& moves);

struct TransformOptions {
  /// Exact bidirectional flip-graph search up to this many vertices
  /// (at most 10); canonicalization above it.
  VertexId exact_max_vertices = 8;
  /// Flip budget for one canonicalization; 0 selects 2n^3 + 64.
  std::size_t max_flips = 0;
};

/// Edge substitutions turning g into h. For small n the sequence is a
/// shortest one. Errors: size_mismatch, search_exhausted.
MoveSequence transform(const Triangulation& g, const Triangulation& h,
                       const TransformOptions& options = {});

/// The triangulation every graph is driven to when canonicalizing: vertex 1
/// adjacent to all others, link of 1 equal to the cycle 2,3,..,n, and vertex 2
/// adjacent to every vertex.
Triangulation canonical_triangulation(VertexId n);

/// Edge substitutions from g to canonical_triangulation(n).
MoveSequence canonicalize(const Triangulation& g, std::size_t max_flips = 0);

}  // namespace mwpsp
