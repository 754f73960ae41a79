#pragma once

#include <span>
#include <vector>

#include "instance.hpp"
#include "types.hpp"

namespace mwpsp {

/// Planarity of the simple graph ({1..n}, edges). Throws invalid_argument for
/// repeated edges and vertex_out_of_range for ids above n.
bool is_planar(VertexId n, std::span<const Edge> edges);

/// 3n - 6 edges, connected and planar.
bool is_maximal_planar(VertexId n, std::span<const Edge> edges);

bool is_connected(VertexId n, std::span<const Edge> edges);

/// Edge set of a tree spanning {1..n}.
class SpanningTree {
 public:
  /// Throws invalid_argument unless `edges` is a spanning tree of {1..n}.
  SpanningTree(VertexId n, std::vector<Edge> edges);

  VertexId vertex_count() const { return n_; }
  /// Lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  VertexId n_;
  std::vector<Edge> edges_;
};

/// Kruskal over pairs by descending weight, ties broken lexicographically.
/// With `zero_fill` all pairs are candidates and a tree always exists;
/// without it only positive-weight pairs are used and a disconnected
/// positive support raises Errc::disconnected.
SpanningTree maximum_spanning_tree(const WeightedInstance& instance, bool zero_fill = true);

}  // namespace mwpsp
