#pragma once

#include <span>
#include <utility>
#include <vector>

#include "types.hpp"
#include "weight.hpp"

namespace mwpsp {

/// Vertex count plus nonnegative pair weights. Pairs not listed weigh zero.
class WeightedInstance {
 public:
  using Entry = std::pair<Edge, Weight>;

  explicit WeightedInstance(VertexId n);
  /// Throws vertex_out_of_range, duplicate_edge, or invalid_argument for a
  /// negative weight.
  WeightedInstance(VertexId n, std::span<const Entry> entries);

  VertexId vertex_count() const { return n_; }

  /// Weight of {a, b}; zero when the pair was not listed.
  Weight weight(const Edge& e) const;
  Weight weight(VertexId a, VertexId b) const { return weight(Edge(a, b)); }

  /// Weight by lexicographic pair rank (see pair_rank).
  Weight weight_at_rank(std::size_t rank) const { return dense_[rank]; }

  /// Pairs with positive weight, lexicographically ordered.
  std::vector<Entry> positive_entries() const;
  Weight max_weight() const;
  Weight total(std::span<const Edge> edges) const;

  friend WeightedInstance operator+(const WeightedInstance& a, const WeightedInstance& b);
  friend bool operator==(const WeightedInstance&, const WeightedInstance&) = default;

 private:
  void check_vertex(VertexId v) const;

  VertexId n_;
  std::vector<Weight> dense_;
};

}  // namespace mwpsp
