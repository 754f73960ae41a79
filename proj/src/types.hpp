#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace mwpsp {

/// 1-based vertex label.
using VertexId = std::uint32_t;

/// Undirected simple edge, stored with the smaller endpoint first.
class Edge {
 public:
  constexpr Edge() = default;
  /// Throws Errc::invalid_argument for loops or vertex 0.
  Edge(VertexId a, VertexId b);

  constexpr VertexId lo() const { return lo_; }
  constexpr VertexId hi() const { return hi_; }
  constexpr bool contains(VertexId v) const { return v == lo_ || v == hi_; }
  /// The endpoint that is not `v`; `v` must be an endpoint.
  constexpr VertexId other(VertexId v) const { return v == lo_ ? hi_ : lo_; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

 private:
  VertexId lo_ = 0;
  VertexId hi_ = 0;
};

/// Triangular face given by its three corners in ascending order.
class Face {
 public:
  constexpr Face() = default;
  /// Throws Errc::invalid_face unless the corners are three distinct ids >= 1.
  Face(VertexId a, VertexId b, VertexId c);

  constexpr const std::array<VertexId, 3>& corners() const { return corners_; }
  constexpr VertexId operator[](std::size_t i) const { return corners_[i]; }

  constexpr bool contains(VertexId v) const {
    return corners_[0] == v || corners_[1] == v || corners_[2] == v;
  }
  constexpr bool contains(const Edge& e) const { return contains(e.lo()) && contains(e.hi()); }

  /// Corner not on `e`; `e` must be one of the face's edges.
  VertexId opposite(const Edge& e) const;
  std::array<Edge, 3> edges() const;

  friend constexpr auto operator<=>(const Face&, const Face&) = default;

 private:
  std::array<VertexId, 3> corners_{};
};

std::string to_string(const Edge& e);
std::string to_string(const Face& f);

/// Rank of the pair {a, b} among all pairs of {1..n} in lexicographic order.
constexpr std::size_t pair_rank(VertexId n, VertexId a, VertexId b) {
  if (a > b) {
    VertexId t = a;
    a = b;
    b = t;
  }
  return static_cast<std::size_t>(a - 1) * (2 * n - a) / 2 + (b - a - 1);
}

constexpr std::size_t pair_rank(VertexId n, const Edge& e) { return pair_rank(n, e.lo(), e.hi()); }

constexpr std::size_t pair_count(VertexId n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace mwpsp
