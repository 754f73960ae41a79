#include "compact.hpp"

#include <algorithm>
#include <vector>

#include "error.hpp"

namespace mwpsp::detail {

unsigned CompactTriangulation::triple_rank(VertexId a, VertexId b, VertexId c) {
  // Combinatorial number system on zero-based sorted corners.
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  const unsigned x = a - 1, y = b - 1, z = c - 1;
  return x + y * (y - 1) / 2 + z * (z - 1) * (z - 2) / 6;
}

namespace {

struct PairTable {
  std::array<std::uint8_t, 64> lo{};
  std::array<std::uint8_t, 64> hi{};
};

const PairTable& pair_table(VertexId n) {
  static const auto tables = [] {
    std::array<PairTable, CompactTriangulation::kMaxVertices + 1> all{};
    for (VertexId m = 2; m <= CompactTriangulation::kMaxVertices; ++m) {
      for (VertexId a = 1; a <= m; ++a) {
        for (VertexId b = a + 1; b <= m; ++b) {
          const std::size_t r = pair_rank(m, a, b);
          all[m].lo[r] = static_cast<std::uint8_t>(a);
          all[m].hi[r] = static_cast<std::uint8_t>(b);
        }
      }
    }
    return all;
  }();
  return tables[n];
}

}  // namespace

Edge CompactTriangulation::edge_at(unsigned rank) const {
  const PairTable& t = pair_table(n_);
  return Edge(t.lo[rank], t.hi[rank]);
}

CompactTriangulation::CompactTriangulation(const Triangulation& g)
    : n_(static_cast<std::uint8_t>(std::min<VertexId>(g.vertex_count(), 255))) {
  if (g.vertex_count() > kMaxVertices) {
    throw Error(Errc::n_out_of_range, "compact form supports at most 10 vertices");
  }
  for (const Edge& e : g.edges()) set_edge(e.lo(), e.hi(), true);
  for (const Face& f : g.faces()) faces_ |= FaceMask{1} << triple_rank(f[0], f[1], f[2]);
}

void CompactTriangulation::set_edge(VertexId a, VertexId b, bool present) {
  const std::uint64_t bit = std::uint64_t{1} << pair_rank(n_, a, b);
  if (present) {
    adj_[a] |= static_cast<std::uint16_t>(1U << b);
    adj_[b] |= static_cast<std::uint16_t>(1U << a);
    edges_ |= bit;
  } else {
    adj_[a] &= static_cast<std::uint16_t>(~(1U << b));
    adj_[b] &= static_cast<std::uint16_t>(~(1U << a));
    edges_ &= ~bit;
  }
}

std::pair<VertexId, VertexId> CompactTriangulation::opposite(VertexId a, VertexId b) const {
  unsigned common = adj_[a] & adj_[b];
  VertexId found[2] = {0, 0};
  int k = 0;
  while (common != 0 && k < 2) {
    const auto c = static_cast<VertexId>(std::countr_zero(common));
    common &= common - 1;
    if (has_face(a, b, c)) found[k++] = c;
  }
  return {found[0], found[1]};
}

Edge CompactTriangulation::added_by_flip(VertexId a, VertexId b) const {
  auto [c, d] = opposite(a, b);
  if (!has_edge(c, d)) return Edge(c, d);
  auto [e, f] = opposite(c, d);
  return Edge(e, f);
}

Edge CompactTriangulation::flip(VertexId a, VertexId b) {
  auto bit = [](VertexId x, VertexId y, VertexId z) { return FaceMask{1} << triple_rank(x, y, z); };
  auto [c, d] = opposite(a, b);
  if (!has_edge(c, d)) {
    faces_ &= ~(bit(a, b, c) | bit(a, b, d));
    faces_ |= bit(a, c, d) | bit(b, c, d);
    set_edge(a, b, false);
    set_edge(c, d, true);
    return Edge(c, d);
  }
  auto [e, f] = opposite(c, d);
  if (has_edge(e, f)) {
    throw Error(Errc::internal_contradiction, "second-case flip target already present");
  }
  faces_ &= ~(bit(a, b, c) | bit(a, b, d) | bit(c, d, e) | bit(c, d, f));
  faces_ |= bit(a, c, d) | bit(b, c, d) | bit(c, e, f) | bit(d, e, f);
  set_edge(a, b, false);
  set_edge(e, f, true);
  return Edge(e, f);
}

Triangulation CompactTriangulation::expand(Validation validation) const {
  std::vector<Face> faces;
  for (VertexId c = 3; c <= n_; ++c) {
    for (VertexId b = 2; b < c; ++b) {
      for (VertexId a = 1; a < b; ++a) {
        if (has_face(a, b, c)) faces.emplace_back(a, b, c);
      }
    }
  }
  return Triangulation::build(n_, std::move(faces), validation);
}

}  // namespace mwpsp::detail
