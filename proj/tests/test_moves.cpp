#include <doctest.h>

#include "serialize.hpp"
#include "support.hpp"

using namespace mwpsp;
using testing::error_of;
using testing::g5;
using testing::k4;

namespace {

std::vector<Face> sorted(std::vector<Face> f) {
  std::sort(f.begin(), f.end());
  return f;
}

// K4 plus 5 adjacent to {2,3,4}.
Triangulation g5_moved() {
  return Triangulation::build(5, {Face(1, 2, 3), Face(1, 2, 4), Face(1, 3, 4), Face(2, 3, 5),
                                  Face(2, 4, 5), Face(3, 4, 5)});
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("edge substitution, case 1") {
  auto r = edge_substitute(g5(), Edge(1, 2));
  CHECK(r.added == Edge(4, 5));
  CHECK_FALSE(r.graph.has_edge(Edge(1, 2)));
  CHECK(r.graph.faces() == sorted({Face(1, 3, 4), Face(2, 3, 4), Face(1, 3, 5), Face(2, 3, 5),
                                   Face(1, 4, 5), Face(2, 4, 5)}));
}

TEST_CASE("edge substitution, case 2 with a coincident corner") {
  auto g = g5();
  CHECK(g.has_edge(Edge(1, 2)));
  auto r = edge_substitute(g, Edge(3, 4));
  CHECK(r.added == Edge(4, 5));
  CHECK_FALSE(r.graph.has_edge(Edge(3, 4)));
  CHECK(r.graph.faces() == sorted({Face(1, 2, 4), Face(1, 3, 5), Face(2, 3, 5), Face(1, 2, 3),
                                   Face(1, 4, 5), Face(2, 4, 5)}));
  CHECK(substitution_target(g, Edge(3, 4)) == Edge(4, 5));
}

TEST_CASE("edge substitution errors") {
  CHECK(error_of([] { edge_substitute(g5(), Edge(4, 5)); }) == Errc::edge_not_present);
  CHECK(error_of([] { edge_substitute(k4(), Edge(1, 2)); }) == Errc::too_small);
}

TEST_CASE("flips are reversible and change one edge") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    VertexId n = 5 + trial % 10;
    auto g = testing::random_triangulation(n, 2 * n, rng);
    Edge e = g.edges()[std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng)];
    auto r = edge_substitute(g, e);
    CHECK(r.graph.vertex_count() == n);
    CHECK_FALSE(g.has_edge(r.added));
    CHECK(r.graph.has_edge(r.added));
    std::vector<Edge> diff;
    std::set_symmetric_difference(g.edges().begin(), g.edges().end(), r.graph.edges().begin(),
                                  r.graph.edges().end(), std::back_inserter(diff));
    CHECK(diff.size() == 2);
    auto back = edge_substitute(r.graph, r.added);
    CHECK(back.added == e);
    CHECK(back.graph == g);

    auto w = testing::random_instance(n, rng);
    CHECK(weight(r.graph, w) - weight(g, w) == w.weight(r.added) - w.weight(e));
  }
}

TEST_CASE("vertex relocation") {
  auto g = g5();
  CHECK(vertex_relocate(g, 5, Face(2, 3, 4)) == g5_moved());
  CHECK(vertex_relocate(g, 5, Face(1, 2, 5)) == g);
  CHECK(g.degree(4) == 3);
  CHECK(error_of([&] { vertex_relocate(g, 1, Face(2, 3, 4)); }) == Errc::degree_not_3);
  CHECK(error_of([&] { vertex_relocate(g, 5, Face(1, 4, 5)); }) == Errc::face_not_present);
  CHECK(error_of([&] { vertex_relocate(g, 9, Face(1, 2, 5)); }) == Errc::vertex_out_of_range);
}

TEST_CASE("relocation compiler") {
  auto g = g5();
  auto seq = relocation_as_flips(g, 5, Face(2, 3, 4));
  CHECK(seq == MoveSequence{Move::flip(Edge(2, 3)), Move::flip(Edge(1, 5))});
  CHECK(apply_sequence(g, seq) == g5_moved());
  CHECK(relocation_as_flips(g, 5, Face(1, 2, 5)).empty());

  auto s6 = stacked_triangulation(6);
  auto path = relocation_path(s6, 6, Face(2, 3, 4));
  auto seq6 = relocation_as_flips(s6, 6, Face(2, 3, 4));
  CHECK(seq6.size() == 2 * path.length());
  CHECK(apply_sequence(s6, seq6) == vertex_relocate(s6, 6, Face(2, 3, 4)));
}

TEST_CASE("relocation compiler on random inputs") {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    VertexId n = 5 + trial % 8;
    auto g = testing::random_triangulation(n, 3 * n, rng);
    std::vector<VertexId> cubic;
    for (VertexId v = 1; v <= n; ++v)
      if (g.degree(v) == 3) cubic.push_back(v);
    if (cubic.empty()) continue;
    VertexId u = cubic[rng() % cubic.size()];
    Face f = g.faces()[rng() % g.face_count()];
    auto seq = relocation_as_flips(g, u, f);
    CHECK(seq.size() == 2 * relocation_path(g, u, f).length());
    CHECK(apply_sequence(g, seq) == vertex_relocate(g, u, f));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("apply and invert sequences") {
  auto g = g5();
  CHECK(apply_sequence(g, {}) == g);
  try {
    apply_sequence(g, {Move::flip(Edge(1, 2)), Move::flip(Edge(1, 2))});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::edge_not_present);
    CHECK(e.move_index() == std::size_t{1});
  }
  auto at0 = error_of([&] { apply_sequence(g, {Move::flip(Edge(4, 5))}); });
  CHECK(at0 == Errc::edge_not_present);

  CHECK(invert_sequence(g, {Move::flip(Edge(1, 2))}) == MoveSequence{Move::flip(Edge(4, 5))});
  CHECK(invert_sequence(g, {}).empty());
  MoveSequence two{Move::flip(Edge(2, 3)), Move::flip(Edge(1, 5))};
  auto inv = invert_sequence(g, two);
  CHECK(inv == MoveSequence{Move::flip(Edge(2, 3)), Move::flip(Edge(4, 5))});
  CHECK(apply_sequence(apply_sequence(g, two), inv) == g);

  MoveSequence mixed{Move::relocate(5, Face(2, 3, 4)), Move::flip(Edge(1, 2))};
  auto h = apply_sequence(g, mixed);
  CHECK(apply_sequence(h, invert_sequence(g, mixed)) == g);
}

TEST_CASE("transform, exact range") {
  auto g = g5();
  CHECK(transform(g, g).empty());
  CHECK(transform(k4(), k4()).empty());
  auto h = edge_substitute(g, Edge(1, 2)).graph;
  CHECK(transform(g, h) == MoveSequence{Move::flip(Edge(1, 2))});
  CHECK(error_of([&] { transform(g, stacked_triangulation(6)); }) == Errc::size_mismatch);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    VertexId n = 5 + trial % 4;
    auto a = testing::random_triangulation(n, 30, rng);
    auto b = testing::random_triangulation(n, 30, rng);
    auto seq = transform(a, b);
    CHECK(apply_sequence(a, seq) == b);
    CHECK(seq.size() <= transform(a, b, {.exact_max_vertices = 4}).size());
  }
}

TEST_CASE("transform is shortest for nearby graphs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testing::random_triangulation(8, 25, rng);
    auto b = a;
    std::size_t steps = 1 + trial % 3;
    for (std::size_t i = 0; i < steps; ++i)
      b = edge_substitute(b, b.edges()[rng() % b.edge_count()]).graph;
    CHECK(transform(a, b).size() <= steps);
  }
}

TEST_CASE("canonicalization") {
  for (VertexId n : {5u, 9u, 14u}) {
    auto c = canonical_triangulation(n);
    CHECK(c.degree(1) == n - 1);
    CHECK(c.degree(2) == n - 1);
    std::vector<VertexId> ring(n - 1);
    std::iota(ring.begin(), ring.end(), 2);
    CHECK(c.link(1) == ring);
  }
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    VertexId n = 9 + trial % 10;
    auto a = testing::random_triangulation(n, 4 * n, rng);
    auto b = testing::random_triangulation(n, 4 * n, rng);
    CHECK(apply_sequence(a, canonicalize(a)) == canonical_triangulation(n));
    CHECK(apply_sequence(a, transform(a, b)) == b);
  }
  auto big = testing::random_triangulation(12, 60, rng);
  CHECK(error_of([&] { canonicalize(big, 1); }) == Errc::search_exhausted);
}

}
