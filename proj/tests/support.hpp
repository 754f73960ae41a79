#pragma once

#include <algorithm>
#include <optional>
#include <cstdint>
#include <random>
#include <vector>

#include "error.hpp"
#include "instance.hpp"
#include "moves.hpp"
#include "planarity.hpp"
#include "triangulation.hpp"

namespace testing {

using namespace mwpsp;

// Code of the mwpsp::Error thrown by fn, or nullopt when it returns.
template <class Fn>
std::optional<Errc> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Triangulation k4() {
  return Triangulation::build(4, {Face(1, 2, 4), Face(1, 3, 4), Face(2, 3, 4), Face(1, 2, 3)});
}

// K4 with vertex 5 placed in face {1,2,3}.
inline Triangulation g5() {
  return Triangulation::build(5, {Face(1, 2, 4), Face(1, 3, 4), Face(2, 3, 4), Face(1, 2, 5),
                                  Face(1, 3, 5), Face(2, 3, 5)});
}

inline std::vector<Edge> complete_edges(VertexId n) {
  std::vector<Edge> out;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

inline Triangulation random_triangulation(VertexId n, std::size_t flips, std::mt19937_64& rng) {
  Triangulation g = stacked_triangulation(n);
  if (n < 5) return g;
  for (std::size_t i = 0; i < flips; ++i) {
    const auto& edges = g.edges();
    Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    g = edge_substitute(g, e, Validation::structural).graph;
  }
  return g;
}

// Weights drawn from {0, 0.5, 1, ..., 5}.
inline WeightedInstance random_instance(VertexId n, std::mt19937_64& rng) {
  std::vector<WeightedInstance::Entry> entries;
  std::uniform_int_distribution<int> halves(0, 10);
  for (const Edge& e : complete_edges(n)) {
    int h = halves(rng);
    if (h > 0) entries.emplace_back(e, Weight::from_units(h * Weight::kScale / 2));
  }
  return WeightedInstance(n, entries);
}

// Independent count of labeled triangulations: every (3n-6)-subset of the
// complete graph that is planar.
inline std::uint64_t brute_force_triangulations(VertexId n) {
  auto all = complete_edges(n);
  std::size_t m = 3 * n - 6;
  std::vector<char> pick(all.size(), 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  std::uint64_t count = 0;
  std::vector<Edge> chosen;
  do {
    chosen.clear();
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) chosen.push_back(all[i]);
    if (is_maximal_planar(n, chosen)) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace testing
