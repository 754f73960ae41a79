#include "planarity.hpp"

#include <algorithm>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "error.hpp"

namespace mwpsp {
namespace {

void check_simple(VertexId n, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::invalid_argument, "edge set contains a repeated edge");
  }
  for (const Edge& e : sorted) {
    if (e.hi() > n) {
      throw Error(Errc::vertex_out_of_range, "edge " + to_string(e) + " outside 1.." + std::to_string(n));
    }
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_planar(VertexId n, std::span<const Edge> edges) {
  check_simple(n, edges);
  if (n >= 3 && edges.size() > 3 * static_cast<std::size_t>(n) - 6) return false;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>>;
  Graph g(n);
  for (const Edge& e : edges) boost::add_edge(e.lo() - 1, e.hi() - 1, g);
  return boost::boyer_myrvold_planarity_test(g);
}

bool is_connected(VertexId n, std::span<const Edge> edges) {
  if (n == 0) return true;
  DisjointSets sets(n + 1);
  std::size_t components = n;
  for (const Edge& e : edges) {
    if (sets.unite(e.lo(), e.hi())) --components;
  }
  return components == 1;
}

bool is_maximal_planar(VertexId n, std::span<const Edge> edges) {
  if (n < 3) return false;
  return edges.size() == 3 * static_cast<std::size_t>(n) - 6 && is_connected(n, edges) &&
         is_planar(n, edges);
}

SpanningTree::SpanningTree(VertexId n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  check_simple(n, edges_);
  if (n == 0 || edges_.size() != n - 1 || !is_connected(n, edges_)) {
    throw Error(Errc::invalid_argument, "edges do not form a spanning tree of 1.." + std::to_string(n));
  }
}

SpanningTree maximum_spanning_tree(const WeightedInstance& instance, bool zero_fill) {
  const VertexId n = instance.vertex_count();
  std::vector<WeightedInstance::Entry> candidates;
  for (VertexId a = 1; a <= n; ++a) {
    for (VertexId b = a + 1; b <= n; ++b) {
      Weight w = instance.weight(a, b);
      if (zero_fill || w > Weight{}) candidates.emplace_back(Edge(a, b), w);
    }
  }
  // Candidates are already lexicographic, so a stable sort keeps that order among ties.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });

  DisjointSets sets(n + 1);
  std::vector<Edge> chosen;
  for (const auto& [edge, w] : candidates) {
    if (chosen.size() + 1 == n) break;
    if (sets.unite(edge.lo(), edge.hi())) chosen.push_back(edge);
  }
  if (n == 0 || chosen.size() + 1 != n) {
    throw Error(Errc::disconnected, "positive-weight pairs do not connect all vertices");
  }
  return SpanningTree(n, std::move(chosen));
}

}  // namespace mwpsp
