#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <unordered_set>

#include "compact.hpp"
#include "error.hpp"

namespace mwpsp {
namespace {

using detail::CompactTriangulation;

constexpr VertexId kMinEnumerable = 4;
constexpr VertexId kMaxEnumerable = 9;

void check_enumerable(VertexId n) {
  if (n < kMinEnumerable || n > kMaxEnumerable) {
    throw Error(Errc::n_out_of_range,
                "exhaustive search supports 4 <= n <= 9, got n = " + std::to_string(n));
  }
}

template <class Visit>
std::uint64_t flip_closure(VertexId n, std::uint64_t budget, Visit&& visit) {
  check_enumerable(n);
  const CompactTriangulation start(stacked_triangulation(n));
  std::unordered_set<std::uint64_t> seen{start.edge_mask()};
  std::deque<CompactTriangulation> queue{start};
  std::uint64_t count = 0;
  while (!queue.empty()) {
    const CompactTriangulation cur = queue.front();
    queue.pop_front();
    if (++count > budget) {
      throw Error(Errc::budget_exceeded,
                  "more than " + std::to_string(budget) + " triangulations");
    }
    visit(cur);
    if (n < 5) continue;
    std::uint64_t remaining = cur.edge_mask();
    while (remaining != 0) {
      const auto rank = static_cast<unsigned>(std::countr_zero(remaining));
      remaining &= remaining - 1;
      const Edge e = cur.edge_at(rank);
      CompactTriangulation child = cur;
      child.flip(e.lo(), e.hi());
      if (seen.insert(child.edge_mask()).second) queue.push_back(child);
    }
  }
  return count;
}

struct MaskWeights {
  MaskWeights(const WeightedInstance& instance) {
    for (std::size_t r = 0; r < pair_count(instance.vertex_count()); ++r) {
      by_rank.push_back(instance.weight_at_rank(r).units());
    }
  }
  std::int64_t operator()(std::uint64_t mask) const {
    std::int64_t sum = 0;
    while (mask != 0) {
      sum += by_rank[static_cast<std::size_t>(std::countr_zero(mask))];
      mask &= mask - 1;
    }
    return sum;
  }
  std::vector<std::int64_t> by_rank;
};

std::uint64_t edge_mask_of(VertexId n, std::span<const Edge> edges) {
  std::uint64_t mask = 0;
  for (const Edge& e : edges) {
    if (e.hi() > n) {
      throw Error(Errc::vertex_out_of_range, "edge " + to_string(e) + " outside 1.." + std::to_string(n));
    }
    const std::uint64_t bit = std::uint64_t{1} << pair_rank(n, e);
    if (mask & bit) throw Error(Errc::invalid_argument, "edge " + to_string(e) + " listed twice");
    mask |= bit;
  }
  return mask;
}

}  // namespace

WeightedInstance counterexample_instance() {
  std::vector<WeightedInstance::Entry> entries;
  for (VertexId v = 1; v < 8; ++v) entries.emplace_back(Edge(v, v + 1), Weight::from_integer(2));
  const std::pair<VertexId, VertexId> ones[] = {{1, 3}, {1, 4}, {1, 5}, {1, 8}, {2, 5}, {2, 6},
                                                {2, 8}, {3, 6}, {3, 8}, {4, 6}, {4, 7}, {5, 7}};
  for (auto [a, b] : ones) entries.emplace_back(Edge(a, b), Weight::from_integer(1));
  return WeightedInstance(8, entries);
}

SpanningTree counterexample_path() {
  std::vector<Edge> path;
  for (VertexId v = 1; v < 8; ++v) path.emplace_back(v, v + 1);
  return SpanningTree(8, std::move(path));
}

std::vector<Edge> counterexample_optimum_edges() {
  const std::pair<VertexId, VertexId> bold[] = {
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 8}, {2, 3}, {2, 5}, {2, 6}, {2, 8},
      {3, 4}, {3, 6}, {3, 8}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
  std::vector<Edge> edges;
  for (auto [a, b] : bold) edges.emplace_back(a, b);
  return edges;
}

std::uint64_t enumerate_triangulations(VertexId n, std::uint64_t budget,
                                       const std::function<void(const Triangulation&)>& visit) {
  return flip_closure(n, budget, [&](const CompactTriangulation& t) { visit(t.expand()); });
}

std::uint64_t count_triangulations(VertexId n, std::uint64_t budget) {
  return flip_closure(n, budget, [](const CompactTriangulation&) {});
}

SolveReport exact_mwpsp(const WeightedInstance& instance, const ExactOptions& options) {
  const VertexId n = instance.vertex_count();
  check_enumerable(n);
  const std::uint64_t forced = edge_mask_of(n, options.forced);
  const MaskWeights weigh(instance);

  std::optional<std::int64_t> best;
  std::vector<CompactTriangulation> optima;
  const std::uint64_t explored = flip_closure(n, options.budget, [&](const CompactTriangulation& t) {
    if ((t.edge_mask() & forced) != forced) return;
    const std::int64_t w = weigh(t.edge_mask());
    if (!best || w > *best) {
      best = w;
      optima.clear();
    }
    if (w == *best) optima.push_back(t);
  });
  if (!best) throw Error(Errc::no_feasible, "no triangulation contains every forced edge");

  std::sort(optima.begin(), optima.end(), [](const auto& a, const auto& b) {
    return detail::mask_less(a.edge_mask(), b.edge_mask());
  });
  SolveReport report;
  report.method = "exact";
  report.best_weight = Weight::from_units(*best);
  report.optima_count = optima.size();
  report.capped = optima.size() > options.cap;
  report.explored = explored;
  optima.resize(std::min(optima.size(), options.cap), optima.front());
  for (const auto& t : optima) report.best_graphs.push_back(t.expand());
  return report;
}

bool verify_proposition4(const WeightedInstance& instance, const SpanningTree& tree,
                         std::uint64_t budget) {
  const VertexId n = instance.vertex_count();
  if (tree.vertex_count() != n) throw Error(Errc::size_mismatch, "tree and instance differ in n");
  check_enumerable(n);
  const std::uint64_t tree_mask = edge_mask_of(n, tree.edges());
  const MaskWeights weigh(instance);

  std::optional<std::int64_t> best;
  bool optimum_contains_tree = false;
  flip_closure(n, budget, [&](const CompactTriangulation& t) {
    const std::int64_t w = weigh(t.edge_mask());
    const bool contains = (t.edge_mask() & tree_mask) == tree_mask;
    if (!best || w > *best) {
      best = w;
      optimum_contains_tree = contains;
    } else if (w == *best) {
      optimum_contains_tree = optimum_contains_tree || contains;
    }
  });
  return !optimum_contains_tree;
}

Triangulation mst_greedy(const WeightedInstance& instance) {
  const VertexId n = instance.vertex_count();
  if (n < 4) throw Error(Errc::too_small, "construction needs n >= 4");
  const SpanningTree tree = maximum_spanning_tree(instance);
  std::vector<Edge> edges = tree.edges();

  std::vector<WeightedInstance::Entry> candidates;
  for (VertexId a = 1; a <= n; ++a) {
    for (VertexId b = a + 1; b <= n; ++b) {
      const Edge e(a, b);
      if (!std::binary_search(tree.edges().begin(), tree.edges().end(), e)) {
        candidates.emplace_back(e, instance.weight(e));
      }
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });

  const std::size_t full = 3 * static_cast<std::size_t>(n) - 6;
  for (const auto& [e, w] : candidates) {
    if (edges.size() == full) break;
    edges.push_back(e);
    if (!is_planar(n, edges)) edges.pop_back();
  }
  std::sort(edges.begin(), edges.end());
  return Triangulation::from_edges(n, edges);
}

const char* policy_name(SearchPolicy::Kind kind) {
  switch (kind) {
    case SearchPolicy::Kind::steepest: return "steepest";
    case SearchPolicy::Kind::first_improvement: return "first";
    case SearchPolicy::Kind::anneal: return "anneal";
  }
  return "unknown";
}

SolveReport local_search(const Triangulation& start, const WeightedInstance& instance,
                         const SearchPolicy& policy) {
  if (start.vertex_count() != instance.vertex_count()) {
    throw Error(Errc::size_mismatch, "start graph and instance differ in n");
  }
  if (start.vertex_count() < 5) throw Error(Errc::too_small, "local search needs n >= 5");

  auto gain = [&](const Triangulation& g, const Edge& e) {
    return instance.weight(substitution_target(g, e)) - instance.weight(e);
  };

  Triangulation cur = start;
  Weight cur_weight = weight(start, instance);
  MoveSequence trace;
  std::unordered_set<std::string> visited{canonical_key(start)};

  SolveReport report;
  report.method = std::string("local-search:") + policy_name(policy.kind);

  if (policy.kind != SearchPolicy::Kind::anneal) {
    for (;;) {
      std::optional<Edge> pick;
      Weight pick_gain;
      for (const Edge& e : cur.edges()) {
        const Weight g = gain(cur, e);
        if (g > pick_gain) {
          pick = e;
          pick_gain = g;
          if (policy.kind == SearchPolicy::Kind::first_improvement) break;
        }
      }
      if (!pick) break;
      cur = edge_substitute(cur, *pick, Validation::structural).graph;
      cur_weight += pick_gain;
      trace.push_back(Move::flip(*pick));
      visited.insert(canonical_key(cur));
    }
    report.best_weight = cur_weight;
    report.best_graphs.push_back(std::move(cur));
  } else {
    report.seed = policy.seed;
    const double t0 = policy.schedule.start_temperature > 0 ? policy.schedule.start_temperature
                                                            : instance.max_weight().to_double();
    std::mt19937_64 rng(policy.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Triangulation best = cur;
    Weight best_weight = cur_weight;
    std::size_t best_prefix = 0;
    const double stop = t0 * policy.schedule.stop_fraction;
    for (double t = t0; t0 > 0 && t >= stop; t *= policy.schedule.cooling) {
      const std::size_t proposals = cur.edge_count();
      for (std::size_t k = 0; k < proposals; ++k) {
        std::uniform_int_distribution<std::size_t> pick(0, cur.edge_count() - 1);
        const Edge e = cur.edges()[pick(rng)];
        const Weight g = gain(cur, e);
        const double u = unit(rng);
        if (g < Weight{} && u >= std::exp(g.to_double() / t)) continue;
        cur = edge_substitute(cur, e, Validation::structural).graph;
        cur_weight += g;
        trace.push_back(Move::flip(e));
        visited.insert(canonical_key(cur));
        if (cur_weight > best_weight) {
          best = cur;
          best_weight = cur_weight;
          best_prefix = trace.size();
        }
      }
    }
    trace.resize(best_prefix);
    report.best_weight = best_weight;
    report.best_graphs.push_back(std::move(best));
  }
  report.optima_count = 1;
  report.explored = visited.size();
  report.trace = std::move(trace);
  return report;
}

SolveReport solve_heuristic(const WeightedInstance& instance, std::optional<SearchPolicy> improve) {
  const Triangulation start = mst_greedy(instance);
  if (!improve) {
    SolveReport report;
    report.method = "mst-greedy";
    report.best_weight = weight(start, instance);
    report.best_graphs.push_back(start);
    report.optima_count = 1;
    report.explored = 1;
    report.trace = MoveSequence{};
    return report;
  }
  SolveReport report = local_search(start, instance, *improve);
  report.method = "mst-greedy+" + std::string(policy_name(improve->kind));
  return report;
}

}  // namespace mwpsp
