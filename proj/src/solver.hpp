#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"
#include "moves.hpp"
#include "planarity.hpp"
#include "triangulation.hpp"

namespace mwpsp {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;
inline constexpr std::size_t kDefaultOptimaCap = 100'000;

struct SolveReport {
  std::string method;
  std::optional<std::uint64_t> seed;
  Weight best_weight;
  /// Optimal (or final) graphs, lexicographically sorted by edge list.
  std::vector<Triangulation> best_graphs;
  /// Number of optima before capping.
  std::uint64_t optima_count = 0;
  bool capped = false;
  /// Distinct triangulations examined.
  std::uint64_t explored = 0;
  std::optional<MoveSequence> trace;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// The 8-vertex instance whose unique maximum spanning tree, the path
/// 1-2-...-8, lies in no optimal planar subgraph.
WeightedInstance counterexample_instance();

/// Path 1-2-...-8.
SpanningTree counterexample_path();

/// The 18 edges of a weight-24 optimum of counterexample_instance().
std::vector<Edge> counterexample_optimum_edges();

/// Breadth-first closure under edge substitution from stacked_triangulation(n),
/// deduplicated by edge set; visits every labeled triangulation of {1..n}
/// once and returns the count. Errors: n_out_of_range (n outside 4..9),
/// budget_exceeded.
std::uint64_t enumerate_triangulations(VertexId n, std::uint64_t budget,
                                       const std::function<void(const Triangulation&)>& visit);

std::uint64_t count_triangulations(VertexId n, std::uint64_t budget = kDefaultBudget);

struct ExactOptions {
  /// Only triangulations containing all of these edges are feasible.
  std::vector<Edge> forced;
  std::size_t cap = kDefaultOptimaCap;
  std::uint64_t budget = kDefaultBudget;
};

/// Exhaustive maximum-weight triangulation. Errors: n_out_of_range,
/// budget_exceeded, no_feasible.
SolveReport exact_mwpsp(const WeightedInstance& instance, const ExactOptions& options = {});

/// True when no optimum contains every edge of `tree`.
bool verify_proposition4(const WeightedInstance& instance, const SpanningTree& tree,
                         std::uint64_t budget = kDefaultBudget);

/// Maximum spanning tree, then every other pair by descending weight (ties
/// lexicographic), kept when the graph stays planar.
Triangulation mst_greedy(const WeightedInstance& instance);

struct AnnealSchedule {
  /// <= 0 selects the instance's maximum edge weight.
  double start_temperature = 0.0;
  double cooling = 0.95;
  /// Stop once the temperature drops below start * stop_fraction.
  double stop_fraction = 1e-3;
};

struct SearchPolicy {
  enum class Kind { steepest, first_improvement, anneal };
  Kind kind = Kind::steepest;
  AnnealSchedule schedule;
  std::uint64_t seed = 0;
};

/// Hill climbing over edge substitutions. Steepest takes the largest gain
/// (first edge on ties), first-improvement the first gaining edge in
/// lexicographic order; both stop at a flip-local optimum. Annealing returns
/// the best graph seen. The trace replays from `start` to the result.
SolveReport local_search(const Triangulation& start, const WeightedInstance& instance,
                         const SearchPolicy& policy);

/// mst_greedy followed by an optional local search.
SolveReport solve_heuristic(const WeightedInstance& instance, std::optional<SearchPolicy> improve);

const char* policy_name(SearchPolicy::Kind kind);

}  // namespace mwpsp
