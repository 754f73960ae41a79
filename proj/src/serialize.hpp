#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "instance.hpp"
#include "moves.hpp"
#include "planarity.hpp"
#include "solver.hpp"
#include "triangulation.hpp"

namespace mwpsp {

// Instance text: a line "n <N>", then one "u v w" line per weighted pair with
// 1 <= u < v <= N. Blank lines and lines starting with '#' are skipped.

/// Errors carry the 1-based line number: parse_error, duplicate_edge,
/// index_out_of_range.
WeightedInstance parse_instance(std::string_view text);
/// Positive-weight pairs only, lexicographic, exact decimals.
std::string format_instance(const WeightedInstance& instance);

/// Edge list text: one "u v" pair per line, same comment rules.
std::vector<Edge> parse_edge_list(std::string_view text);

/// {"n": N, "faces": [[a,b,c], ...]} with faces sorted.
std::string triangulation_to_json(const Triangulation& g);
/// Full validation of the parsed faces.
Triangulation triangulation_from_json(std::string_view text);

/// [{"op":"flip","edge":[a,b]}, {"op":"relocate","vertex":u,"face":[p,q,r]}]
std::string sequence_to_json(const MoveSequence& moves);
MoveSequence sequence_from_json(std::string_view text);

std::string report_to_json(const SolveReport& report);
SolveReport report_from_json(std::string_view text);

std::string tree_to_json(const SpanningTree& tree, const WeightedInstance& instance);

/// DOT graph with one comment per face, corners listed in a consistent
/// orientation of the sphere.
std::string export_dot(const Triangulation& g);

/// Faces with corners reordered so every edge is traversed in opposite
/// directions by its two faces.
std::vector<std::array<VertexId, 3>> oriented_faces(const Triangulation& g);

}  // namespace mwpsp
