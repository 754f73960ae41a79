#include "error.hpp"

namespace mwpsp {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::euler_violation: return "EulerViolation";
    case Errc::non_manifold: return "NonManifold";
    case Errc::not_planar: return "NotPlanar";
    case Errc::disconnected: return "Disconnected";
    case Errc::duplicate_face: return "DuplicateFace";
    case Errc::invalid_face: return "InvalidFace";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::edge_not_present: return "EdgeNotPresent";
    case Errc::face_not_present: return "FaceNotPresent";
    case Errc::degree_not_3: return "DegreeNot3";
    case Errc::too_small: return "TooSmall";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::no_path: return "NoPath";
    case Errc::internal_contradiction: return "InternalContradiction";
    case Errc::no_feasible: return "NoFeasible";
    case Errc::n_out_of_range: return "nOutOfRange";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::search_exhausted: return "SearchExhausted";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

Error Error::at_move(std::size_t index) const {
  Error annotated(code_, "move " + std::to_string(index) + ": " +
                             std::string(what()).substr(std::string(errc_name(code_)).size() + 2));
  annotated.move_index_ = index;
  return annotated;
}

}  // namespace mwpsp
