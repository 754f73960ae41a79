#include "types.hpp"

#include <algorithm>

#include "error.hpp"

namespace mwpsp {

Edge::Edge(VertexId a, VertexId b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) throw Error(Errc::invalid_argument, "loop edge at vertex " + std::to_string(a));
  if (lo_ == 0) throw Error(Errc::invalid_argument, "vertex ids are 1-based");
}

Face::Face(VertexId a, VertexId b, VertexId c) : corners_{a, b, c} {
  std::sort(corners_.begin(), corners_.end());
  if (corners_[0] == 0 || corners_[0] == corners_[1] || corners_[1] == corners_[2]) {
    throw Error(Errc::invalid_face, "face corners must be three distinct 1-based ids: " +
                                        std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c));
  }
}

VertexId Face::opposite(const Edge& e) const {
  for (VertexId v : corners_) {
    if (!e.contains(v)) return v;
  }
  return 0;
}

std::array<Edge, 3> Face::edges() const {
  return {Edge(corners_[0], corners_[1]), Edge(corners_[0], corners_[2]),
          Edge(corners_[1], corners_[2])};
}

std::string to_string(const Edge& e) { return std::to_string(e.lo()) + "-" + std::to_string(e.hi()); }

std::string to_string(const Face& f) {
  return "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + "}";
}

}  // namespace mwpsp
