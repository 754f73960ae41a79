#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mwpsp {

enum class Errc {
  invalid_argument,
  parse_error,
  duplicate_edge,
  index_out_of_range,
  euler_violation,
  non_manifold,
  not_planar,
  disconnected,
  duplicate_face,
  invalid_face,
  vertex_out_of_range,
  edge_not_present,
  face_not_present,
  degree_not_3,
  too_small,
  size_mismatch,
  no_path,
  internal_contradiction,
  no_feasible,
  n_out_of_range,
  budget_exceeded,
  search_exhausted,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// C API reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

  /// Position of the failing move when raised while replaying a sequence.
  std::optional<std::size_t> move_index() const noexcept { return move_index_; }

  Error at_move(std::size_t index) const;

 private:
  Errc code_;
  std::optional<std::size_t> move_index_;
};

}  // namespace mwpsp
