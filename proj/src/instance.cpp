#include "instance.hpp"

#include <algorithm>

#include "error.hpp"

namespace mwpsp {

WeightedInstance::WeightedInstance(VertexId n) : n_(n), dense_(pair_count(n)) {}

WeightedInstance::WeightedInstance(VertexId n, std::span<const Entry> entries)
    : WeightedInstance(n) {
  std::vector<bool> seen(dense_.size(), false);
  for (const auto& [edge, w] : entries) {
    check_vertex(edge.hi());
    if (w < Weight{}) {
      throw Error(Errc::invalid_argument, "negative weight on " + to_string(edge));
    }
    const std::size_t r = pair_rank(n_, edge);
    if (seen[r]) throw Error(Errc::duplicate_edge, "pair " + to_string(edge) + " listed twice");
    seen[r] = true;
    dense_[r] = w;
  }
}

void WeightedInstance::check_vertex(VertexId v) const {
  if (v < 1 || v > n_) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

Weight WeightedInstance::weight(const Edge& e) const {
  check_vertex(e.hi());
  return dense_[pair_rank(n_, e)];
}

std::vector<WeightedInstance::Entry> WeightedInstance::positive_entries() const {
  std::vector<Entry> out;
  for (VertexId a = 1; a <= n_; ++a) {
    for (VertexId b = a + 1; b <= n_; ++b) {
      Weight w = dense_[pair_rank(n_, a, b)];
      if (w > Weight{}) out.emplace_back(Edge(a, b), w);
    }
  }
  return out;
}

Weight WeightedInstance::max_weight() const {
  return dense_.empty() ? Weight{} : *std::max_element(dense_.begin(), dense_.end());
}

Weight WeightedInstance::total(std::span<const Edge> edges) const {
  Weight sum;
  for (const Edge& e : edges) sum += weight(e);
  return sum;
}

WeightedInstance operator+(const WeightedInstance& a, const WeightedInstance& b) {
  if (a.n_ != b.n_) throw Error(Errc::size_mismatch, "instances differ in vertex count");
  WeightedInstance out(a.n_);
  for (std::size_t i = 0; i < out.dense_.size(); ++i) out.dense_[i] = a.dense_[i] + b.dense_[i];
  return out;
}

}  // namespace mwpsp
