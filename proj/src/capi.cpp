#include "mwpsp/mwpsp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "error.hpp"
#include "moves.hpp"
#include "planarity.hpp"
#include "serialize.hpp"
#include "solver.hpp"
#include "triangulation.hpp"

struct mwpsp_triangulation {
  mwpsp::Triangulation value;
};
struct mwpsp_instance {
  mwpsp::WeightedInstance value;
};
struct mwpsp_sequence {
  mwpsp::MoveSequence value;
};
struct mwpsp_tree {
  mwpsp::SpanningTree value;
};
struct mwpsp_report {
  mwpsp::SolveReport value;
};

namespace {

using namespace mwpsp;

thread_local std::string g_last_error;

mwpsp_status to_status(Errc code) {
  // Errc and mwpsp_status share their order, offset by MWPSP_OK.
  return static_cast<mwpsp_status>(static_cast<int>(code) + 1);
}

struct NullArgument {};

template <class T>
void require(T* p) {
  if (p == nullptr) throw NullArgument{};
}

template <class Fn>
mwpsp_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return MWPSP_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const NullArgument&) {
    g_last_error = "InvalidArgument: null pointer argument";
    return MWPSP_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MWPSP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MWPSP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MWPSP_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::vector<Edge> edges_from(const uint32_t* pairs, size_t count) {
  if (count > 0) require(pairs);
  std::vector<Edge> edges;
  edges.reserve(count);
  for (size_t i = 0; i < count; ++i) edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
  return edges;
}

Face face_from(const uint32_t* f) {
  require(f);
  return Face(f[0], f[1], f[2]);
}

std::optional<SearchPolicy> policy_from(mwpsp_improve improve, uint64_t seed) {
  SearchPolicy p;
  p.seed = seed;
  switch (improve) {
    case MWPSP_IMPROVE_NONE:
      return std::nullopt;
    case MWPSP_IMPROVE_STEEPEST:
      p.kind = SearchPolicy::Kind::steepest;
      return p;
    case MWPSP_IMPROVE_FIRST:
      p.kind = SearchPolicy::Kind::first_improvement;
      return p;
    case MWPSP_IMPROVE_ANNEAL:
      p.kind = SearchPolicy::Kind::anneal;
      return p;
  }
  throw Error(Errc::invalid_argument, "unknown improvement policy");
}

template <class Handle, class T>
void emit(Handle** out, T&& value) {
  *out = new Handle{std::forward<T>(value)};
}

}  // namespace

extern "C" {

const char* mwpsp_version(void) { return "1.0.0"; }

const char* mwpsp_status_name(mwpsp_status status) {
  if (status == MWPSP_OK) return "Ok";
  if (status == MWPSP_ERR_INTERNAL) return "Internal";
  int i = static_cast<int>(status) - 1;
  if (i < 0 || i > static_cast<int>(Errc::search_exhausted)) return "Unknown";
  return errc_name(static_cast<Errc>(i));
}

int mwpsp_status_is_resource_limit(mwpsp_status status) {
  return status == MWPSP_ERR_N_OUT_OF_RANGE || status == MWPSP_ERR_BUDGET_EXCEEDED ||
         status == MWPSP_ERR_SEARCH_EXHAUSTED;
}

const char* mwpsp_last_error(void) { return g_last_error.c_str(); }

void mwpsp_string_free(char* s) { std::free(s); }

/* triangulations */

mwpsp_status mwpsp_triangulation_from_json(const char* json, mwpsp_triangulation** out) {
  return guarded([&] {
    require(json);
    require(out);
    emit(out, triangulation_from_json(json));
  });
}

mwpsp_status mwpsp_triangulation_from_faces(uint32_t n, const uint32_t* corners, size_t face_count,
                                            mwpsp_triangulation** out) {
  return guarded([&] {
    require(out);
    if (face_count > 0) require(corners);
    std::vector<Face> faces;
    faces.reserve(face_count);
    for (size_t i = 0; i < face_count; ++i) faces.push_back(face_from(corners + 3 * i));
    emit(out, Triangulation::build(n, std::move(faces)));
  });
}

mwpsp_status mwpsp_triangulation_from_edges(uint32_t n, const uint32_t* pairs, size_t edge_count,
                                            mwpsp_triangulation** out) {
  return guarded([&] {
    require(out);
    auto edges = edges_from(pairs, edge_count);
    emit(out, Triangulation::from_edges(n, edges));
  });
}

mwpsp_status mwpsp_triangulation_stacked(uint32_t n, mwpsp_triangulation** out) {
  return guarded([&] {
    require(out);
    emit(out, stacked_triangulation(n));
  });
}

void mwpsp_triangulation_free(mwpsp_triangulation* t) { delete t; }

uint32_t mwpsp_triangulation_vertex_count(const mwpsp_triangulation* t) {
  return t ? t->value.vertex_count() : 0;
}
size_t mwpsp_triangulation_edge_count(const mwpsp_triangulation* t) {
  return t ? t->value.edge_count() : 0;
}
size_t mwpsp_triangulation_face_count(const mwpsp_triangulation* t) {
  return t ? t->value.face_count() : 0;
}

mwpsp_status mwpsp_triangulation_edges(const mwpsp_triangulation* t, uint32_t* pairs) {
  return guarded([&] {
    require(t);
    require(pairs);
    for (const Edge& e : t->value.edges()) {
      *pairs++ = e.lo();
      *pairs++ = e.hi();
    }
  });
}

mwpsp_status mwpsp_triangulation_faces(const mwpsp_triangulation* t, uint32_t* corners) {
  return guarded([&] {
    require(t);
    require(corners);
    for (const Face& f : t->value.faces())
      for (VertexId v : f.corners()) *corners++ = v;
  });
}

mwpsp_status mwpsp_triangulation_degree(const mwpsp_triangulation* t, uint32_t v, size_t* out) {
  return guarded([&] {
    require(t);
    require(out);
    *out = t->value.degree(v);
  });
}

mwpsp_status mwpsp_triangulation_link(const mwpsp_triangulation* t, uint32_t v, uint32_t* out,
                                      size_t capacity, size_t* length) {
  return guarded([&] {
    require(t);
    require(out);
    auto cycle = t->value.link(v);
    if (length) *length = cycle.size();
    if (cycle.size() > capacity) throw Error(Errc::size_mismatch, "link buffer too small");
    std::copy(cycle.begin(), cycle.end(), out);
  });
}

mwpsp_status mwpsp_triangulation_opposite(const mwpsp_triangulation* t, uint32_t a, uint32_t b,
                                          uint32_t out[2]) {
  return guarded([&] {
    require(t);
    require(out);
    auto [p, q] = t->value.opposite_vertices(Edge(a, b));
    out[0] = p;
    out[1] = q;
  });
}

int mwpsp_triangulation_equal(const mwpsp_triangulation* a, const mwpsp_triangulation* b) {
  if (!a || !b) return a == b;
  return a->value == b->value;
}

mwpsp_status mwpsp_triangulation_to_json(const mwpsp_triangulation* t, char** out) {
  return guarded([&] {
    require(t);
    require(out);
    *out = dup_string(triangulation_to_json(t->value));
  });
}

mwpsp_status mwpsp_triangulation_to_dot(const mwpsp_triangulation* t, char** out) {
  return guarded([&] {
    require(t);
    require(out);
    *out = dup_string(export_dot(t->value));
  });
}

mwpsp_status mwpsp_triangulation_canonical_key(const mwpsp_triangulation* t, char** out) {
  return guarded([&] {
    require(t);
    require(out);
    *out = dup_string(canonical_key(t->value));
  });
}

mwpsp_status mwpsp_triangulation_weight(const mwpsp_triangulation* t,
                                        const mwpsp_instance* instance, char** out) {
  return guarded([&] {
    require(t);
    require(instance);
    require(out);
    *out = dup_string(weight(t->value, instance->value).to_string());
  });
}

/* instances */

mwpsp_status mwpsp_instance_parse(const char* text, mwpsp_instance** out) {
  return guarded([&] {
    require(text);
    require(out);
    emit(out, parse_instance(text));
  });
}

mwpsp_status mwpsp_instance_counterexample(mwpsp_instance** out) {
  return guarded([&] {
    require(out);
    emit(out, counterexample_instance());
  });
}

void mwpsp_instance_free(mwpsp_instance* instance) { delete instance; }

uint32_t mwpsp_instance_vertex_count(const mwpsp_instance* instance) {
  return instance ? instance->value.vertex_count() : 0;
}

mwpsp_status mwpsp_instance_weight(const mwpsp_instance* instance, uint32_t u, uint32_t v,
                                   char** out) {
  return guarded([&] {
    require(instance);
    require(out);
    *out = dup_string(instance->value.weight(u, v).to_string());
  });
}

mwpsp_status mwpsp_instance_to_text(const mwpsp_instance* instance, char** out) {
  return guarded([&] {
    require(instance);
    require(out);
    *out = dup_string(format_instance(instance->value));
  });
}

mwpsp_status mwpsp_edge_list_parse(const char* text, uint32_t** pairs, size_t* count) {
  return guarded([&] {
    require(text);
    require(pairs);
    require(count);
    auto edges = parse_edge_list(text);
    auto* buf = static_cast<uint32_t*>(std::malloc(sizeof(uint32_t) * (2 * edges.size() + 1)));
    if (buf == nullptr) throw std::bad_alloc();
    for (size_t i = 0; i < edges.size(); ++i) {
      buf[2 * i] = edges[i].lo();
      buf[2 * i + 1] = edges[i].hi();
    }
    *pairs = buf;
    *count = edges.size();
  });
}

void mwpsp_pairs_free(uint32_t* pairs) { std::free(pairs); }

/* moves */

mwpsp_status mwpsp_edge_substitute(const mwpsp_triangulation* t, uint32_t a, uint32_t b,
                                   mwpsp_triangulation** out, uint32_t added[2]) {
  return guarded([&] {
    require(t);
    require(out);
    auto r = edge_substitute(t->value, Edge(a, b));
    if (added) {
      added[0] = r.added.lo();
      added[1] = r.added.hi();
    }
    emit(out, std::move(r.graph));
  });
}

mwpsp_status mwpsp_vertex_relocate(const mwpsp_triangulation* t, uint32_t u,
                                   const uint32_t face[3], mwpsp_triangulation** out) {
  return guarded([&] {
    require(t);
    require(out);
    emit(out, vertex_relocate(t->value, u, face_from(face)));
  });
}

mwpsp_status mwpsp_relocation_as_flips(const mwpsp_triangulation* t, uint32_t u,
                                       const uint32_t face[3], mwpsp_sequence** out) {
  return guarded([&] {
    require(t);
    require(out);
    emit(out, relocation_as_flips(t->value, u, face_from(face)));
  });
}

mwpsp_status mwpsp_sequence_from_json(const char* json, mwpsp_sequence** out) {
  return guarded([&] {
    require(json);
    require(out);
    emit(out, sequence_from_json(json));
  });
}

mwpsp_status mwpsp_sequence_to_json(const mwpsp_sequence* s, char** out) {
  return guarded([&] {
    require(s);
    require(out);
    *out = dup_string(sequence_to_json(s->value));
  });
}

size_t mwpsp_sequence_length(const mwpsp_sequence* s) { return s ? s->value.size() : 0; }

void mwpsp_sequence_free(mwpsp_sequence* s) { delete s; }

mwpsp_status mwpsp_apply_sequence(const mwpsp_triangulation* t, const mwpsp_sequence* s,
                                  mwpsp_triangulation** out, size_t* failed_index) {
  if (failed_index) *failed_index = SIZE_MAX;
  return guarded([&] {
    require(t);
    require(s);
    require(out);
    try {
      emit(out, apply_sequence(t->value, s->value));
    } catch (const Error& e) {
      if (failed_index && e.move_index()) *failed_index = *e.move_index();
      throw;
    }
  });
}

mwpsp_status mwpsp_invert_sequence(const mwpsp_triangulation* t, const mwpsp_sequence* s,
                                   mwpsp_sequence** out) {
  return guarded([&] {
    require(t);
    require(s);
    require(out);
    emit(out, invert_sequence(t->value, s->value));
  });
}

mwpsp_status mwpsp_transform(const mwpsp_triangulation* a, const mwpsp_triangulation* b,
                             size_t max_flips, mwpsp_sequence** out) {
  return guarded([&] {
    require(a);
    require(b);
    require(out);
    TransformOptions options;
    options.max_flips = max_flips;
    emit(out, transform(a->value, b->value, options));
  });
}

/* planarity and trees */

mwpsp_status mwpsp_is_planar(uint32_t n, const uint32_t* pairs, size_t edge_count, int* out) {
  return guarded([&] {
    require(out);
    *out = is_planar(n, edges_from(pairs, edge_count)) ? 1 : 0;
  });
}

mwpsp_status mwpsp_is_maximal_planar(uint32_t n, const uint32_t* pairs, size_t edge_count,
                                     int* out) {
  return guarded([&] {
    require(out);
    *out = is_maximal_planar(n, edges_from(pairs, edge_count)) ? 1 : 0;
  });
}

mwpsp_status mwpsp_maximum_spanning_tree(const mwpsp_instance* instance, int zero_fill,
                                         mwpsp_tree** out) {
  return guarded([&] {
    require(instance);
    require(out);
    emit(out, maximum_spanning_tree(instance->value, zero_fill != 0));
  });
}

mwpsp_status mwpsp_tree_from_edges(uint32_t n, const uint32_t* pairs, size_t edge_count,
                                   mwpsp_tree** out) {
  return guarded([&] {
    require(out);
    emit(out, SpanningTree(n, edges_from(pairs, edge_count)));
  });
}

mwpsp_status mwpsp_counterexample_path(mwpsp_tree** out) {
  return guarded([&] {
    require(out);
    emit(out, counterexample_path());
  });
}

mwpsp_status mwpsp_tree_to_json(const mwpsp_tree* tree, const mwpsp_instance* instance,
                                char** out) {
  return guarded([&] {
    require(tree);
    require(instance);
    require(out);
    *out = dup_string(tree_to_json(tree->value, instance->value));
  });
}

void mwpsp_tree_free(mwpsp_tree* tree) { delete tree; }

/* solvers */

mwpsp_status mwpsp_enumerate(uint32_t n, uint64_t budget, mwpsp_visit_fn visit, void* user,
                             uint64_t* count) {
  return guarded([&] {
    uint64_t c = 0;
    if (visit) {
      c = enumerate_triangulations(n, budget, [&](const Triangulation& g) {
        mwpsp_triangulation handle{g};
        visit(&handle, user);
      });
    } else {
      c = count_triangulations(n, budget);
    }
    if (count) *count = c;
  });
}

mwpsp_status mwpsp_exact(const mwpsp_instance* instance, const uint32_t* forced_pairs,
                         size_t forced_count, size_t cap, uint64_t budget, mwpsp_report** out) {
  return guarded([&] {
    require(instance);
    require(out);
    ExactOptions options;
    options.forced = edges_from(forced_pairs, forced_count);
    options.cap = cap;
    options.budget = budget;
    emit(out, exact_mwpsp(instance->value, options));
  });
}

mwpsp_status mwpsp_verify_proposition4(const mwpsp_instance* instance, const mwpsp_tree* tree,
                                       uint64_t budget, int* out) {
  return guarded([&] {
    require(instance);
    require(tree);
    require(out);
    *out = verify_proposition4(instance->value, tree->value, budget) ? 1 : 0;
  });
}

mwpsp_status mwpsp_mst_greedy(const mwpsp_instance* instance, mwpsp_triangulation** out) {
  return guarded([&] {
    require(instance);
    require(out);
    emit(out, mst_greedy(instance->value));
  });
}

mwpsp_status mwpsp_local_search(const mwpsp_triangulation* start, const mwpsp_instance* instance,
                                mwpsp_improve policy, uint64_t seed, mwpsp_report** out) {
  return guarded([&] {
    require(start);
    require(instance);
    require(out);
    auto p = policy_from(policy, seed);
    if (!p) throw Error(Errc::invalid_argument, "local search needs a policy");
    emit(out, local_search(start->value, instance->value, *p));
  });
}

mwpsp_status mwpsp_solve(const mwpsp_instance* instance, mwpsp_improve improve, uint64_t seed,
                         mwpsp_report** out) {
  return guarded([&] {
    require(instance);
    require(out);
    emit(out, solve_heuristic(instance->value, policy_from(improve, seed)));
  });
}

mwpsp_status mwpsp_report_from_json(const char* json, mwpsp_report** out) {
  return guarded([&] {
    require(json);
    require(out);
    emit(out, report_from_json(json));
  });
}

mwpsp_status mwpsp_report_to_json(const mwpsp_report* report, char** out) {
  return guarded([&] {
    require(report);
    require(out);
    *out = dup_string(report_to_json(report->value));
  });
}

mwpsp_status mwpsp_report_best_weight(const mwpsp_report* report, char** out) {
  return guarded([&] {
    require(report);
    require(out);
    *out = dup_string(report->value.best_weight.to_string());
  });
}

size_t mwpsp_report_graph_count(const mwpsp_report* report) {
  return report ? report->value.best_graphs.size() : 0;
}

mwpsp_status mwpsp_report_graph(const mwpsp_report* report, size_t index,
                                mwpsp_triangulation** out) {
  return guarded([&] {
    require(report);
    require(out);
    if (index >= report->value.best_graphs.size())
      throw Error(Errc::index_out_of_range, "report graph " + std::to_string(index));
    emit(out, report->value.best_graphs[index]);
  });
}

void mwpsp_report_free(mwpsp_report* report) { delete report; }

}  // extern "C"
