// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mwpsp/mwpsp.h>

#include <cstdint>
#include <string>
#include <vector>

namespace {

std::string take(mwpsp_status status, char** s) {
  REQUIRE(status == MWPSP_OK);
  std::string out(*s);
  mwpsp_string_free(*s);
  return out;
}

mwpsp_triangulation* g5() {
  static const uint32_t faces[] = {1, 2, 4, 1, 3, 4, 2, 3, 4, 1, 2, 5, 1, 3, 5, 2, 3, 5};
  mwpsp_triangulation* g = nullptr;
  REQUIRE(mwpsp_triangulation_from_faces(5, faces, 6, &g) == MWPSP_OK);
  return g;
}

}  // namespace

TEST_CASE("status names and error reporting") {
  CHECK(std::string(mwpsp_status_name(MWPSP_OK)) == "Ok");
  CHECK(std::string(mwpsp_status_name(MWPSP_ERR_EULER_VIOLATION)) == "EulerViolation");
  CHECK(std::string(mwpsp_status_name(MWPSP_ERR_SEARCH_EXHAUSTED)) == "SearchExhausted");
  CHECK(std::string(mwpsp_status_name(MWPSP_ERR_INTERNAL)) == "Internal");

  mwpsp_triangulation* t = nullptr;
  CHECK(mwpsp_triangulation_from_json("{\"n\":5,\"faces\":[[1,2,4]]}", &t) ==
        MWPSP_ERR_EULER_VIOLATION);
  CHECK(t == nullptr);
  CHECK(std::string(mwpsp_last_error()).find("EulerViolation") == 0);
  CHECK(mwpsp_triangulation_from_json(nullptr, &t) == MWPSP_ERR_INVALID_ARGUMENT);
  CHECK(mwpsp_triangulation_stacked(3, &t) == MWPSP_ERR_TOO_SMALL);
  CHECK(mwpsp_triangulation_stacked(6, &t) == MWPSP_OK);
  CHECK(std::string(mwpsp_last_error()).empty());
  mwpsp_triangulation_free(t);
}

TEST_CASE("triangulation queries") {
  auto* g = g5();
  CHECK(mwpsp_triangulation_vertex_count(g) == 5);
  CHECK(mwpsp_triangulation_face_count(g) == 6);
  std::vector<uint32_t> edges(2 * mwpsp_triangulation_edge_count(g));
  REQUIRE(mwpsp_triangulation_edges(g, edges.data()) == MWPSP_OK);
  CHECK(edges[0] == 1);
  CHECK(edges[1] == 2);
  std::vector<uint32_t> faces(3 * 6);
  REQUIRE(mwpsp_triangulation_faces(g, faces.data()) == MWPSP_OK);
  CHECK(faces[0] == 1);

  size_t degree = 0;
  CHECK(mwpsp_triangulation_degree(g, 1, &degree) == MWPSP_OK);
  CHECK(degree == 4);
  uint32_t link[8];
  size_t len = 0;
  CHECK(mwpsp_triangulation_link(g, 5, link, 8, &len) == MWPSP_OK);
  CHECK(len == 3);
  CHECK(mwpsp_triangulation_link(g, 1, link, 2, &len) == MWPSP_ERR_SIZE_MISMATCH);
  uint32_t opp[2];
  CHECK(mwpsp_triangulation_opposite(g, 1, 2, opp) == MWPSP_OK);
  CHECK(opp[0] == 4);
  CHECK(opp[1] == 5);

  char* s = nullptr;
  CHECK(take(mwpsp_triangulation_canonical_key(g, &s), &s) == "1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-4,3-5");
  auto json = take(mwpsp_triangulation_to_json(g, &s), &s);
  mwpsp_triangulation* back = nullptr;
  REQUIRE(mwpsp_triangulation_from_json(json.c_str(), &back) == MWPSP_OK);
  CHECK(mwpsp_triangulation_equal(g, back));
  mwpsp_triangulation* rebuilt = nullptr;
  REQUIRE(mwpsp_triangulation_from_edges(5, edges.data(), edges.size() / 2, &rebuilt) == MWPSP_OK);
  CHECK(mwpsp_triangulation_equal(g, rebuilt));
  auto dot = take(mwpsp_triangulation_to_dot(g, &s), &s);
  CHECK(dot.find("graph triangulation") == 0);
  mwpsp_triangulation_free(rebuilt);
  mwpsp_triangulation_free(back);
  mwpsp_triangulation_free(g);
}

TEST_CASE("moves and sequences") {
  auto* g = g5();
  const uint32_t face[3] = {2, 3, 4};
  mwpsp_sequence* seq = nullptr;
  REQUIRE(mwpsp_relocation_as_flips(g, 5, face, &seq) == MWPSP_OK);
  char* s = nullptr;
  CHECK(take(mwpsp_sequence_to_json(seq, &s), &s) ==
        R"([{"op":"flip","edge":[2,3]},{"op":"flip","edge":[1,5]}])");

  mwpsp_triangulation* direct = nullptr;
  mwpsp_triangulation* replayed = nullptr;
  REQUIRE(mwpsp_vertex_relocate(g, 5, face, &direct) == MWPSP_OK);
  size_t failed = 0;
  REQUIRE(mwpsp_apply_sequence(g, seq, &replayed, &failed) == MWPSP_OK);
  CHECK(failed == SIZE_MAX);
  CHECK(mwpsp_triangulation_equal(direct, replayed));

  mwpsp_sequence* inverse = nullptr;
  REQUIRE(mwpsp_invert_sequence(g, seq, &inverse) == MWPSP_OK);
  mwpsp_triangulation* restored = nullptr;
  REQUIRE(mwpsp_apply_sequence(replayed, inverse, &restored, nullptr) == MWPSP_OK);
  CHECK(mwpsp_triangulation_equal(restored, g));

  mwpsp_sequence* broken = nullptr;
  REQUIRE(mwpsp_sequence_from_json(R"([{"op":"flip","edge":[1,2]},{"op":"flip","edge":[1,2]}])",
                                   &broken) == MWPSP_OK);
  mwpsp_triangulation* none = nullptr;
  CHECK(mwpsp_apply_sequence(g, broken, &none, &failed) == MWPSP_ERR_EDGE_NOT_PRESENT);
  CHECK(failed == 1);

  mwpsp_sequence* path = nullptr;
  REQUIRE(mwpsp_transform(g, direct, 0, &path) == MWPSP_OK);
  mwpsp_triangulation* end = nullptr;
  REQUIRE(mwpsp_apply_sequence(g, path, &end, nullptr) == MWPSP_OK);
  CHECK(mwpsp_triangulation_equal(end, direct));
  CHECK(mwpsp_sequence_length(path) == 1);

  for (auto* t : {direct, replayed, restored, end}) mwpsp_triangulation_free(t);
  for (auto* q : {seq, inverse, broken, path}) mwpsp_sequence_free(q);
  mwpsp_triangulation_free(g);
}

TEST_CASE("planarity and trees") {
  const uint32_t k5[] = {1, 2, 1, 3, 1, 4, 1, 5, 2, 3, 2, 4, 2, 5, 3, 4, 3, 5, 4, 5};
  int planar = -1;
  CHECK(mwpsp_is_planar(5, k5, 10, &planar) == MWPSP_OK);
  CHECK(planar == 0);
  CHECK(mwpsp_is_planar(5, k5, 9, &planar) == MWPSP_OK);
  CHECK(planar == 1);
  CHECK(mwpsp_is_maximal_planar(5, k5, 9, &planar) == MWPSP_OK);
  CHECK(planar == 1);

  mwpsp_instance* w = nullptr;
  REQUIRE(mwpsp_instance_counterexample(&w) == MWPSP_OK);
  mwpsp_tree* t = nullptr;
  REQUIRE(mwpsp_maximum_spanning_tree(w, 1, &t) == MWPSP_OK);
  char* s = nullptr;
  CHECK(take(mwpsp_tree_to_json(t, w, &s), &s) ==
        R"({"n":8,"edges":[[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,8]],"weight":"14"})");
  mwpsp_tree* bad = nullptr;
  CHECK(mwpsp_tree_from_edges(3, k5, 1, &bad) == MWPSP_ERR_INVALID_ARGUMENT);
  mwpsp_tree_free(t);
  mwpsp_instance_free(w);
}

TEST_CASE("instances") {
  mwpsp_instance* w = nullptr;
  CHECK(mwpsp_instance_parse("n 4\n2 1 1\n", &w) == MWPSP_ERR_PARSE);
  REQUIRE(mwpsp_instance_parse("n 4\n1 2 3.5\n", &w) == MWPSP_OK);
  char* s = nullptr;
  CHECK(take(mwpsp_instance_weight(w, 2, 1, &s), &s) == "3.5");
  CHECK(take(mwpsp_instance_to_text(w, &s), &s) == "n 4\n1 2 3.5\n");
  mwpsp_triangulation* k4 = nullptr;
  REQUIRE(mwpsp_triangulation_stacked(4, &k4) == MWPSP_OK);
  CHECK(take(mwpsp_triangulation_weight(k4, w, &s), &s) == "3.5");
  mwpsp_triangulation_free(k4);
  mwpsp_instance_free(w);

  uint32_t* pairs = nullptr;
  size_t count = 0;
  REQUIRE(mwpsp_edge_list_parse("1 2\n2 3\n", &pairs, &count) == MWPSP_OK);
  CHECK(count == 2);
  CHECK(pairs[2] == 2);
  mwpsp_pairs_free(pairs);
}

TEST_CASE("solvers") {
  mwpsp_instance* w = nullptr;
  REQUIRE(mwpsp_instance_counterexample(&w) == MWPSP_OK);
  mwpsp_report* r = nullptr;
  REQUIRE(mwpsp_exact(w, nullptr, 0, MWPSP_DEFAULT_CAP, MWPSP_DEFAULT_BUDGET, &r) == MWPSP_OK);
  char* s = nullptr;
  CHECK(take(mwpsp_report_best_weight(r, &s), &s) == "24");
  CHECK(mwpsp_report_graph_count(r) == 1);
  mwpsp_triangulation* best = nullptr;
  REQUIRE(mwpsp_report_graph(r, 0, &best) == MWPSP_OK);
  CHECK(take(mwpsp_triangulation_weight(best, w, &s), &s) == "24");
  CHECK(mwpsp_report_graph(r, 1, &best) == MWPSP_ERR_INDEX_OUT_OF_RANGE);
  auto json = take(mwpsp_report_to_json(r, &s), &s);
  mwpsp_report* back = nullptr;
  REQUIRE(mwpsp_report_from_json(json.c_str(), &back) == MWPSP_OK);
  CHECK(take(mwpsp_report_to_json(back, &s), &s) == json);

  const uint32_t path[] = {1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8};
  mwpsp_report* forced = nullptr;
  REQUIRE(mwpsp_exact(w, path, 7, 1, MWPSP_DEFAULT_BUDGET, &forced) == MWPSP_OK);
  CHECK(take(mwpsp_report_best_weight(forced, &s), &s) == "23");
  CHECK(mwpsp_report_graph_count(forced) == 1);
  mwpsp_report* tight = nullptr;
  CHECK(mwpsp_exact(w, nullptr, 0, 1, 10, &tight) == MWPSP_ERR_BUDGET_EXCEEDED);

  mwpsp_tree* p = nullptr;
  REQUIRE(mwpsp_counterexample_path(&p) == MWPSP_OK);
  int holds = 0;
  REQUIRE(mwpsp_verify_proposition4(w, p, MWPSP_DEFAULT_BUDGET, &holds) == MWPSP_OK);
  CHECK(holds == 1);

  mwpsp_triangulation* greedy = nullptr;
  REQUIRE(mwpsp_mst_greedy(w, &greedy) == MWPSP_OK);
  mwpsp_report* ls = nullptr;
  REQUIRE(mwpsp_local_search(greedy, w, MWPSP_IMPROVE_STEEPEST, 0, &ls) == MWPSP_OK);
  mwpsp_report* solved = nullptr;
  REQUIRE(mwpsp_solve(w, MWPSP_IMPROVE_ANNEAL, 1, &solved) == MWPSP_OK);
  mwpsp_report* again = nullptr;
  REQUIRE(mwpsp_solve(w, MWPSP_IMPROVE_ANNEAL, 1, &again) == MWPSP_OK);
  CHECK(take(mwpsp_report_to_json(solved, &s), &s) == take(mwpsp_report_to_json(again, &s), &s));
  CHECK(mwpsp_local_search(greedy, w, MWPSP_IMPROVE_NONE, 0, &ls) == MWPSP_ERR_INVALID_ARGUMENT);

  for (auto* x : {r, back, forced, ls, solved, again}) mwpsp_report_free(x);
  mwpsp_triangulation_free(best);
  mwpsp_triangulation_free(greedy);
  mwpsp_tree_free(p);
  mwpsp_instance_free(w);
}
