/* The public header must compile as C and the library must be usable from it. */
#include <mwpsp/mwpsp.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void count_visit(const mwpsp_triangulation* t, void* user) {
  if (mwpsp_triangulation_edge_count(t) == 9) ++*(int*)user;
}

int main(void) {
  static const uint32_t g5[] = {1, 2, 4, 1, 3, 4, 2, 3, 4, 1, 2, 5, 1, 3, 5, 2, 3, 5};
  mwpsp_triangulation* g = NULL;
  EXPECT(mwpsp_triangulation_from_faces(5, g5, 6, &g) == MWPSP_OK);
  EXPECT(mwpsp_triangulation_edge_count(g) == 9);

  uint32_t added[2] = {0, 0};
  mwpsp_triangulation* h = NULL;
  EXPECT(mwpsp_edge_substitute(g, 1, 2, &h, added) == MWPSP_OK);
  EXPECT(added[0] == 4 && added[1] == 5);

  mwpsp_triangulation* bad = NULL;
  EXPECT(mwpsp_edge_substitute(g, 4, 5, &bad, NULL) == MWPSP_ERR_EDGE_NOT_PRESENT);
  EXPECT(bad == NULL);
  EXPECT(strstr(mwpsp_last_error(), "EdgeNotPresent") != NULL);

  char* json = NULL;
  EXPECT(mwpsp_triangulation_to_json(h, &json) == MWPSP_OK);
  EXPECT(json != NULL && strncmp(json, "{\"n\":5", 6) == 0);
  mwpsp_string_free(json);

  int visited = 0;
  uint64_t count = 0;
  EXPECT(mwpsp_enumerate(5, MWPSP_DEFAULT_BUDGET, count_visit, &visited, &count) == MWPSP_OK);
  EXPECT(count == 10 && visited == 10);
  EXPECT(mwpsp_enumerate(12, MWPSP_DEFAULT_BUDGET, NULL, NULL, &count) == MWPSP_ERR_N_OUT_OF_RANGE);
  EXPECT(mwpsp_status_is_resource_limit(MWPSP_ERR_N_OUT_OF_RANGE));

  mwpsp_triangulation_free(h);
  mwpsp_triangulation_free(g);
  if (failures == 0) puts("capi_c: ok");
  return failures == 0 ? 0 : 1;
}
