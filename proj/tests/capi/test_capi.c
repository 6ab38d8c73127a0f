/* Exercises the shared library through its C header only. */
#include "quillen/quillen.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                           \
  do {                                                                         \
    if (!(cond)) {                                                             \
      fprintf(stderr, "%s:%d: expected %s (last error: %s)\n", __FILE__,       \
              __LINE__, #cond, ql_last_error());                               \
      ++failures;                                                              \
    }                                                                          \
  } while (0)

static int contains(const char *hay, const char *needle) {
  return hay && strstr(hay, needle) != NULL;
}

static void test_groups(void) {
  ql_group *g = NULL;
  uint64_t order = 0;
  char *text = NULL;
  EXPECT(ql_group_named("Alt(5)", &g) == QL_OK);
  EXPECT(ql_group_order(g, &order) == QL_OK);
  EXPECT(order == 60);
  EXPECT(ql_group_to_json(g, &text) == QL_OK);
  EXPECT(contains(text, "\"Alt(5)\""));
  ql_string_free(text);
  ql_group_free(g);

  g = NULL;
  EXPECT(ql_group_named("Nope(3)", &g) != QL_OK);
  EXPECT(g == NULL);
  EXPECT(strlen(ql_last_error()) > 0);
  EXPECT(ql_group_from_json("{not json", &g) == QL_PARSE_ERROR);
  EXPECT(ql_group_named(NULL, &g) == QL_INVALID_ARGUMENT);
}

static void test_collections(void) {
  ql_collection *c = NULL;
  char *json = NULL, *report = NULL;
  unsigned r = 0;
  EXPECT(ql_construct("{\"family\":\"a8\"}", &c, &json) == QL_OK);
  EXPECT(contains(json, "\"recipe\""));
  EXPECT(ql_collection_rank(c, &r) == QL_OK);
  EXPECT(r == 2);
  EXPECT(ql_verify(c, &report) == QL_OK);
  EXPECT(contains(report, "\"admissible\": true"));
  ql_string_free(report);
  EXPECT(ql_certify(c, &report) == QL_OK);
  EXPECT(contains(report, "\"granted\": true"));
  ql_string_free(report);
  ql_collection_free(c);

  /* round trip through the JSON text */
  c = NULL;
  EXPECT(ql_collection_from_json(json, &c) == QL_OK);
  ql_string_free(json);
  EXPECT(ql_collection_to_json(c, &json) == QL_OK);
  EXPECT(contains(json, "\"basis\""));
  ql_string_free(json);
  ql_collection_free(c);

  /* not admissible: c_1 is the identity */
  c = NULL;
  EXPECT(ql_collection_from_json(
             "{\"group\":\"Alt(8)\",\"p\":3,\"basis\":[\"(1,2,3)\",\"(4,5,6)\"],"
             "\"c\":[\"()\",\"(4,8)(5,6)\"]}",
             &c) == QL_OK);
  EXPECT(ql_verify(c, &report) == QL_REFUTED);
  EXPECT(contains(report, "\"admissible\": false"));
  ql_string_free(report);
  EXPECT(ql_certify(c, &report) == QL_REFUTED);
  EXPECT(contains(report, "\"granted\": false"));
  ql_string_free(report);
  ql_collection_free(c);

  EXPECT(ql_construct("{\"family\":\"sym-alt\",\"n\":5,\"p\":3}", NULL, NULL) ==
         QL_INVALID_ARGUMENT);
  EXPECT(ql_construct("{\"family\":\"linear\",\"n\":2,\"q\":7,\"p\":3}", &c,
                      NULL) == QL_OK);
  ql_collection_free(c);
}

static void test_reports(void) {
  ql_group *g = NULL;
  char *report = NULL;
  EXPECT(ql_group_named("Sym(6)", &g) == QL_OK);
  EXPECT(ql_search(g, 3, NULL, &report) == QL_REFUTED);
  EXPECT(contains(report, "exhaustively-none"));
  ql_string_free(report);
  EXPECT(ql_search(g, 3, "{\"max_rank\":1}", &report) == QL_CAPPED);
  ql_string_free(report);
  {
    ql_status st = ql_homology(g, 3, &report);
    EXPECT(st == QL_OK || st == QL_REFUTED);
    EXPECT(contains(report, "\"betti\""));
    ql_string_free(report);
  }
  ql_group_free(g);

  EXPECT(ql_group_named("Alt(8)", &g) == QL_OK);
  EXPECT(ql_homology(g, 3, &report) == QL_OK);
  EXPECT(contains(report, "\"qdp\": true"));
  ql_string_free(report);
  ql_group_free(g);

  EXPECT(ql_obstruction("GL", 2, 4, 3, &report) == QL_OK);
  EXPECT(contains(report, "\"obstruction\""));
  ql_string_free(report);
  EXPECT(ql_obstruction("SL", 2, 7, 3, &report) != QL_OK);

  EXPECT(ql_paper_suite("{\"only\":[9]}", &report) == QL_OK);
  EXPECT(contains(report, "\"suite\""));
  ql_string_free(report);
}

int main(void) {
  EXPECT(strcmp(ql_status_string(QL_CAPPED), "capped") == 0);
  EXPECT(ql_version() != NULL);
  test_groups();
  test_collections();
  test_reports();
  if (failures)
    fprintf(stderr, "%d failure(s)\n", failures);
  else
    printf("all C API checks passed\n");
  return failures ? 1 : 0;
}
