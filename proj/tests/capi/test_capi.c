/* Exercises the public C interface from C. */
#include <conetensor/conetensor.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static void test_cones(void) {
  ct_cone *q = NULL, *qs = NULL, *dq = NULL, *mn = NULL, *mx = NULL;
  EXPECT(ct_cone_builtin("Q", &q) == CT_OK);
  EXPECT(ct_cone_builtin("Qstar", &qs) == CT_OK);
  EXPECT(ct_cone_dual(q, &dq) == CT_OK);
  int eq = 0, sub = 0, proper = 0, generating = 0;
  EXPECT(ct_cone_equal(dq, qs, &eq) == CT_OK && eq == 1);

  EXPECT(ct_cone_tensor(q, qs, CT_TENSOR_MIN, &mn) == CT_OK);
  EXPECT(ct_cone_tensor(q, qs, CT_TENSOR_MAX, &mx) == CT_OK);
  EXPECT(ct_cone_subset(mn, mx, &sub) == CT_OK && sub == 1);
  EXPECT(ct_cone_equal(mn, mx, &eq) == CT_OK && eq == 0);
  size_t dim = 0, rays = 0;
  EXPECT(ct_cone_dim(mn, &dim) == CT_OK && dim == 9);
  EXPECT(ct_cone_ray_count(mn, &rays) == CT_OK && rays == 16);
  EXPECT(ct_cone_flags(mx, &proper, &generating) == CT_OK && proper == 1 && generating == 1);

  char* json = NULL;
  EXPECT(ct_cone_extremal_rays_json(mn, &json) == CT_OK);
  EXPECT(json != NULL && strstr(json, "\"count\": 16") != NULL);
  ct_string_free(json);

  int member = 0;
  EXPECT(ct_cone_contains(q, "[0, 0, 1]", &member) == CT_OK && member == 1);
  EXPECT(ct_cone_contains(q, "[2, 0, 1]", &member) == CT_OK && member == 0);
  EXPECT(ct_cone_contains(q, "[\"1/3\", \"-1/3\", \"2/3\"]", &member) == CT_OK && member == 1);
  EXPECT(ct_cone_contains(q, "[1, 2]", &member) == CT_ERR_PARSE);
  EXPECT(strlen(ct_last_error()) > 0);

  ct_cone_free(q);
  ct_cone_free(qs);
  ct_cone_free(dq);
  ct_cone_free(mn);
  ct_cone_free(mx);
  ct_cone_free(NULL);
}

static void test_documents(void) {
  ct_cone* c = NULL;
  EXPECT(ct_cone_from_json("{\"dim\":2,\"rays\":[[1,0],[0,1]]}", 1, &c) == CT_OK);
  char* out = NULL;
  EXPECT(ct_cone_to_json(c, -1, &out) == CT_OK);
  EXPECT(strcmp(out,
                "{\"format_version\":\"1\",\"dim\":2,\"rays\":[[0,1],[1,0]],\"lineality\":[],"
                "\"inequalities\":[[0,1],[1,0]],\"equations\":[]}") == 0);
  ct_cone* back = NULL;
  EXPECT(ct_cone_from_json(out, 1, &back) == CT_OK);
  int eq = 0;
  EXPECT(ct_cone_equal(c, back, &eq) == CT_OK && eq == 1);
  ct_string_free(out);
  ct_cone_free(c);
  ct_cone_free(back);

  ct_cone* bad = NULL;
  EXPECT(ct_cone_from_json("{\"dim\":2,\"rays\":[[1,\"x\"]]}", 1, &bad) == CT_ERR_PARSE);
  EXPECT(ct_cone_from_json("{\"dim\":2,\"rays\":[[1,0]],\"extra\":1}", 1, &bad) == CT_ERR_PARSE);
  EXPECT(ct_cone_from_json("{\"dim\":2,\"rays\":[[1,0]],\"extra\":1}", 0, &bad) == CT_OK);
  ct_cone_free(bad);
  EXPECT(ct_cone_from_json("{\"dim\":2,\"rays\":[[1,0]],\"inequalities\":[[0,1]]}", 1, &bad) ==
         CT_ERR_PRECONDITION);
  EXPECT(ct_cone_builtin("nope", &bad) == CT_ERR_INVALID_ARGUMENT);
  EXPECT(ct_cone_from_json(NULL, 1, &bad) == CT_ERR_INVALID_ARGUMENT);
}

static void test_dimension_errors(void) {
  ct_cone *a = NULL, *b = NULL;
  int out = 0;
  EXPECT(ct_cone_builtin("std2", &a) == CT_OK);
  EXPECT(ct_cone_builtin("Q", &b) == CT_OK);
  EXPECT(ct_cone_subset(a, b, &out) == CT_ERR_DIMENSION);
  EXPECT(ct_cone_equal(a, b, &out) == CT_ERR_DIMENSION);
  ct_cone_free(a);
  ct_cone_free(b);
}

static void test_faces(void) {
  ct_cone *e = NULL, *f = NULL, *r = NULL;
  EXPECT(ct_cone_builtin("Q", &e) == CT_OK);
  EXPECT(ct_cone_builtin("Qstar", &f) == CT_OK);
  const size_t m[] = {0};
  const size_t n[] = {0, 1};
  int is_face = 0;
  for (int op = CT_FACE_ORFACE; op <= CT_FACE_SCAND; ++op) {
    EXPECT(ct_face_op_apply(e, f, (ct_face_op)op, m, 1, n, 2, &r, &is_face) == CT_OK);
    EXPECT(is_face == 1);
    ct_cone_free(r);
    r = NULL;
  }
  const size_t diagonal[] = {0, 3};
  EXPECT(ct_face_op_apply(e, f, CT_FACE_ORFACE, diagonal, 2, n, 2, &r, &is_face) == CT_ERR_PRECONDITION);
  const size_t range[] = {9};
  EXPECT(ct_face_op_apply(e, f, CT_FACE_ORFACE, range, 1, n, 2, &r, &is_face) == CT_ERR_PRECONDITION);
  ct_cone_free(e);
  ct_cone_free(f);
}

static void test_rank1(void) {
  ct_cone *e = NULL, *f = NULL;
  EXPECT(ct_cone_builtin("Q", &e) == CT_OK);
  EXPECT(ct_cone_builtin("Qstar", &f) == CT_OK);
  char* out = NULL;
  int member = 0;
  EXPECT(ct_rank1(e, f, "[-1,-1,-1]", "[-1,0,-1]", CT_TENSOR_MAX, &out, &member) == CT_OK);
  EXPECT(member == 1);
  EXPECT(strstr(out, "negated_pair") != NULL);
  ct_string_free(out);
  EXPECT(ct_rank1(e, f, "[0,0,0]", "[1,0,1]", CT_TENSOR_MIN, NULL, &member) == CT_ERR_PRECONDITION);
  ct_cone_free(e);
  ct_cone_free(f);
}

static void test_polytopes(void) {
  ct_polytope *a = NULL, *b = NULL, *h = NULL;
  EXPECT(ct_polytope_builtin("interval", &a) == CT_OK);
  EXPECT(ct_polytope_from_json("{\"dim\":1,\"vertices\":[[2],[3]]}", 1, &b) == CT_OK);
  EXPECT(ct_polytope_tensor_hull(a, b, &h) == CT_OK);
  char* out = NULL;
  EXPECT(ct_polytope_to_json(h, -1, &out) == CT_OK);
  EXPECT(strcmp(out, "{\"dim\":1,\"vertices\":[[-3],[3]],\"symmetric\":true}") == 0);
  ct_string_free(out);
  int passed = 0;
  EXPECT(ct_polytope_hull_report(a, b, 2, &out, &passed) == CT_OK);
  EXPECT(strstr(out, "non_extreme_vertex_tensors") != NULL);
  ct_string_free(out);
  ct_polytope_free(h);
  ct_polytope_free(b);
  ct_polytope* sq = NULL;
  EXPECT(ct_polytope_builtin("square", &sq) == CT_OK);
  EXPECT(ct_polytope_hull_report(a, sq, -1, &out, &passed) == CT_OK && passed == 1);
  EXPECT(strstr(out, "\"hull_slice\":true") != NULL);
  ct_string_free(out);
  ct_polytope_free(sq);
  ct_polytope_free(a);
}

static void test_verify(void) {
  char* report = NULL;
  int passed = 0;
  EXPECT(ct_verify("thmC", CT_FORMAT_JSON, &report, &passed) == CT_OK);
  EXPECT(passed == 1);
  EXPECT(strstr(report, "\"all_passed\": true") != NULL);
  ct_string_free(report);
  EXPECT(ct_verify("nope", CT_FORMAT_TEXT, &report, &passed) == CT_ERR_INVALID_ARGUMENT);
  EXPECT(ct_corpus_json(&report) == CT_OK);
  EXPECT(strstr(report, "pent5") != NULL);
  ct_string_free(report);
}

int main(void) {
  EXPECT(strcmp(ct_status_name(CT_ERR_DD_LIMIT), "dd_limit") == 0);
  test_cones();
  test_documents();
  test_dimension_errors();
  test_faces();
  test_rank1();
  test_polytopes();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
