#ifndef CONETENSOR_CONETENSOR_H
#define CONETENSOR_CONETENSOR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CT_API __attribute__((visibility("default")))
#else
#define CT_API
#endif

/*
 * C interface to the conetensor library.
 *
 * Every fallible call returns a ct_status; on anything other than CT_OK the
 * message is available from ct_last_error() on the same thread until the next
 * call. Strings returned through char** are heap-allocated and must be
 * released with ct_string_free. Handles are released with their _free
 * function; passing NULL to a _free function is a no-op.
 *
 * Vectors cross the boundary as JSON arrays whose entries are integers or
 * "p/q" strings, e.g. "[1, \"-1/2\", 0]".
 */

typedef enum ct_status {
  CT_OK = 0,
  CT_ERR_DIMENSION = 1,
  CT_ERR_PARSE = 2,
  CT_ERR_PRECONDITION = 3,
  CT_ERR_DD_LIMIT = 4,
  CT_ERR_INVALID_ARGUMENT = 5,
  CT_ERR_INTERNAL = 6
} ct_status;

typedef enum ct_tensor_kind { CT_TENSOR_MIN = 0, CT_TENSOR_MAX = 1 } ct_tensor_kind;

typedef enum ct_face_op { CT_FACE_ORFACE = 0, CT_FACE_ANDFACE = 1, CT_FACE_SCOR = 2, CT_FACE_SCAND = 3 } ct_face_op;

typedef enum ct_format { CT_FORMAT_TEXT = 0, CT_FORMAT_JSON = 1 } ct_format;

typedef struct ct_cone ct_cone;
typedef struct ct_polytope ct_polytope;

CT_API const char* ct_version(void);
CT_API const char* ct_status_name(ct_status status);
CT_API const char* ct_last_error(void);
CT_API void ct_string_free(char* s);

/* Re-indents a JSON text the way this library prints documents. */
CT_API ct_status ct_json_pretty(const char* json, char** out);

/* Cones */

/* Parses a cone document. With strict != 0, unknown fields are rejected. */
CT_API ct_status ct_cone_from_json(const char* json, int strict, ct_cone** out);
/* Bundled cones: std1 std2 std3 Q Qstar halfplane zero2 full2 point0 pent5. */
CT_API ct_status ct_cone_builtin(const char* name, ct_cone** out);
CT_API ct_status ct_cone_clone(const ct_cone* c, ct_cone** out);
CT_API void ct_cone_free(ct_cone* c);

/* Canonical cone document (pretty-printed when indent >= 0, compact otherwise). */
CT_API ct_status ct_cone_to_json(const ct_cone* c, int indent, char** out);
CT_API ct_status ct_cone_to_text(const ct_cone* c, char** out);

CT_API ct_status ct_cone_dim(const ct_cone* c, size_t* out);
CT_API ct_status ct_cone_ray_count(const ct_cone* c, size_t* out);
CT_API ct_status ct_cone_flags(const ct_cone* c, int* proper, int* generating);

CT_API ct_status ct_cone_dual(const ct_cone* c, ct_cone** out);
CT_API ct_status ct_cone_tensor(const ct_cone* e, const ct_cone* f, ct_tensor_kind kind, ct_cone** out);

/* {"dim","count","rays"} with rays in canonical order. */
CT_API ct_status ct_cone_extremal_rays_json(const ct_cone* c, char** out);
/* {"dim","lineality_dim","basis"}. */
CT_API ct_status ct_cone_lineality_json(const ct_cone* c, char** out);

CT_API ct_status ct_cone_contains(const ct_cone* c, const char* vector_json, int* out);
CT_API ct_status ct_cone_equal(const ct_cone* a, const ct_cone* b, int* out);
CT_API ct_status ct_cone_subset(const ct_cone* a, const ct_cone* b, int* out);

/*
 * Face operation on faces of e and f given as indices into their canonical
 * ray lists (the lineality space is always included). Fails with
 * CT_ERR_PRECONDITION if either index set does not span a face. *is_face
 * reports whether the result is a face of min(e,f) (orface, andface) or of
 * max(e,f) (scor, scand).
 */
CT_API ct_status ct_face_op_apply(const ct_cone* e, const ct_cone* f, ct_face_op op, const size_t* m, size_t m_len,
                                  const size_t* n, size_t n_len, ct_cone** out, int* is_face);

/*
 * Rank-one membership of x⊗y in min(e,f) or max(e,f). Writes
 * {"member","clause","tensor"} to *out.
 */
CT_API ct_status ct_rank1(const ct_cone* e, const ct_cone* f, const char* x_json, const char* y_json,
                          ct_tensor_kind kind, char** out, int* member);

/* Polytopes */

/* Polytope document {"dim","vertices"} with optional "symmetric" and "name". */
CT_API ct_status ct_polytope_from_json(const char* json, int strict, ct_polytope** out);
/* Bundled polytopes: interval square cube3 cross2 cross3 seg23. */
CT_API ct_status ct_polytope_builtin(const char* name, ct_polytope** out);
CT_API void ct_polytope_free(ct_polytope* p);
CT_API ct_status ct_polytope_to_json(const ct_polytope* p, int indent, char** out);
CT_API ct_status ct_polytope_tensor_hull(const ct_polytope* c, const ct_polytope* d, ct_polytope** out);
/*
 * Tensor hull of c and d together with the checks that apply: slice and
 * extreme-point checks for symmetric pairs, extreme-point status of every
 * vertex tensor otherwise. *all_passed is 0 if an applicable check fails.
 */
CT_API ct_status ct_polytope_hull_report(const ct_polytope* c, const ct_polytope* d, int indent, char** out,
                                         int* all_passed);

/* Corpus and verification */

/* {"cones":[...],"polytopes":[...],"suites":[...]} */
CT_API ct_status ct_corpus_json(char** out);

/* suite is a suite name, "thmF", or "all". */
CT_API ct_status ct_verify(const char* suite, ct_format format, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
