/* C interface to the finite-topological-space workbench.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions return FINTOP_OK on success; on any other status the thread-local
 * message from fintop_last_error() describes the failure. Strings returned
 * through char** are owned by the caller and released with
 * fintop_string_free().
 */
#ifndef FINTOP_H
#define FINTOP_H

#ifndef FINTOP_API
#if defined(_WIN32)
#define FINTOP_API
#else
#define FINTOP_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fintop_space fintop_space;
typedef struct fintop_map fintop_map;
typedef struct fintop_model fintop_model;
typedef struct fintop_context fintop_context;
typedef struct fintop_report fintop_report;

typedef enum fintop_status {
  FINTOP_OK = 0,
  FINTOP_ERR_USAGE = 1,
  FINTOP_ERR_PARSE = 2,
  FINTOP_ERR_VALIDATION = 3,
  FINTOP_ERR_BUDGET = 4,
  FINTOP_ERR_BOUND = 5,
  FINTOP_ERR_NOT_EMBEDDING = 6,
  FINTOP_ERR_NOT_PARALLEL = 7,
  FINTOP_ERR_NOT_IN_SUBCATEGORY = 8,
  FINTOP_ERR_UNKNOWN_NAME = 9,
  FINTOP_ERR_INTERNAL = 10
} fintop_status;

FINTOP_API const char* fintop_version(void);
FINTOP_API const char* fintop_last_error(void);
FINTOP_API void fintop_string_free(char* s);

/* ------------------------------------------------------------- models */

FINTOP_API fintop_status fintop_model_parse(const char* text, fintop_model** out);
FINTOP_API void fintop_model_free(fintop_model* m);
FINTOP_API fintop_status fintop_model_serialize(const fintop_model* m, char** out);
FINTOP_API fintop_status fintop_model_space(const fintop_model* m, const char* name, fintop_space** out);
FINTOP_API fintop_status fintop_model_map(const fintop_model* m, const char* name, fintop_map** out);
FINTOP_API fintop_status fintop_model_context(const fintop_model* m, const char* name, fintop_context** out);
FINTOP_API int fintop_model_space_count(const fintop_model* m);
FINTOP_API int fintop_model_map_count(const fintop_model* m);
FINTOP_API int fintop_model_context_count(const fintop_model* m);

/* ------------------------------------------------------------- spaces */

/* opens are given flattened: open i holds open_points[open_offsets[i] ..
 * open_offsets[i+1]); open_offsets has n_opens+1 entries */
FINTOP_API fintop_status fintop_space_new(int n_points, int n_opens, const int* open_offsets,
                               const int* open_points, fintop_space** out);
FINTOP_API void fintop_space_free(fintop_space* s);
FINTOP_API int fintop_space_points(const fintop_space* s);
FINTOP_API int fintop_space_leq(const fintop_space* s, int x, int y);
FINTOP_API fintop_status fintop_space_opens_count(const fintop_space* s, long long* out);
FINTOP_API fintop_status fintop_space_classify(const fintop_space* s, int* t0, int* discrete, int* indiscrete,
                                    int* zero_dimensional);
FINTOP_API fintop_status fintop_space_canonical(const fintop_space* s, fintop_space** out);
FINTOP_API int fintop_space_equal(const fintop_space* a, const fintop_space* b);
FINTOP_API fintop_status fintop_space_render(const fintop_space* s, const char* name, char** out);
FINTOP_API fintop_status fintop_export_dot(const fintop_space* s, const char* name, char** out);

/* ------------------------------------------------------------- maps */

FINTOP_API fintop_status fintop_map_new(const fintop_space* dom, const fintop_space* cod, const int* table,
                             fintop_map** out);
FINTOP_API void fintop_map_free(fintop_map* m);
FINTOP_API int fintop_map_apply(const fintop_map* m, int point);
FINTOP_API int fintop_map_is_embedding(const fintop_map* m);
FINTOP_API fintop_status fintop_map_render(const fintop_map* m, const char* name, char** out);
FINTOP_API fintop_status fintop_map_dom(const fintop_map* m, fintop_space** out);
FINTOP_API fintop_status fintop_map_cod(const fintop_map* m, fintop_space** out);

/* ------------------------------------------------------------- contexts */

/* name: top | top0 | ind | sob | zerodim */
FINTOP_API fintop_status fintop_context_builtin(const char* name, fintop_context** out);
FINTOP_API fintop_status fintop_context_hull(const fintop_space* a, fintop_context** out);
FINTOP_API void fintop_context_free(fintop_context* c);

/* -------------------------------------------------- categorical operations */

FINTOP_API fintop_status fintop_pushout(const fintop_map* f, const fintop_map* g, fintop_space** w,
                             fintop_map** left, fintop_map** right);
FINTOP_API fintop_status fintop_regular_closure(const fintop_context* ctx, const fintop_map* m,
                                     fintop_map** closure, fintop_map** dense_part, int* is_dense,
                                     int* is_closed);
FINTOP_API fintop_status fintop_orthogonal_closure(const fintop_context* ctx, const fintop_map* m,
                                        fintop_map** closure, fintop_map** dense_part,
                                        int* is_dense, int* is_closed);
FINTOP_API fintop_status fintop_injective_along(const fintop_space* a, const fintop_map* f, int* out);
FINTOP_API fintop_status fintop_orthogonal_along(const fintop_space* a, const fintop_map* f, int* out);

/* sizes of T(n) and T(T(n)) for the dualization monad of a at carrier n;
 * budget_points <= 0 keeps the default space budget */
FINTOP_API fintop_status fintop_monad_counts(const fintop_space* a, int n, long long budget_points,
                                             long long* t_size, long long* tt_size);
/* rendered law report; ok is 1 when every law holds */
FINTOP_API fintop_status fintop_monad_verify(const fintop_space* a, int n, long long budget_points,
                                             char** report_text, int* ok);

/* ------------------------------------------------------------- suites */

FINTOP_API int fintop_suite_count(void);
FINTOP_API const char* fintop_suite_name(int index);
/* n_max/bound <= 0 pick the suite defaults; budget_points <= 0 keeps the
 * default space budget */
FINTOP_API fintop_status fintop_suite_run(const char* name, int n_max, int bound, long long budget_points,
                               fintop_report** out);
FINTOP_API void fintop_report_free(fintop_report* r);
/* format: "text" or "records" */
FINTOP_API fintop_status fintop_report_render(const fintop_report* r, const char* format, char** out);
FINTOP_API void fintop_report_counts(const fintop_report* r, int* pass, int* fail, int* skipped);

#ifdef __cplusplus
}
#endif

#endif /* FINTOP_H */
