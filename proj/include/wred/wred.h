#ifndef WRED_H
#define WRED_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(WRED_BUILDING)
#define WRED_API __attribute__((visibility("default")))
#else
#define WRED_API
#endif

typedef enum {
  WRED_OK = 0,
  WRED_INVALID_ARGUMENT = 1,
  WRED_PARSE = 2,
  WRED_INVALID_DIMENSION = 3,
  WRED_BAD_TRIPLE = 4,
  WRED_BAD_GRADING = 5,
  WRED_NOT_ISOTROPIC = 6,
  WRED_A_CONDITION = 7,
  WRED_DEGENERATE_FORM = 8,
  WRED_NO_FINITE_ORDER_INVERSE = 9,
  WRED_SHAPE_MISMATCH = 10,
  WRED_UNKNOWN_EXAMPLE = 11,
  WRED_INTERNAL = 12
} wred_status;

typedef struct wred_problem wred_problem;
typedef struct wred_result wred_result;

/* Message of the last failed call on this thread ("" if none). */
WRED_API const char* wred_last_error(void);
WRED_API const char* wred_status_name(wred_status status);

/* Strings returned through char** are owned by the caller. */
WRED_API void wred_string_free(char* s);

/* Problem description in JSON (builtin/partition or algebra/triple, grading, isotropic, a, ...). */
WRED_API wred_status wred_problem_create(const char* problem_json, wred_problem** out);
WRED_API void wred_problem_free(wred_problem* p);
WRED_API wred_status wred_problem_name(const wred_problem* p, char** out);
WRED_API wred_status wred_problem_setup_json(const wred_problem* p, char** out);

/* methods: "tensor", "dirac", "ds", "all" or a comma separated list. */
WRED_API wred_status wred_reduce(const wred_problem* p, const char* methods, wred_result** out);
WRED_API void wred_result_free(wred_result* r);
/* 1 if every method that ran produced the same pencil. */
WRED_API int wred_result_methods_agree(const wred_result* r);
/* Whole document (header, P2, P1 and P_lambda tables); format "text" or "json". */
WRED_API wred_status wred_result_render(const wred_result* r, const char* format, char** out);
/* One table; structure "P1", "P2" or "Plambda". */
WRED_API wred_status wred_result_table(const wred_result* r, const char* structure, const char* format, char** out);

/* Verification suite. options_json may be NULL; keys: gradings, lambdas, jacobi_weight,
   jacobi, golden (table text or JSON), seed. Report is JSON. */
WRED_API wred_status wred_verify(const char* problem_json, const char* options_json, char** report_json, int* passed);

/* JSON object mapping relative paths to file contents. */
WRED_API wred_status wred_example_bundle(const char* name, char** out);

#ifdef __cplusplus
}
#endif

#endif
