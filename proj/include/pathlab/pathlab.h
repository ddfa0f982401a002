#ifndef PATHLAB_H
#define PATHLAB_H

#include <stddef.h>

#if defined(PATHLAB_BUILDING_LIBRARY)
#define PATHLAB_API __attribute__((visibility("default")))
#else
#define PATHLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
typedef enum {
  PL_OK = 0,
  PL_MALFORMED = 1, /* unreadable or ill-formed input */
  PL_SEMANTIC = 2,  /* well-formed input violating a precondition */
  PL_INTERNAL = 3
} pl_status;

typedef struct pl_model pl_model;

/* Library version, "major.minor.patch". */
PATHLAB_API const char* pl_version(void);

/* Loading. With strict != 0 a model that fails validation is rejected with
   PL_SEMANTIC; otherwise it is loaded so that pl_validate can report. */
PATHLAB_API pl_status pl_model_load_json(const char* json, int strict, pl_model** out);
PATHLAB_API pl_status pl_model_load_file(const char* path, int strict, pl_model** out);

/* Generators: kind is one of "cube", "boundary", "wedge", "double-cube",
   "swiss-flag". dims/ndims give n (cube, boundary) or the summands (wedge). */
PATHLAB_API pl_status pl_model_generate(const char* kind, const int* dims, size_t ndims,
                                        pl_model** out);

PATHLAB_API void pl_model_free(pl_model* model);

/* Every function below writing a char** allocates the result; release it
   with pl_string_free. Results are JSON unless noted. */
PATHLAB_API void pl_string_free(char* s);

PATHLAB_API pl_status pl_model_to_json(const pl_model* model, char** out);

/* Content digest of the input the model was loaded from (empty for
   generated models). */
PATHLAB_API pl_status pl_model_digest(const pl_model* model, char** out);

PATHLAB_API pl_status pl_validate(const pl_model* model, char** out);
PATHLAB_API pl_status pl_chains(const pl_model* model, int length, int list, char** out);

/* dot may be NULL; otherwise it receives the Graphviz text (not JSON). */
PATHLAB_API pl_status pl_category(const pl_model* model, int length, int threads, char** json,
                                  char** dot);

/* triplets may be NULL; otherwise it receives the boundary matrices in
   sparse triplet text form. */
PATHLAB_API pl_status pl_homology(const pl_model* model, int length, int threads, char** out,
                                  char** triplets);

PATHLAB_API pl_status pl_exec_space(const pl_model* model, int max_length, int threads,
                                    char** out);

/* op: length, naturalize, vertices, tame, track, actions, progress,
   minimal, regular. */
PATHLAB_API pl_status pl_path_op(const pl_model* model, const char* path_json, const char* op,
                                 char** out);

PATHLAB_API pl_status pl_tamify(const pl_model* model, const char* path_json, int iterate,
                                char** out);

/* Error of the last failing call on this thread as
   {"error": kind, "message": text}, or NULL. Owned by the library. */
PATHLAB_API const char* pl_last_error(void);

/* Stage timings in milliseconds of the last successful call on this
   thread, as a JSON object. Owned by the library. */
PATHLAB_API const char* pl_last_timings(void);

#ifdef __cplusplus
}
#endif

#endif
