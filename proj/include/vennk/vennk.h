/*
 * vennk C API.
 *
 * Families, reports and search jobs are reached through opaque handles.
 * Every call returns a vennk_status; on failure the thread-local
 * vennk_last_error() / vennk_last_error_json() describe what went wrong.
 * Strings returned through `char**` out-parameters are owned by the caller
 * and released with vennk_string_free().
 */
#ifndef VENNK_VENNK_H
#define VENNK_VENNK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef VENNK_BUILDING_LIBRARY
#    define VENNK_API __declspec(dllexport)
#  else
#    define VENNK_API __declspec(dllimport)
#  endif
#else
#  define VENNK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vennk_status {
  VENNK_OK = 0,
  VENNK_ERR_ARGUMENT = 1,      /* null handle or out-pointer */
  VENNK_ERR_PARSE = 2,         /* malformed document or config */
  VENNK_ERR_DEGENERATE = 3,    /* overlap, corner incidence or tangency */
  VENNK_ERR_DOMAIN = 4,        /* argument out of range */
  VENNK_ERR_NOT_VENN = 5,      /* operation requires a Venn diagram */
  VENNK_ERR_RETRIES = 6,       /* perturbation or splitting gave up */
  VENNK_ERR_INTERNAL = 7,
  VENNK_ERR_EPSILON = 8,       /* split step removed a region at every scale tried */
  VENNK_ERR_CANCELLED = 9
} vennk_status;

typedef struct vennk_family vennk_family;
typedef struct vennk_search vennk_search;

VENNK_API const char* vennk_version(void);
VENNK_API const char* vennk_last_error(void);
/* {"message": ..., "code": ..., and for degeneracies "kind", "curves", "at"} */
VENNK_API const char* vennk_last_error_json(void);
VENNK_API void vennk_string_free(char* s);

/* Family documents (the `.family` text format). */
VENNK_API vennk_status vennk_family_parse(const char* text, vennk_family** out);
VENNK_API vennk_status vennk_family_load(const char* path, vennk_family** out);
VENNK_API vennk_status vennk_family_serialize(const vennk_family* family, char** out_text);
VENNK_API size_t vennk_family_size(const vennk_family* family);
VENNK_API void vennk_family_free(vennk_family* family);

/* Report JSON; *is_venn (optional) receives 1 or 0. */
VENNK_API vennk_status vennk_verify(const vennk_family* family, int with_audit, char** out_report_json,
                                    int* is_venn);
/* {"report": <report>, "geometry": {"vertices": [...], "edges": [...]}} */
VENNK_API vennk_status vennk_verify_with_geometry(const vennk_family* family, int with_audit, char** out_json);
VENNK_API vennk_status vennk_audit(const vennk_family* family, char** out_audit_json);

VENNK_API vennk_status vennk_bounds_json(int n_min, int n_max, char** out_json);
VENNK_API vennk_status vennk_bounds_text(int n_min, int n_max, char** out_text);

/* epsilon is an exact decimal or "p/q" string. */
VENNK_API vennk_status vennk_perturb(const vennk_family* family, const char* epsilon, uint64_t seed,
                                     vennk_family** out);
VENNK_API vennk_status vennk_split(const vennk_family* family, const char* epsilon, uint64_t seed,
                                   vennk_family** out, char** out_report_json);

VENNK_API vennk_status vennk_render_svg(const vennk_family* family, int shade_faces, char** out_svg);

/* Search (config in the `vennk-search` text format). */
typedef void (*vennk_progress_fn)(const char* progress_json, void* user);

/* Runs to completion on the calling thread. out_family_text receives the
 * best generator as a symmetric family document. */
VENNK_API vennk_status vennk_search_run(const char* config_text, vennk_progress_fn progress, void* user,
                                        char** out_family_text, char** out_result_json);

/* Background job. Status JSON: {"state": "running"|"done"|"cancelled"|"failed",
 * "iteration", "best_deficiency", "result", "family", "error"}. */
VENNK_API vennk_status vennk_search_start(const char* config_text, vennk_search** out);
VENNK_API vennk_status vennk_search_status(vennk_search* job, char** out_status_json);
VENNK_API void vennk_search_cancel(vennk_search* job);
/* Cancels if still running and waits for the worker to exit. */
VENNK_API void vennk_search_free(vennk_search* job);

#ifdef __cplusplus
}
#endif

#endif /* VENNK_VENNK_H */
