/* papercut -- C interface for the jumbo-reel cutting schedule library.
 *
 * The library models one-dimensional reel slitting: a pool of customer
 * orders (roll width x roll count) is packed onto fixed-width parent reels
 * so that every order is cut exactly and the total trim loss is minimal.
 *
 * All objects are opaque handles created and released through this API.
 * Functions that can fail return a papercut_status; on failure the handle
 * output is left untouched and papercut_last_error() carries a diagnostic
 * for the calling thread.
 */
#ifndef PAPERCUT_H
#define PAPERCUT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PAPERCUT_API __declspec(dllexport)
#else
#define PAPERCUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum papercut_status {
  PAPERCUT_OK = 0,
  PAPERCUT_ERR_IO = 1,            /* unreadable input */
  PAPERCUT_ERR_PARSE = 2,         /* malformed document */
  PAPERCUT_ERR_SEMANTIC = 3,      /* well-formed but violates an invariant */
  PAPERCUT_ERR_BAD_ARGUMENT = 4,  /* null handle, unknown tag, bad flag */
  PAPERCUT_ERR_UNSATISFIABLE = 5, /* an order is wider than the usable reel */
  PAPERCUT_ERR_TOO_LARGE = 6,     /* instance exceeds the exact-search guard */
  PAPERCUT_ERR_INTERNAL = 7
} papercut_status;

/* Order pool: demand lines plus the deckle (usable reel width). */
typedef struct papercut_pool papercut_pool;
/* Solver output: cutting patterns, expanded schedule, waste metrics. */
typedef struct papercut_result papercut_result;
/* Schedule document parsed from JSON, for validation of external plans. */
typedef struct papercut_patterns papercut_patterns;

/* Message for the most recent failing call on this thread. Never NULL. */
PAPERCUT_API const char* papercut_last_error(void);

/* ---- pools ------------------------------------------------------------ */

/* CSV pools carry no deckle block; it is supplied here. `unit` is "cm" or
 * "mm". The header row must be exactly `id,width,count` or
 * `id,width,count,weight`. */
PAPERCUT_API papercut_status papercut_pool_parse_csv(const char* text, size_t length,
                                                     int64_t nominal_width,
                                                     int64_t trim_allowance,
                                                     const char* unit,
                                                     papercut_pool** out_pool);

/* JSON pool document with an embedded deckle block. Unknown fields are
 * rejected. */
PAPERCUT_API papercut_status papercut_pool_parse_json(const char* text, size_t length,
                                                      papercut_pool** out_pool);

PAPERCUT_API void papercut_pool_free(papercut_pool* pool);

PAPERCUT_API int64_t papercut_pool_orders(const papercut_pool* pool);
PAPERCUT_API int64_t papercut_pool_rolls(const papercut_pool* pool);
PAPERCUT_API int64_t papercut_pool_demand_width(const papercut_pool* pool);
PAPERCUT_API int64_t papercut_pool_effective_width(const papercut_pool* pool);
PAPERCUT_API const char* papercut_pool_unit(const papercut_pool* pool);

/* Ceiling of demand width over effective width. Fails with
 * PAPERCUT_ERR_UNSATISFIABLE when some order cannot fit any reel. */
PAPERCUT_API papercut_status papercut_pool_lower_bound(const papercut_pool* pool,
                                                       int64_t* out_reels);

/* ---- solving ----------------------------------------------------------- */

/* `algorithm` is one of "coupling", "first-fit", "best-fit", "exact".
 * "exact" runs with the default node budget and is guarded to small
 * instances (PAPERCUT_ERR_TOO_LARGE otherwise). */
PAPERCUT_API papercut_status papercut_solve(const papercut_pool* pool,
                                            const char* algorithm,
                                            papercut_result** out_result);

/* Exact search with an explicit node budget (> 0). When the budget runs
 * out the best incumbent is returned and papercut_result_proven() is 0. */
PAPERCUT_API papercut_status papercut_solve_exact(const papercut_pool* pool,
                                                  int64_t node_budget,
                                                  papercut_result** out_result);

PAPERCUT_API void papercut_result_free(papercut_result* result);

PAPERCUT_API int64_t papercut_result_reels(const papercut_result* result);
PAPERCUT_API int64_t papercut_result_trim_loss(const papercut_result* result);
PAPERCUT_API int papercut_result_proven(const papercut_result* result);

/* Renders the schedule report. `format` is "table", "csv", or "json"
 * ("structured" is accepted as an alias for "json"). The returned string is
 * heap-allocated; release it with papercut_string_free(). */
PAPERCUT_API papercut_status papercut_result_render(const papercut_result* result,
                                                    const papercut_pool* pool,
                                                    const char* format,
                                                    char** out_text);

/* Construction steps, one per line. Empty string when no trace exists. */
PAPERCUT_API papercut_status papercut_result_trace(const papercut_result* result,
                                                   char** out_text);

/* ---- validating external schedules ------------------------------------- */

PAPERCUT_API papercut_status papercut_patterns_parse_json(const char* text, size_t length,
                                                          papercut_patterns** out_patterns);

PAPERCUT_API void papercut_patterns_free(papercut_patterns* patterns);

/* Checks the schedule against the pool: per-slot capacity, no empty slots,
 * and exact demand per order. Violations are data, not errors: the call
 * succeeds, `out_valid` reports the verdict and `out_report` the details. */
PAPERCUT_API papercut_status papercut_validate(const papercut_pool* pool,
                                               const papercut_patterns* patterns,
                                               char** out_report,
                                               int* out_valid);

PAPERCUT_API void papercut_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* PAPERCUT_H */
