/* C interface to the tailrate library. */
#ifndef TAILRATE_TAILRATE_H
#define TAILRATE_TAILRATE_H

#include <stddef.h>
#include <stdint.h>

#if defined(TAILRATE_BUILDING_LIBRARY)
#define TR_API __attribute__((visibility("default")))
#else
#define TR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tr_graph tr_graph;

/* Status codes double as CLI exit codes. */
typedef enum tr_status {
  TR_OK = 0,
  TR_ERR_INTERNAL = 1,
  TR_ERR_INPUT = 2,
  TR_ERR_CAPACITY = 3
} tr_status;

/* Graph handles. */
TR_API tr_status tr_graph_parse(const char* spec, tr_graph** out);
/* edges holds edge_count * r vertex ids, row-major. */
TR_API tr_status tr_graph_from_edges(int r, size_t vertices, const uint32_t* edges,
                                     size_t edge_count, tr_graph** out);
TR_API void tr_graph_free(tr_graph* g);
TR_API tr_status tr_graph_shape(const tr_graph* g, int* r, size_t* vertices, size_t* edges,
                                int* max_degree);

/* Scalar queries. Rationals come back as "num/den" strings. */
TR_API tr_status tr_fractional_matching(const tr_graph* g, char** value);
TR_API tr_status tr_transversal_number(const tr_graph* g, int* tau);
TR_API tr_status tr_stable_labeling_count(const tr_graph* g, size_t cap, size_t* count);
TR_API tr_status tr_beta(const tr_graph* g, double delta, double* beta);
/* method: "lz", "lz-generic", "bi", "new" or "closed". */
TR_API tr_status tr_rate(const tr_graph* g, double delta, const char* method, double* value);

/* Runs a command (info, labelings, rate, check, lp, density, nmf, sweep) with
   options given as a JSON object. The result is JSON (CSV for csv sweeps).
   On TR_ERR_CAPACITY *out may still carry a partial result. */
TR_API tr_status tr_run_command(const char* command, const tr_graph* g, const char* options_json,
                                char** out);

TR_API void tr_string_free(char* s);
/* Message of the last failure on this thread; empty when none. */
TR_API const char* tr_last_error(void);
TR_API const char* tr_version(void);

#ifdef __cplusplus
}
#endif

#endif
