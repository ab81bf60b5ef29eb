/* This file is part of hassepairs.
 *
 * Licensed under the Apache License, Version 2.0 (see
 * LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
 *
 * C API of the Hasse-pair toolkit.  All functions return a status code;
 * results come back either as malloc'd UTF-8 strings (free them with
 * hasse_string_free) or through a per-line callback for streaming commands.
 * Handles are opaque; a context carries the modular-polynomial directory
 * and its parsed tables.
 */

#ifndef HASSEPAIRS_H
#define HASSEPAIRS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hasse_ctx hasse_ctx;

typedef enum hasse_status {
    HASSE_OK = 0,
    HASSE_E_INVALID = 1,        /* malformed input, bad bound, non prime power */
    HASSE_E_NOT_HASSE = 2,      /* inputs are not a Hasse pair */
    HASSE_E_UNSUPPORTED = 3,    /* outside a documented cap or whitelist */
    HASSE_E_IO = 4,             /* missing or malformed data file */
    HASSE_E_INTERNAL = 5
} hasse_status;

typedef void (*hasse_line_cb)(const char* line, size_t len, void* user);

/* modpoly_dir may be NULL: the HASSE_MODPOLY_DIR environment variable is
 * used, falling back to ./data/modpoly. */
hasse_status hasse_ctx_new(const char* modpoly_dir, hasse_ctx** out);
void hasse_ctx_free(hasse_ctx* ctx);

/* message for the most recent failure on this thread */
const char* hasse_last_error(void);
void hasse_string_free(char* s);
const char* hasse_version(void);

/* PairRecord as a JSON object; include_curves adds per-side j lists. */
hasse_status hasse_classify_json(hasse_ctx* ctx, uint64_t q1, uint64_t q2,
                                 int include_curves, unsigned jobs,
                                 char** json_out);

/* Both B-isogeny graphs, DOT (as_dot != 0) or JSON.  degrees may be NULL to
 * use the default set.  allow_ss admits supersingular sides within caps. */
hasse_status hasse_graph_render(hasse_ctx* ctx, uint64_t q1, uint64_t q2,
                                const unsigned* degrees, size_t n_degrees,
                                int as_dot, int allow_ss, unsigned jobs,
                                char** out);

/* isomorphic_out: 1 when a bijection exists, 0 otherwise. */
hasse_status hasse_verify_iso(hasse_ctx* ctx, uint64_t q1, uint64_t q2,
                              const unsigned* degrees, size_t n_degrees,
                              int allow_ss, unsigned jobs, int* isomorphic_out,
                              char** json_out);

/* JSON-lines streams; each ends with one {"type":"summary"} object. */
hasse_status hasse_search_empty(hasse_ctx* ctx, uint64_t max_q, unsigned jobs,
                                uint64_t* findings_out, hasse_line_cb cb,
                                void* user);
hasse_status hasse_andrica(hasse_ctx* ctx, uint64_t max_q,
                           int over_prime_powers, uint64_t* violations_out,
                           hasse_line_cb cb, void* user);
hasse_status hasse_partners(hasse_ctx* ctx, uint64_t max_p, int emit_counts,
                            unsigned jobs, uint64_t* exceptions_out,
                            hasse_line_cb cb, void* user);
hasse_status hasse_partner_count(hasse_ctx* ctx, uint64_t p,
                                 uint64_t* count_out);
hasse_status hasse_enumerate(hasse_ctx* ctx, uint64_t max_q,
                             const char* cell_filter, int odd_only,
                             unsigned jobs, hasse_line_cb cb, void* user);

#ifdef __cplusplus
}
#endif

#endif /* HASSEPAIRS_H */
