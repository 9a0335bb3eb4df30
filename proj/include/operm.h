/* C interface to the operm library: exact operadic computations on the
 * symmetric group algebras, their descent-set and planar-tree quotients,
 * the coradical filtration, and Dynkin's element.
 *
 * All functions return an operm_status code. Out-parameters are only written
 * on OPERM_OK. Strings returned through char** are heap-allocated; release
 * them with operm_string_free. Handles are opaque; release combos with
 * operm_combo_free and contexts with operm_ctx_free. A context may be shared
 * across threads for read-only use.
 */

#ifndef OPERM_H
#define OPERM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct operm_ctx operm_ctx;
typedef struct operm_combo operm_combo;

typedef enum operm_status {
  OPERM_OK = 0,
  OPERM_ERR_CHECK_FAILED = 1, /* a verification suite ran and found failures */
  OPERM_ERR_INVALID = 2,      /* bad input: parse error, slot/degree misuse */
  OPERM_ERR_CAP = 3,          /* degree cap exceeded */
  OPERM_ERR_INTERNAL = 4
} operm_status;

const char* operm_version(void);

/* Thread-local message describing the most recent failure in this thread. */
const char* operm_last_error(void);

void operm_string_free(char* s);

/* Context: degree cap (default 8) and optional on-disk cache directory for
 * materialized order tables. */
operm_ctx* operm_ctx_new(void);
void operm_ctx_free(operm_ctx* ctx);
operm_status operm_ctx_set_max_degree(operm_ctx* ctx, int max_degree);
int operm_ctx_max_degree(const operm_ctx* ctx);
operm_status operm_ctx_set_cache_dir(operm_ctx* ctx, const char* dir);
operm_status operm_ctx_save_caches(operm_ctx* ctx);

/* Combos. family is "S", "Q", or "Y"; basis is "F" or "M".
 *
 * index_spec syntax for a single term:
 *   S: comma-separated one-line notation, e.g. "2,3,1"
 *   Q: comma-separated members of the subset (may be empty), with the degree
 *      given separately, e.g. "1,3" with degree 4, or "" with degree 3
 *   Y: balanced parentheses over leaves, e.g. "(o (o o))"
 * degree is required for family Q and otherwise may be 0 (inferred). */
operm_status operm_combo_term(operm_ctx* ctx, const char* family,
                              const char* basis, const char* index_spec,
                              int degree, operm_combo** out);

/* Parses the JSON form produced by operm_combo_to_json. */
operm_status operm_combo_parse_json(operm_ctx* ctx, const char* json,
                                    operm_combo** out);

operm_status operm_combo_to_json(const operm_combo* combo, char** out);
void operm_combo_free(operm_combo* combo);

/* Slot composition x o_i y within one family and basis. */
operm_status operm_compose(operm_ctx* ctx, const operm_combo* x,
                           const operm_combo* y, int i, operm_combo** out);

/* Basis change; to_basis is "F" or "M". */
operm_status operm_convert(operm_ctx* ctx, const operm_combo* x,
                           const char* to_basis, operm_combo** out);

/* Dynkin's element theta_n in the requested basis. */
operm_status operm_dynkin(operm_ctx* ctx, int n, const char* basis,
                          operm_combo** out);

/* Fibers of the projection S_{n+m-1} -> S_n x S_m at slot i. */
operm_status operm_fibers_text(operm_ctx* ctx, int n, int m, int i, char** out);
operm_status operm_fibers_dot(operm_ctx* ctx, int n, int m, int i, char** out);

/* Hasse diagram of one family's order at degree n, DOT form. */
operm_status operm_hasse_dot(operm_ctx* ctx, const char* family, int n,
                             char** out);

/* Runs a named verification suite; report_json receives a JSON report either
 * way. Returns OPERM_OK when every check passed, OPERM_ERR_CHECK_FAILED when
 * the suite ran and found a failure. max_degree <= 0 selects the suite's
 * pinned default bound. */
operm_status operm_run_check(operm_ctx* ctx, const char* suite, int max_degree,
                             char** report_json);

/* Newline-separated list of suite names. */
operm_status operm_suite_names(char** out);

#ifdef __cplusplus
}
#endif

#endif /* OPERM_H */
