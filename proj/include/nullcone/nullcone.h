/* C interface to the nullcone library.
 *
 * All structured inputs and outputs are JSON strings (schemas documented in
 * the repository README).  Every function that can fail returns an nc_status;
 * on failure the session stores a human-readable message retrievable with
 * nc_last_error().  Output strings are allocated by the library and must be
 * released with nc_string_free().
 *
 * Sessions are cheap, single-threaded contexts: create one per thread.
 */

#ifndef NULLCONE_H
#define NULLCONE_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#define NC_API __declspec(dllexport)
#else
#define NC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nc_session nc_session;

typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_DOMAIN = 1,    /* input outside the operation's mathematical domain */
  NC_ERR_PARAM = 2,     /* malformed parameters or JSON */
  NC_ERR_RESOURCE = 3,  /* enumeration guard or rewrite budget exhausted */
  NC_ERR_INTERNAL = 4   /* broken invariant; indicates a library bug */
} nc_status;

NC_API nc_session* nc_session_create(void);
NC_API void nc_session_destroy(nc_session* s);

/* Message for the most recent failing call on this session ("" if none). */
NC_API const char* nc_last_error(const nc_session* s);

/* Work budget for enumerations (default 10^7 charge units). */
NC_API void nc_set_guard_limit(nc_session* s, uint64_t limit);

NC_API void nc_string_free(char* text);
NC_API void nc_version(int* major, int* minor, int* patch);

/* ---- tableaux and lattices ------------------------------------------- */

/* lattice: {"kind":"D"|"L"|"Pl","n":..,"m":..} or {"kind":"DN","k":..,"n":..} */
NC_API nc_status nc_enumerate_lattice(nc_session* s, const char* lattice_json, char** out_json);

/* shape: [r1,r2,...]; filter (optional, may be NULL):
 * {"row_content":[...],"col_content":[...]} */
NC_API nc_status nc_enumerate_standard(nc_session* s, const char* lattice_json, const char* shape_json,
                                       const char* filter_json, char** out_json);

/* request: {"shape":[...],"max_entry":M,"floor":[...](optional)} */
NC_API nc_status nc_enumerate_ssyt(nc_session* s, const char* request_json, char** out_json);

/* "leq" | "geq" | "eq" | "incomparable" */
NC_API nc_status nc_compare(nc_session* s, const char* tableau_a, const char* tableau_b, char** out_json);

NC_API nc_status nc_meet(nc_session* s, const char* lattice_json, const char* tableau_a, const char* tableau_b,
                         char** out_json);
NC_API nc_status nc_join(nc_session* s, const char* lattice_json, const char* tableau_a, const char* tableau_b,
                         char** out_json);

NC_API nc_status nc_xi(nc_session* s, int n, int m, const char* tableau_json, char** out_json);
NC_API nc_status nc_xi_inverse(nc_session* s, int n, int m, const char* indices_json, char** out_json);

/* {"minus":SSYT,"plus":SSYT} for the row/column halves of a standard tableau */
NC_API nc_status nc_split(nc_session* s, int rows, int cols, const char* double_tableau_json, char** out_json);

NC_API nc_status nc_maximal_chains(nc_session* s, const char* lattice_json, char** out_json);

/* ---- patterns --------------------------------------------------------- */

NC_API nc_status nc_pattern_from_tableau(nc_session* s, int m, const char* ssyt_json, char** out_json);
NC_API nc_status nc_tableau_from_pattern(nc_session* s, const char* pattern_json, char** out_json);
NC_API nc_status nc_reduce_mod_top(nc_session* s, int n, int m, const char* pattern_json, char** out_json);
NC_API nc_status nc_glue(nc_session* s, const char* pattern_minus, const char* pattern_plus, char** out_json);

/* {"minus":PATTERN,"plus":PATTERN} */
NC_API nc_status nc_split_glued(nc_session* s, const char* pattern_json, char** out_json);

NC_API nc_status nc_sp_restrict(nc_session* s, const char* pattern_json, char** out_json);
NC_API nc_status nc_sp_embed(nc_session* s, const char* pattern_json, char** out_json);

/* pattern of a standard tableau over the (n,m) matrix, on the reduced poset */
NC_API nc_status nc_pattern_of_product(nc_session* s, int n, int m, const char* product_text, char** out_json);

NC_API nc_status nc_pattern_add(nc_session* s, const char* pattern_a, const char* pattern_b, char** out_json);

/* poset: {"kind":"gamma_m","m":..} | {"kind":"gamma_nm","n":..,"m":..} |
 *        {"kind":"digamma","k":..,"n":..} | {"kind":"sp_half","n":..}   */
NC_API nc_status nc_enumerate_cone_points(nc_session* s, const char* poset_json, const char* top_shape_json,
                                          char** out_json);
NC_API nc_status nc_cone_inequalities(nc_session* s, const char* poset_json, char** out_json);
NC_API nc_status nc_count_linear_extensions(nc_session* s, const char* poset_json, char** out_json);

/* ---- straightening ---------------------------------------------------- */

/* product_text: "[i1 i2:j1 j2],[...]"; weight_base: decimal string or NULL */
NC_API nc_status nc_straighten(nc_session* s, int n, int m, const char* product_text, const char* weight_base,
                               char** out_json);

NC_API nc_status nc_weight(nc_session* s, int n, int m, const char* product_text, const char* weight_base,
                           char** out_json);

/* ---- isotropic-locus ring --------------------------------------------- */

NC_API nc_status nc_nullcone_straighten(nc_session* s, int k, int n, const char* product_text,
                                        const char* weight_base, int verify_points, uint64_t seed, char** out_json);

/* {"shape":...,"count":"...","dim_gl":"...","dim_sp":"...","tableaux":[...]} */
NC_API nc_status nc_nullcone_count(nc_session* s, int k, int n, const char* shape_json, int include_tableaux,
                                   char** out_json);

NC_API nc_status nc_omega_sum(nc_session* s, int n, const char* indices_json, char** out_json);

NC_API nc_status nc_theta(nc_session* s, int k, int n, const char* rows_json, const char* cols_json,
                          char** out_json);

NC_API nc_status nc_basic_invariant(nc_session* s, int k, int n, int i, int j, char** out_json);

NC_API nc_status nc_sample_point(nc_session* s, int k, int n, uint64_t seed, char** out_json);

/* {"candidates":N,"rank":R,"points_used":P,"full_rank":bool} */
NC_API nc_status nc_independence(nc_session* s, int k, int n, int max_degree, int num_points, uint64_t seed,
                                 char** out_json);

/* ---- verification ----------------------------------------------------- */

/* out_report: fixed-order pass/fail table; *failures receives the count. */
NC_API nc_status nc_verify_all(nc_session* s, int max_size, uint64_t seed, int* failures, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* NULLCONE_H */
