/* starlab — exact set-family laboratory: C API.
 *
 * The core is C++ behind this flat extern-C surface: opaque handles,
 * integer status codes, caller-owned strings. Every function returns
 * STARLAB_OK or an error code; on error, starlab_last_error() gives a
 * thread-local message for the failing call. Strings returned through
 * char** are heap-allocated and must be released with
 * starlab_string_free().
 *
 * Conventions: ground-set elements are 1-based; a family member travels as
 * a 64-bit mask with element e at bit e-1. Exact rationals travel as
 * strings "p" or "p/q". Report formats are "json", "csv" or "text".
 */
#ifndef STARLAB_H
#define STARLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct starlab_family starlab_family;
typedef struct starlab_graph starlab_graph;
typedef struct starlab_weights starlab_weights;
typedef struct starlab_verdict starlab_verdict;
typedef struct starlab_report starlab_report;

typedef enum starlab_status {
    STARLAB_OK = 0,
    STARLAB_ERR_DOMAIN = 1,   /* caller violated a precondition */
    STARLAB_ERR_LIMIT = 2,    /* a size guard tripped */
    STARLAB_ERR_PARSE = 3,    /* malformed text input */
    STARLAB_ERR_OVERFLOW = 4, /* exact arithmetic left 64 bits */
    STARLAB_ERR_NULL = 5,     /* required pointer was NULL */
    STARLAB_ERR_INTERNAL = 6
} starlab_status;

const char* starlab_status_name(starlab_status status);
const char* starlab_last_error(void);
void starlab_string_free(char* s);

/* ---- families ------------------------------------------------------- */

starlab_status starlab_power_set(int n, starlab_family** out);
starlab_status starlab_k_subsets(int n, int r, starlab_family** out);
starlab_status starlab_family_from_text(const char* text, starlab_family** out);
starlab_status starlab_family_to_text(const starlab_family* f, char** out);
void starlab_family_free(starlab_family* f);

starlab_status starlab_family_ground_size(const starlab_family* f, int* out);
starlab_status starlab_family_size(const starlab_family* f, size_t* out);
starlab_status starlab_family_member(const starlab_family* f, size_t index, uint64_t* bits);

starlab_status starlab_family_slice(const starlab_family* f, int r, starlab_family** out);
starlab_status starlab_family_star(const starlab_family* f, int element, starlab_family** out);
starlab_status starlab_family_is_intersecting(const starlab_family* f, int* out);
starlab_status starlab_families_cross_intersecting(const starlab_family* a,
                                                   const starlab_family* b, int* out);

/* ---- labeled universe [n] x [k] -------------------------------------- */

starlab_status starlab_lnk_enumerate(int n, int k, int r, starlab_family** out);
starlab_status starlab_lnk_delta(int n, int k, int i, int j, uint64_t bits, uint64_t* out);
starlab_status starlab_lnk_compress(int n, int k, int i, int j, const starlab_family* f,
                                    starlab_family** out);
starlab_status starlab_lnk_full_compress(int n, int k, const starlab_family* f,
                                         starlab_family** out);
starlab_status starlab_lnk_trace(int n, int k, const starlab_family* f, starlab_family** out);
starlab_status starlab_labeled_to_text(int n, int k, const starlab_family* f, char** out);
starlab_status starlab_labeled_from_text(const char* text, int* n, int* k, starlab_family** out);

/* ---- graphs and the depth-two claw ----------------------------------- */

starlab_status starlab_graph_from_text(const char* text, starlab_graph** out);
starlab_status starlab_graph_to_text(const starlab_graph* g, char** out);
void starlab_graph_free(starlab_graph* g);
starlab_status starlab_build_tn(int n, starlab_graph** out);
starlab_status starlab_graph_vertex_count(const starlab_graph* g, int* out);
starlab_status starlab_graph_neighbors(const starlab_graph* g, int vertex, uint64_t* out);
starlab_status starlab_graph_independent_sets(const starlab_graph* g, int r, starlab_family** out);
starlab_status starlab_graph_mu(const starlab_graph* g, int* out);

starlab_status starlab_itn_enumerate(int n, int r, starlab_family** out);
starlab_status starlab_gamma_compress(int n, const starlab_family* f, starlab_family** out);
starlab_status starlab_split_x0(int n, const starlab_family* f, starlab_family** h0,
                                starlab_family** h1, starlab_family** h1prime);
starlab_status starlab_claw_family_to_text(int n, const starlab_family* f, char** out);
starlab_status starlab_claw_family_from_text(const char* text, int* n, starlab_family** out);

/* ---- weights ---------------------------------------------------------- */

/* entries[i] is the rational w_i as "p" or "p/q", i = 0..n. */
starlab_status starlab_weights_create(int n, const char* const* entries, starlab_weights** out);
starlab_status starlab_weights_from_text(const char* text, starlab_weights** out);
starlab_status starlab_weights_to_text(const starlab_weights* w, char** out);
void starlab_weights_free(starlab_weights* w);
starlab_status starlab_weights_n(const starlab_weights* w, int* out);
starlab_status starlab_weights_entry(const starlab_weights* w, int i, char** out);

starlab_status starlab_check_thm2_conditions(const starlab_weights* a, const starlab_weights* b,
                                             int* out);
starlab_status starlab_weighted_sum(const starlab_family* f, const starlab_weights* w, char** out);
starlab_status starlab_star_rhs(const starlab_weights* a, const starlab_weights* b, char** out);
starlab_status starlab_proof_weights(int n, int r, starlab_weights** a, starlab_weights** b);

/* ---- exact searches ---------------------------------------------------- */

starlab_status starlab_max_intersecting(const starlab_family* f, starlab_verdict** out);
starlab_status starlab_largest_star(const starlab_family* f, int* element, size_t* size);
starlab_status starlab_fjt_verdict(int n, int r, starlab_verdict** out);

/* trials < 0 selects exhaustive mode (n <= 4, seed ignored). */
starlab_status starlab_max_weighted_pair(int n, const starlab_weights* a,
                                         const starlab_weights* b, uint64_t seed, int trials,
                                         starlab_verdict** out);

void starlab_verdict_free(starlab_verdict* v);
starlab_status starlab_verdict_optimum(const starlab_verdict* v, char** out);
starlab_status starlab_verdict_star_property(const starlab_verdict* v, int* holds);
starlab_status starlab_verdict_largest_star(const starlab_verdict* v, int* element, char** value);
starlab_status starlab_verdict_nodes(const starlab_verdict* v, uint64_t* out);
starlab_status starlab_verdict_witness(const starlab_verdict* v, starlab_family** out);
starlab_status starlab_verdict_render(const starlab_verdict* v, const char* format, char** out);

/* Proof replays. Both render the full ledger in the requested format and
 * report the overall flag through *pass. */
starlab_status starlab_thm2_proof_trace(const starlab_family* a_family,
                                        const starlab_family* b_family, const starlab_weights* a,
                                        const starlab_weights* b, const char* format, int* pass,
                                        char** out);
starlab_status starlab_thm5_case2_report(int n, int r, const starlab_family* e,
                                         const char* format, int* pass, char** out);

/* ---- verification suites ---------------------------------------------- */

/* name: ekr | fjt | eq1 | lemma6 | gamma | thm2. n_max/trials <= 0 pick
 * the suite's documented defaults. */
starlab_status starlab_suite_run(const char* name, int n_max, uint64_t seed, int trials,
                                 starlab_report** out);
void starlab_report_free(starlab_report* r);
starlab_status starlab_report_pass(const starlab_report* r, int* out);
starlab_status starlab_report_render(const starlab_report* r, const char* format, char** out);
/* Newline-separated "name: invariant" lines for every suite. */
starlab_status starlab_suite_list(char** out);

/* Family listing used by the enumerate command; target: powerset | knr |
 * lnk | itn (n/r/k as applicable). */
starlab_status starlab_render_enumeration(const char* target, int n, int r, int k,
                                          const char* format, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STARLAB_H */
