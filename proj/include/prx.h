#ifndef PRX_H
#define PRX_H

/* C interface to libprx: PageRank vectors of unweighted directed graphs at
 * an arbitrary jumping parameter, ladder constructions that maximize the
 * sensitivity of the ranking to that parameter, and tools that measure the
 * resulting discrepancies.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free call. Functions that can fail return a prx_status; on
 * failure output parameters are left untouched and prx_last_error() holds a
 * thread-local description. Strings returned through char** are heap
 * allocated and must be released with prx_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prx_status {
  PRX_OK = 0,
  PRX_E_ARGUMENT = 1,      /* precondition violated (range, alpha, sizes) */
  PRX_E_DUPLICATE_ARC = 2, /* arc already present */
  PRX_E_PARSE = 3,         /* malformed graph text */
  PRX_E_ALPHA1 = 4,        /* alpha = 1 requested but the walk has no limit */
  PRX_E_NUMERIC = 5,       /* solver failure */
  PRX_E_INTERNAL = 6
} prx_status;

const char* prx_status_name(prx_status status);
const char* prx_last_error(void);
void prx_string_free(char* text);

typedef struct prx_digraph prx_digraph;
typedef struct prx_vector prx_vector;
typedef struct prx_gamma prx_gamma;
typedef struct prx_sweep prx_sweep;
typedef struct prx_limit prx_limit;
typedef struct prx_search prx_search;

/* ---- directed graphs -------------------------------------------------- */

prx_status prx_digraph_new(int vertex_count, prx_digraph** out);
prx_status prx_digraph_parse(const char* text, prx_digraph** out);
void prx_digraph_free(prx_digraph* g);

prx_status prx_digraph_add_arc(prx_digraph* g, int u, int v);
int prx_digraph_order(const prx_digraph* g);
int prx_digraph_arc_count(const prx_digraph* g);
int prx_digraph_has_arc(const prx_digraph* g, int u, int v);
prx_status prx_digraph_out_degree(const prx_digraph* g, int u, int* out);

int prx_digraph_is_weakly_connected(const prx_digraph* g);
int prx_digraph_alpha1_valid(const prx_digraph* g);
int prx_digraph_scc_count(const prx_digraph* g);
int prx_digraph_sink_scc_count(const prx_digraph* g);

prx_status prx_digraph_serialize(const prx_digraph* g, char** out_text);

/* ---- PageRank solvers -------------------------------------------------- */

/* Direct solve; alpha = 1 takes the pure-walk path. */
prx_status prx_solve(const prx_digraph* g, double alpha, prx_vector** out);
prx_status prx_solve_power(const prx_digraph* g, double alpha, double tol, long long max_iter,
                           prx_vector** out);
prx_status prx_solve_alpha1(const prx_digraph* g, prx_vector** out);
prx_status prx_simulate_walk(const prx_digraph* g, double alpha, long long steps,
                             unsigned long long seed, prx_vector** out);

void prx_vector_free(prx_vector* v);
int prx_vector_size(const prx_vector* v);
double prx_vector_value(const prx_vector* v, int vertex);
double prx_vector_alpha(const prx_vector* v);
const char* prx_vector_method(const prx_vector* v); /* exact|power|alpha1|walk */
int prx_vector_converged(const prx_vector* v);      /* power iteration only */
long long prx_vector_iterations(const prx_vector* v);
prx_status prx_vector_csv(const prx_vector* v, char** out_text);

/* ---- ladder constructions and closed-form predictions ------------------ */

prx_status prx_gamma_build(int k, int m, prx_gamma** out);
void prx_gamma_free(prx_gamma* g);
const prx_digraph* prx_gamma_graph(const prx_gamma* g);
int prx_gamma_k(const prx_gamma* g);
int prx_gamma_m(const prx_gamma* g);
int prx_gamma_vertex_a(const prx_gamma* g);
prx_status prx_gamma_vertex_b(const prx_gamma* g, int i, int* out); /* B_i, 1-based */
prx_status prx_gamma_vertex_c(const prx_gamma* g, int i, int* out); /* C_i, 1-based */

double prx_predict_c_mass(double m);
double prx_predict_discrepancy(double m);
void prx_predict_argmax(double* m_out, double* value_out);
double prx_pi_a_upper_bound(int k);
double prx_bi_lower_bound(int k, int i, double pi_c2);
prx_status prx_predict_table_csv(double m_max, double step, char** out_text);

/* ---- discrepancy measurement ------------------------------------------- */

/* p >= 1; pass INFINITY for the max norm. */
prx_status prx_norm_diff(const prx_vector* a, const prx_vector* b, double p, double* out);

/* Fills up to capacity entries and returns the full grid length. */
int prx_default_grid(double* out, int capacity);

prx_status prx_sweep_run(const prx_digraph* g, double alpha_ref, const double* grid,
                         int grid_len, prx_sweep** out);
void prx_sweep_free(prx_sweep* s);
int prx_sweep_size(const prx_sweep* s);
double prx_sweep_alpha(const prx_sweep* s, int i);
double prx_sweep_d1(const prx_sweep* s, int i);
double prx_sweep_d2(const prx_sweep* s, int i);
double prx_sweep_dinf(const prx_sweep* s, int i);
prx_status prx_sweep_csv(const prx_sweep* s, char** out_text);

prx_status prx_max_pair(const prx_digraph* g, const double* grid, int grid_len,
                        int refine_rounds, double* alpha1, double* alpha2, double* d2);

prx_status prx_limit_run(const int* k_values, int count, int m, prx_limit** out);
void prx_limit_free(prx_limit* t);
int prx_limit_size(const prx_limit* t);
int prx_limit_k(const prx_limit* t, int row);
double prx_limit_pi_a(const prx_limit* t, int row);
double prx_limit_pi_c(const prx_limit* t, int row);
double prx_limit_norm_sq(const prx_limit* t, int row);
double prx_limit_d1(const prx_limit* t, int row);
double prx_limit_d2(const prx_limit* t, int row);
double prx_limit_dinf(const prx_limit* t, int row);
prx_status prx_limit_csv(const prx_limit* t, char** out_text);

/* Exhaustive scan of all adjacency matrices on n vertices; n <= 4 unless
 * allow_large, n = 5 at most. */
prx_status prx_search_run(int n, const double* grid, int grid_len, int top, int allow_large,
                          prx_search** out);
void prx_search_free(prx_search* s);
int prx_search_size(const prx_search* s);
int prx_search_order(const prx_search* s);
unsigned long long prx_search_mask(const prx_search* s, int i);
double prx_search_alpha1(const prx_search* s, int i);
double prx_search_alpha2(const prx_search* s, int i);
double prx_search_d2(const prx_search* s, int i);
prx_status prx_search_csv(const prx_search* s, char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PRX_H */
