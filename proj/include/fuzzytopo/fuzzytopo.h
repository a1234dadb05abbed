/* fuzzytopo: fuzzy degree-based topological indices, extremal searches over
 * small supports, and claim checking, behind a plain C interface.
 *
 * All functions returning ft_status set a thread-local message retrievable
 * via ft_last_error() on failure. Strings returned through char** are
 * allocated by the library and must be released with ft_string_free().
 */
#ifndef FUZZYTOPO_H
#define FUZZYTOPO_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ft_graph ft_graph;

typedef enum ft_status {
  FT_OK = 0,
  FT_ERROR_INVALID_ARGUMENT = 1,
  FT_ERROR_PARSE = 2,
  FT_ERROR_IO = 3,
  FT_ERROR_INTERNAL = 4
} ft_status;

const char* ft_version(void);

/* Message describing the most recent failure on this thread. */
const char* ft_last_error(void);

void ft_string_free(char* s);

/* ---- graphs ---- */

/* New graph on n >= 0 isolated vertices, every vertex membership 1. */
ft_status ft_graph_new(int n, ft_graph** out);
ft_status ft_graph_clone(const ft_graph* g, ft_graph** out);
void ft_graph_free(ft_graph* g);

/* Stores the edge; range rules are reported by ft_graph_validate, not here.
 * Endpoint ids must be within [0, n). */
ft_status ft_graph_add_edge(ft_graph* g, int u, int v, double mu);
ft_status ft_graph_set_vertex_membership(ft_graph* g, int v, double nu);

int ft_graph_order(const ft_graph* g);
int ft_graph_edge_count(const ft_graph* g);

/* Edge at position `index` in canonical order (sorted pairs, u < v). */
ft_status ft_graph_edge(const ft_graph* g, int index, int* u, int* v,
                        double* mu);
ft_status ft_graph_vertex_membership(const ft_graph* g, int v, double* nu);

/* violation_count receives the number of broken invariants; when violations
 * is non-NULL it receives a newline-separated description (empty string when
 * the graph is valid). */
ft_status ft_graph_validate(const ft_graph* g, int* violation_count,
                            char** violations);

/* degrees must hold ft_graph_order(g) doubles. */
ft_status ft_graph_degrees(const ft_graph* g, double* degrees);

/* Derived profile: fuzzy size, extreme fuzzy degrees and the largest
 * endpoint-degree sum over edges. Any output pointer may be NULL. */
ft_status ft_graph_profile(const ft_graph* g, double* size, double* delta_min,
                           double* delta_max, double* edge_degree_max);

/* Multiplies every edge membership by t in (0,1]. */
ft_status ft_graph_scale(const ft_graph* g, double t, ft_graph** out);

/* Same support, all memberships set to 1. */
ft_status ft_graph_crisp_support(const ft_graph* g, ft_graph** out);

/* Deterministic random fuzzy graph (same seed, same graph). */
ft_status ft_graph_random(int n, double edge_probability,
                          unsigned long long seed, ft_graph** out);

/* Line-oriented text format:
 *   n <vertex-count>
 *   v <id> <nu>
 *   e <u> <v> <mu>
 * '#' comments. Strict; errors carry line numbers. */
ft_status ft_graph_parse(const char* text, ft_graph** out);
ft_status ft_graph_parse_file(const char* path, ft_graph** out);
ft_status ft_graph_format(const ft_graph* g, char** out);

/* ---- indices ---- */

typedef enum ft_index {
  FT_INDEX_SOMBOR = 0,
  FT_INDEX_SOMBOR_ALPHA = 1,
  FT_INDEX_ZAGREB_M1 = 2,
  FT_INDEX_ZAGREB_M2 = 3,
  FT_INDEX_RANDIC = 4,
  FT_INDEX_NIRMALA = 5
} ft_index;

/* alpha is only read for FT_INDEX_SOMBOR_ALPHA and must be >= 1. */
ft_status ft_index_value(const ft_graph* g, ft_index index, double alpha,
                         double* out);

/* Per-edge terms in canonical edge order (per-vertex for FT_INDEX_ZAGREB_M1).
 * `terms` must hold edge-count (resp. order) doubles; count receives the
 * number written. */
ft_status ft_index_terms(const ft_graph* g, ft_index index, double alpha,
                         double* terms, int* count);

/* Exact gradient of the Sombor index with respect to each edge membership;
 * gradient must hold edge-count doubles. */
ft_status ft_sombor_gradient(const ft_graph* g, double* gradient);

/* ---- families ---- */

typedef enum ft_family {
  FT_FAMILY_PATH = 0,
  FT_FAMILY_STAR = 1,
  FT_FAMILY_CYCLE = 2,
  FT_FAMILY_COMPLETE = 3
} ft_family;

/* Uniform scheme: every edge carries m_mu / edge-count. */
ft_status ft_family_build(ft_family family, int n, double m_mu,
                          ft_graph** out);

/* Custom scheme: `memberships` lists one value per edge in construction
 * order; the fuzzy size is their sum. */
ft_status ft_family_build_custom(ft_family family, int n,
                                 const double* memberships, int count,
                                 ft_graph** out);

/* Closed-form Sombor value of the uniform family. */
ft_status ft_family_closed_form(ft_family family, int n, double m_mu,
                                double* out);

/* Printed star bound for the general Sombor index (n >= 3, alpha >= 1). */
ft_status ft_star_alpha_bound(int n, double p, double alpha, double* out);

/* ---- support enumeration ---- */

/* Number of isomorphism classes: free trees (n <= 12), unicyclic graphs
 * (3 <= n <= 9), connected graphs (n <= 7). */
ft_status ft_count_trees(int n, int* out);
ft_status ft_count_unicyclic(int n, int* out);
ft_status ft_count_connected(int n, int* out);

/* ---- extremal search ---- */

typedef struct ft_optimizer_config {
  double epsilon_min;     /* lower bound keeping memberships positive */
  int grid_resolution;    /* grid points per free dimension, <=4-edge case */
  int gradient_steps;
  double step_size;       /* initial step, halved while backtracking */
  int restarts;
  double tolerance;       /* stop on objective change below this */
  unsigned long long seed;
} ft_optimizer_config;

void ft_optimizer_config_init(ft_optimizer_config* cfg);

/* graph_class: "tree" (n in [2,12]), "unicyclic" ([3,9]), "connected"
 * ([3,7]); direction: "min" or "max". csv receives one row per support,
 * report a human-readable ranking with optimizer certificates. Either output
 * pointer may be NULL. */
ft_status ft_search(const char* graph_class, int n, double m_mu,
                    ft_index index, double alpha, const char* direction,
                    const ft_optimizer_config* cfg, char** csv, char** report);

/* ---- claim checking ---- */

/* Newline-separated list of claim names understood by the functions below. */
const char* ft_claim_names(void);

/* Evaluates one claim on one instance; CSV rows, one per claim variant. */
ft_status ft_claim_check(const char* claim, const ft_graph* g, double alpha,
                         int read_m_as_edge_count, char** csv);

/* Random-instance verification over a deterministic stream. */
ft_status ft_claim_verify_random(const char* claim, int samples, int n_min,
                                 int n_max, unsigned long long seed,
                                 double alpha, int read_m_as_edge_count,
                                 char** csv, char** summary);

/* Extremal verification against the predicted extremal structure. */
ft_status ft_claim_verify_extremal(const char* claim, int n_min, int n_max,
                                   double m_mu, double alpha,
                                   const ft_optimizer_config* cfg, char** csv,
                                   char** summary);

/* Margin rows of the claim over a (family, n, m_mu) grid. */
ft_status ft_claim_margin_sweep(const char* claim, ft_family family,
                                const int* orders, int order_count,
                                const double* sizes, int size_count,
                                int read_m_as_edge_count, char** csv);

/* ---- reference tables ---- */

ft_status ft_table1_csv(char** out);
ft_status ft_table2_csv(char** out);
ft_status ft_figures_csv(char** out);

#ifdef __cplusplus
}
#endif

#endif /* FUZZYTOPO_H */
