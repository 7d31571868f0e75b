/* C interface to the graph-search-tree library.
 *
 * Vertices are 1-based dense ids. Orderings are arrays of n vertex ids.
 * Every function that can fail returns a gst_status; on failure
 * gst_last_error() describes the problem for the calling thread.
 */
#ifndef GST_C_API_H
#define GST_C_API_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gst_graph gst_graph;
typedef struct gst_tree gst_tree;

typedef enum gst_status {
    GST_OK = 0,
    GST_ERR_PARSE = 1,    /* malformed input text */
    GST_ERR_INVALID = 2,  /* contract violation (bad ids, wrong sizes, ...) */
    GST_ERR_NOMEM = 3
} gst_status;

typedef enum gst_outcome {
    GST_NO = 0,
    GST_YES = 1,
    GST_INCONCLUSIVE = 2
} gst_outcome;

/* message for the last failing call on this thread; never NULL */
const char* gst_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

/* text format: header "n m", then m lines "u v"; '#' starts a comment line;
 * the graph must be simple and connected */
gst_status gst_graph_parse(const char* text, gst_graph** out);
/* endpoints holds 2*m ints: u1 v1 u2 v2 ... */
gst_status gst_graph_from_edges(int n, const int* endpoints, int m, gst_graph** out);
void gst_graph_free(gst_graph* g);

int gst_graph_order(const gst_graph* g);
int gst_graph_size(const gst_graph* g);
int gst_graph_has_edge(const gst_graph* g, int u, int v);
/* canonical text form; free with gst_text_free */
gst_status gst_graph_format(const gst_graph* g, char** out_text);
void gst_text_free(char* text);

/* ---- spanning trees ---------------------------------------------------- */

/* text format: header "n", then n-1 lines "u v" */
gst_status gst_tree_parse(const char* text, const gst_graph* g, gst_tree** out);
gst_status gst_tree_from_edges(const gst_graph* g, const int* endpoints, int edge_count,
                               gst_tree** out);
void gst_tree_free(gst_tree* t);
int gst_tree_order(const gst_tree* t);
/* endpoints_out must hold 2*(n-1) ints */
gst_status gst_tree_edges(const gst_tree* t, int* endpoints_out);
gst_status gst_tree_format(const gst_tree* t, char** out_text);

/* ---- searches ----------------------------------------------------------- */

/* kind: "gen", "bfs", "dfs", "lbfs", "ldfs", "mcs" or "mns".
 * tie_break: "min", "max", or an explicit priority list "3,1,2,...".
 * order_out must hold n ints. */
gst_status gst_search_run(const gst_graph* g, const char* kind, int start, const char* tie_break,
                          int* order_out);
/* valid_out receives 1 or 0 */
gst_status gst_order_valid(const gst_graph* g, const char* kind, const int* order, int* valid_out);
/* side: 'f' (first-in) or 'l' (last-in) */
gst_status gst_search_tree(const gst_graph* g, const int* order, char side, gst_tree** out);

/* ---- recognition -------------------------------------------------------- */

typedef struct gst_recognition {
    gst_outcome outcome;
    int root;                /* 0 when there is no witness */
    long long roots_tried;
    long long nodes_expanded;
} gst_recognition;

/* budget <= 0 means unlimited; witness_out may be NULL or hold n ints */
gst_status gst_recognize(const gst_graph* g, const gst_tree* t, const char* kind, char side,
                         long long budget, gst_recognition* result, int* witness_out);
/* exhaustive reference recognizer; intended for small graphs */
gst_status gst_oracle_recognize(const gst_graph* g, const gst_tree* t, const char* kind, char side,
                                gst_recognition* result, int* witness_out);

/* ---- graph classes ------------------------------------------------------ */

/* cls: "split", "chordal" or "weakly-chordal"; verdict_out receives 1 or 0 */
gst_status gst_graph_in_class(const gst_graph* g, const char* cls, int* verdict_out);

/* ---- hardness-instance builders ----------------------------------------- */

/* target: "lbfs" or "mns"; dimacs_text is a DIMACS CNF 3-SAT instance.
 * The three outputs are the graph file, tree file and per-vertex role list
 * ("id role" lines); free each with gst_text_free. */
gst_status gst_reduction_build(const char* dimacs_text, const char* target, int strict,
                               char** graph_text, char** tree_text, char** roles_text);
/* sat_out receives 1 or 0 */
gst_status gst_cnf_satisfiable(const char* dimacs_text, int strict, int* sat_out);

#ifdef __cplusplus
}
#endif

#endif /* GST_C_API_H */
