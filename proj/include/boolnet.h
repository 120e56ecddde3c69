/* C interface to the boolnet library.
 *
 * All objects live behind opaque handles and are created and destroyed by
 * the library. Functions that can fail return a bn_status; on failure the
 * out parameters are left untouched and bn_last_error() describes what went
 * wrong for the calling thread. Strings returned through char** are heap
 * allocated and must be released with bn_string_free().
 *
 * Variables, vertices and nodes are 1-indexed throughout. A state of an
 * n-variable network is an unsigned integer whose bit i-1 is the value of
 * variable i.
 */
#ifndef BOOLNET_H
#define BOOLNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bn_status {
  BN_OK = 0,
  BN_E_PARAM = 1,    /* invalid argument or handle */
  BN_E_LIMIT = 2,    /* arity cap or a hard size limit exceeded */
  BN_E_PARSE = 3,    /* malformed input text or unreadable file */
  BN_E_VERIFY = 4,   /* a requested self check failed */
  BN_E_NOMEM = 5,
  BN_E_INTERNAL = 6
} bn_status;

typedef struct bn_network bn_network; /* Boolean network */
typedef struct bn_graph bn_graph;     /* digraph on 1..n, loops allowed */
typedef struct bn_rows bn_rows;       /* set of binary vectors of one width */
typedef struct bn_design bn_design;   /* Steiner system */

/* Message for the last failure on this thread; valid until the next failing
 * call on the same thread. Never NULL. */
const char* bn_last_error(void);

/* Frees a string returned through a char** parameter. NULL is ignored. */
void bn_string_free(char* s);

/* The arity cap bounds the number of variables accepted by constructors and
 * parsers. Default 26; raising it past 28 is refused. */
int bn_arity_cap(void);
bn_status bn_set_arity_cap(int cap);

/* ---- networks ---------------------------------------------------------- */

bn_status bn_network_from_json(const char* text, bn_network** out);
bn_status bn_network_to_json(const bn_network* f, char** out);
bn_status bn_network_identity(int n, bn_network** out);
void bn_network_free(bn_network* f);

/* Number of nodes, or 0 for NULL. */
int bn_network_size(const bn_network* f);

/* Synchronous update of one state. */
bn_status bn_network_step(const bn_network* f, uint64_t state, uint64_t* out);

bn_status bn_network_fixed_points(const bn_network* f, bn_rows** out);

/* Largest k such that the fixed points form a covering array of strength k,
 * at least 0. */
bn_status bn_network_independence(const bn_network* f, int* out);

bn_status bn_network_graph(const bn_network* f, bn_graph** out);

/* Smallest number of inputs that can force node i, and the node's shape. */
bn_status bn_network_node_ic(const bn_network* f, int node, int* ic);
bn_status bn_network_node_flags(const bn_network* f, int node, int* monotone,
                                int* unate);

/* Checks |fixed points| <= 2^tau over the network's own graph. */
bn_status bn_network_feedback_bound(const bn_network* f, uint64_t* fp_count,
                                    int* tau, int* holds);

/* ---- graphs ------------------------------------------------------------ */

bn_status bn_graph_new(int n, bn_graph** out);
bn_status bn_graph_complete(int n, bn_graph** out);          /* loopless K_n */
bn_status bn_graph_complete_bipartite(int a, int b, bn_graph** out);
bn_status bn_graph_cycle(int n, bn_graph** out);
bn_status bn_graph_from_dot(const char* text, bn_graph** out);
bn_status bn_graph_to_dot(const bn_graph* g, char** out);
void bn_graph_free(bn_graph* g);

int bn_graph_size(const bn_graph* g);
bn_status bn_graph_add_arc(bn_graph* g, int from, int to);
int bn_graph_has_arc(const bn_graph* g, int from, int to);

bn_status bn_graph_metrics(const bn_graph* g, int* min_indegree,
                           int* has_loops, int* strongly_connected);

/* Exact minimum feedback vertex set. The witness is written to the first
 * witness_cap slots of witness (pass NULL and 0 to skip it); *witness_len
 * receives the full length. Graphs over 20 vertices are refused. */
bn_status bn_graph_feedback(const bn_graph* g, int* tau, int32_t* witness,
                            size_t witness_cap, size_t* witness_len);

/* Necessary conditions for a network on g to reach independence number k.
 * *rejected is 1 when some condition fails, else 0 for an inconclusive
 * screen. reasons (optional) receives one line per finding. */
bn_status bn_graph_admissible(const bn_graph* g, int k, int* rejected,
                              int* tau, int* min_indegree, int64_t* can_lo,
                              char** reasons);

/* ---- vector sets ------------------------------------------------------- */

bn_status bn_rows_from_text(const char* text, bn_rows** out);
bn_status bn_rows_to_text(const bn_rows* a, char** out);
void bn_rows_free(bn_rows* a);

size_t bn_rows_size(const bn_rows* a);
int bn_rows_width(const bn_rows* a);
bn_status bn_rows_get(const bn_rows* a, size_t index, uint32_t* out);

/* Largest k such that every k columns exhibit all 2^k patterns; -1 for the
 * empty set. */
bn_status bn_rows_strength(const bn_rows* a, int* out);

/* Searches for a column set of size k missing one of its 2^k patterns.
 * *found is set to 1 or 0; when found, the k column indices go to indices
 * (indices_cap slots available) and the missing pattern to *pattern, its
 * bit k-1-l holding the value for indices[l]. */
bn_status bn_rows_find_uncovered(const bn_rows* a, int k, int* found,
                                 int32_t* indices, size_t indices_cap,
                                 uint32_t* pattern);

/* ---- covering array numbers ------------------------------------------- */

/* Known bounds on CAN(n;k), the least rows of a strength-k array with n
 * columns. *known is 0 when the internal table has nothing for (n, k). */
bn_status bn_can_lookup(int n, int k, int* known, int64_t* lo, int64_t* hi);

/* Exhaustive minimum search, n <= 5 and k <= 3. *found is 0 when even
 * max_rows rows are not enough. */
bn_status bn_can_search(int n, int k, int64_t max_rows, int* found,
                        int* value);

/* ---- Steiner systems --------------------------------------------------- */

bn_status bn_design_fano(bn_design** out);
bn_status bn_design_sqs8(bn_design** out);
bn_status bn_design_sts(int n, bn_design** out);
bn_status bn_design_from_text(const char* text, bn_design** out);
bn_status bn_design_to_text(const bn_design* s, char** out);
void bn_design_free(bn_design* s);

int bn_design_points(const bn_design* s);
int bn_design_block_size(const bn_design* s);
int bn_design_strength_t(const bn_design* s);
size_t bn_design_block_count(const bn_design* s);

/* Checks block weights and exact coverage of every t-subset. *ok is 1 or 0;
 * on failure, detail (optional) describes the first violation. */
bn_status bn_design_verify(const bn_design* s, int* ok, char** detail);

/* Checks that the block rows of a (n,t+1,t) system with 2t < n have strength
 * exactly t. *applicable is 0 when the hypotheses fail, with the reason in
 * detail (optional). */
bn_status bn_design_ca_check(const bn_design* s, int* applicable, int* ok,
                             int* strength, int* expected, char** detail);

/* ---- constructions ------------------------------------------------------ */
/* With verify nonzero, each builder recomputes its advertised postconditions
 * and fails with BN_E_VERIFY on a mismatch. */

/* XOR of the in-neighbours at every vertex. */
bn_status bn_construct_linear(const bn_graph* g, int verify, bn_network** out);

/* Network on loopless K_n with independence number k, 1 <= k <= n-2. */
bn_status bn_construct_sk(int n, int k, int verify, bn_network** out);

/* Cliques K_r and K_s bridged through vertex 1; independence min(r,s)-1. */
bn_status bn_construct_clique_gluing(int r, int s, int verify,
                                     bn_network** out);

/* k copies of K_m sharing vertex 1, k odd; independence m-1. */
bn_status bn_construct_windmill(int m, int k, int verify, bn_network** out);

/* K_{k+1} plus identity loops up to n; independence k, 2^(n-1) fixed
 * points. */
bn_status bn_construct_clique_plus_loops(int n, int k, int verify,
                                         bn_network** out);

/* Fresh looped variable n+1; fixed points double. */
bn_status bn_construct_add_loop(const bn_network* f, int verify,
                                bn_network** out);

/* Multiplexer on a fresh variable: f when it is 1, f_tilde when 0. With
 * loopless nonzero the new node becomes the fixed-point indicator of f,
 * which requires disjoint fixed point sets. */
bn_status bn_construct_pivot_extend(const bn_network* f,
                                    const bn_network* f_tilde, int loopless,
                                    int verify, bn_network** out);

/* Disjoint union of count >= 1 networks; fixed points multiply. */
bn_status bn_construct_product(const bn_network* const* parts, size_t count,
                               int verify, bn_network** out);

/* Disjoint union gated to preserve strong connectivity. Every part needs a
 * nonempty fixed point set. */
bn_status bn_construct_strong_union(const bn_network* const* parts,
                                    size_t count, int verify,
                                    bn_network** out);

/* Monotone network of a (n,t+1,t) design with 2 <= t < n/2; independence t,
 * one DNF clause per block at every member node. */
bn_status bn_construct_steiner_monotone(const bn_design* s, int verify,
                                        bn_network** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif
