#ifndef BOOLNET_CONSTRUCTIONS_HPP
#define BOOLNET_CONSTRUCTIONS_HPP

#include <vector>

#include "boolnet/bool_net.hpp"
#include "boolnet/cover.hpp"
#include "boolnet/graph.hpp"
#include "boolnet/steiner.hpp"

namespace boolnet {

// Builders for networks with known independence numbers. Every builder
// accepts a verify flag; when set, the advertised postconditions (fixed point
// sets or counts, independence numbers, graph shape) are recomputed from
// scratch and a verify_error is thrown on any mismatch. Verification costs a
// full state sweep plus a strength computation, so it is off by default here
// and switched on by the command line tool.

struct GraphNetwork {
  InteractionGraph graph;
  BooleanNetwork network;
};

/// f_j = XOR of the in-neighbours of j. Vertices of in-degree 0 become
/// constant 0; they are legal but usually unintended, see has_source_vertex.
BooleanNetwork linear_network(const InteractionGraph& g, bool verify = false);

/// True when some vertex of g has no incoming arc.
bool has_source_vertex(const InteractionGraph& g);

/// Network on the loopless complete graph, 1 <= k <= n-2, whose fixed points
/// are exactly the vectors of weight <= k+1 with even weight (k even) or odd
/// weight (k odd). Nodes carry plain truth tables; independence number k.
BooleanNetwork sk_network(int n, int k, bool verify = false);

/// Vectors of width n, weight <= max_weight, weight = parity (mod 2).
/// These are the fixed point sets of sk_network (max_weight k+1).
VectorSet bounded_weight_parity_set(int n, int max_weight, int parity);

/// Two loopless cliques K_r (vertices 1..r) and K_s (vertices r+1..r+s)
/// joined by arcs from vertex 1 to every K_s vertex, with XOR dynamics.
/// 2^(r+s-2) fixed points, independence number min(r,s) - 1. r, s >= 2.
GraphNetwork clique_gluing(int r, int s, bool verify = false);

/// k loopless copies of K_m sharing the central vertex 1, clique l holding
/// vertices 2+(l-1)(m-1) .. 1+l(m-1), with XOR dynamics. Requires m >= 2 and
/// odd k >= 1. 2^((m-2)k+1) fixed points, independence number m-1, strongly
/// connected graph.
GraphNetwork windmill(int m, int k, bool verify = false);

/// Adds variable n+1 with f_{n+1} = x_{n+1} and leaves old nodes untouched.
/// Fixed points double; independence number is preserved unless the fixed
/// point set was the whole cube, in which case it grows from n to n+1.
BooleanNetwork add_loop(const BooleanNetwork& f, bool verify = false);

/// Loopless complete graph on vertices 1..k+1 with XOR dynamics, plus
/// identity loops on vertices k+2..n. Requires 1 <= k <= n-1. 2^(n-1) fixed
/// points, independence number k.
BooleanNetwork clique_plus_loops(int n, int k, bool verify = false);

/// Multiplexer extension on a fresh variable n: g_i = f_i when x_n = 1 and
/// f_tilde_i when x_n = 0. The new node is x_n itself, or with loopless set
/// the indicator of fixed_points(f), which requires the two fixed point sets
/// to be disjoint. Fixed points are FP(f_tilde) x {0} union FP(f) x {1}; when
/// i(f) = k-1 exactly and i(f_tilde) >= k the result has independence k.
BooleanNetwork extend_with_pivot(const BooleanNetwork& f,
                                 const BooleanNetwork& f_tilde,
                                 bool loopless = false, bool verify = false);

/// Disjoint union: variables are concatenated and every node keeps reading
/// only its own block. Fixed points multiply, independence is the minimum
/// over the blocks.
BooleanNetwork disjoint_product(const std::vector<BooleanNetwork>& parts,
                                bool verify = false);

/// Like disjoint_product but gated so the union becomes strongly connected
/// when every part is: the first block watches the fixed-point indicators of
/// all other blocks, every other block watches the first block's indicator.
/// While the watched indicator holds, a node follows its own function;
/// otherwise it is steered onto one of its block's own fixed points. Every
/// part needs a nonempty fixed point set, and the result satisfies
/// FP = FP_1 x ... x FP_L exactly.
BooleanNetwork strong_union(const std::vector<BooleanNetwork>& parts,
                            bool verify = false);

/// Monotone network from a (n,t+1,t) system with 2 <= t < n/2: node i is the
/// OR over blocks containing i of the AND of the other block members, one DNF
/// clause per block in stored block order. Loopless complete graph,
/// independence number t, every node monotone with ic_index t, and the
/// blocks plus the all-zero and all-one vectors are fixed.
BooleanNetwork steiner_monotone(const SteinerSystem& s, bool verify = false);

} // namespace boolnet

#endif
