#ifndef BOOLNET_GRAPH_HPP
#define BOOLNET_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace boolnet {

/// Directed graph on vertices 1..n, loops allowed, at most one arc per pair.
class InteractionGraph {
public:
  explicit InteractionGraph(int n);

  /// Loopless complete digraph: arcs both ways between every distinct pair.
  static InteractionGraph complete(int n);
  /// Arcs both ways between a left part of size a and a right part of size b;
  /// left vertices are 1..a, right vertices a+1..a+b.
  static InteractionGraph complete_bipartite(int a, int b);
  /// Arcs i -> i+1 and n -> 1.
  static InteractionGraph cycle(int n);

  int size() const { return n_; }
  void add_arc(int from, int to);
  bool has_arc(int from, int to) const;
  /// All arcs sorted by (from, to).
  std::vector<std::pair<int, int>> arcs() const;
  int in_degree(int v) const;  ///< loops count
  int out_degree(int v) const;
  uint64_t out_mask(int v) const; ///< bit w-1 set iff arc v -> w

  friend bool operator==(const InteractionGraph& a, const InteractionGraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

private:
  int n_;
  std::vector<uint64_t> out_;
};

struct FeedbackResult {
  int tau = 0;              ///< minimum feedback vertex set size
  std::vector<int> witness; ///< one minimum set, lexicographically smallest
};

/// Exact minimum feedback vertex set by branch and bound; vertices carrying
/// loops are forced into the set first. Requires size <= 20.
FeedbackResult feedback_number(const InteractionGraph& g);

/// True when deleting the listed vertices leaves an acyclic digraph.
bool is_acyclic_without(const InteractionGraph& g, const std::vector<int>& removed);

struct GraphMetrics {
  int min_indegree = 0;
  bool has_loops = false;
  bool strongly_connected = false;
};

GraphMetrics graph_metrics(const InteractionGraph& g);

} // namespace boolnet

#endif
