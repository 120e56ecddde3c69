#ifndef BOOLNET_BOOL_NET_HPP
#define BOOLNET_BOOL_NET_HPP

#include <cstdint>
#include <vector>

#include "boolnet/bool_fn.hpp"
#include "boolnet/graph.hpp"

namespace boolnet {

class VectorSet;

/// A synchronous Boolean network: n local functions, each of arity n.
/// Component i of the next state is node(i) evaluated at the current state.
class BooleanNetwork {
public:
  explicit BooleanNetwork(std::vector<BooleanFunction> nodes);
  static BooleanNetwork identity(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  const BooleanFunction& node(int i) const; ///< 1-indexed
  const std::vector<BooleanFunction>& nodes() const { return nodes_; }

  uint64_t step(uint64_t state) const;

private:
  std::vector<BooleanFunction> nodes_;
};

/// All states with step(x) = x, ascending. The sweep works a word at a time:
/// each node's truth table is compared against the periodic pattern of its own
/// state bit, so 64 states are settled per node per word operation.
VectorSet fixed_points(const BooleanNetwork& f);

/// Arc (i, j) present iff node j depends on variable i. Loops allowed.
InteractionGraph interaction_graph(const BooleanNetwork& f);

struct FeedbackBoundReport {
  uint64_t fp_count = 0;
  int tau = 0;
  std::vector<int> witness;
  bool holds = false; ///< fp_count <= 2^tau
};

/// Evaluates the bound |fixed points| <= 2^tau(G(f)) on a concrete network.
FeedbackBoundReport check_feedback_bound(const BooleanNetwork& f);

} // namespace boolnet

#endif
