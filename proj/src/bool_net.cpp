#include "boolnet/bool_net.hpp"

#include <bit>
#include <string>

#include "boolnet/cover.hpp"
#include "boolnet/errors.hpp"
#include "boolnet/table_ops.hpp"

namespace boolnet {

BooleanNetwork::BooleanNetwork(std::vector<BooleanFunction> nodes)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty())
    throw parameter_error("a network needs at least one node");
  const int n = static_cast<int>(nodes_.size());
  for (const auto& f : nodes_)
    if (f.arity() != n)
      throw parameter_error("every node must have arity " + std::to_string(n));
}

BooleanNetwork BooleanNetwork::identity(int n) {
  if (n < 1)
    throw parameter_error("a network needs at least one node");
  std::vector<BooleanFunction> fns;
  fns.reserve(n);
  for (int i = 1; i <= n; ++i) fns.push_back(BooleanFunction::var(n, i));
  return BooleanNetwork(std::move(fns));
}

const BooleanFunction& BooleanNetwork::node(int i) const {
  if (i < 1 || i > size())
    throw parameter_error("node index " + std::to_string(i) + " out of range");
  return nodes_[i - 1];
}

uint64_t BooleanNetwork::step(uint64_t state) const {
  uint64_t next = 0;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].eval(state)) next |= uint64_t{1} << i;
  return next;
}

VectorSet fixed_points(const BooleanNetwork& f) {
  const int n = f.size();
  const size_t words = word_count(n);
  std::vector<uint32_t> rows;
  for (size_t w = 0; w < words; ++w) {
    // acc keeps, per state in this word, whether all nodes agree with their
    // own state bit so far. Node p's state bit pattern inside a word is the
    // fixed projection for p < 6 and constant per word above that.
    uint64_t acc = table_mask(n);
    for (int p = 0; p < n && acc; ++p) {
      const uint64_t pat =
          p < 6 ? kProjection[p] : ((w >> (p - 6)) & 1 ? ~uint64_t{0} : 0);
      acc &= ~(f.nodes()[p].words()[w] ^ pat);
    }
    while (acc) {
      rows.push_back(static_cast<uint32_t>((w << 6) + std::countr_zero(acc)));
      acc &= acc - 1;
    }
  }
  return VectorSet(n, std::move(rows));
}

InteractionGraph interaction_graph(const BooleanNetwork& f) {
  const int n = f.size();
  InteractionGraph g(n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (f.node(j).depends_on(i)) g.add_arc(i, j);
  return g;
}

FeedbackBoundReport check_feedback_bound(const BooleanNetwork& f) {
  FeedbackBoundReport r;
  r.fp_count = fixed_points(f).size();
  FeedbackResult fb = feedback_number(interaction_graph(f));
  r.tau = fb.tau;
  r.witness = std::move(fb.witness);
  r.holds = r.fp_count <= (uint64_t{1} << r.tau);
  return r;
}

} // namespace boolnet
