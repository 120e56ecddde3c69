#include "boolnet/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "boolnet/config.hpp"
#include "boolnet/errors.hpp"
#include "boolnet/table_ops.hpp"

namespace boolnet {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw verify_error(what);
}

bool is_full_cube(const VectorSet& a) {
  return a.width() > 0 && a.size() == (size_t{1} << a.width());
}

// Strength of a concatenation product from the factor strengths alone:
// the largest k such that every factor covers min(k, width) of its columns.
// Empty factors make the product empty.
int expected_product_strength(const std::vector<std::pair<int, int>>& factors,
                              int total_width) {
  for (const auto& [s, n] : factors)
    if (s < 0) return -1;
  int k = 0;
  while (k < total_width) {
    bool ok = true;
    for (const auto& [s, n] : factors)
      if (s < std::min(k + 1, n)) { ok = false; break; }
    if (!ok) break;
    ++k;
  }
  return k;
}

// Identity embedding of every node into a wider state space.
std::vector<BooleanFunction> widen_nodes(const BooleanNetwork& f, int new_arity,
                                         int offset) {
  std::vector<int> map(f.size());
  std::iota(map.begin(), map.end(), offset + 1);
  std::vector<BooleanFunction> out;
  out.reserve(f.size());
  for (const auto& node : f.nodes()) out.push_back(node.remap(new_arity, map));
  return out;
}

// Membership indicator of a vector set, as a function of `arity` variables
// of which only the low rows.width() are read.
BooleanFunction indicator(const VectorSet& rows, int arity, int offset) {
  const int w = rows.width();
  std::vector<uint64_t> words(word_count(w), 0);
  for (uint32_t r : rows.rows()) words[r >> 6] |= uint64_t{1} << (r & 63);
  std::vector<int> map(w);
  std::iota(map.begin(), map.end(), offset + 1);
  return BooleanFunction::from_words(w, std::move(words)).remap(arity, map);
}

} // namespace

bool has_source_vertex(const InteractionGraph& g) {
  for (int v = 1; v <= g.size(); ++v)
    if (g.in_degree(v) == 0) return true;
  return false;
}

BooleanNetwork linear_network(const InteractionGraph& g, bool verify) {
  const int n = g.size();
  std::vector<BooleanFunction> fns;
  fns.reserve(n);
  for (int j = 1; j <= n; ++j) {
    std::vector<int> ins;
    for (int i = 1; i <= n; ++i)
      if (g.has_arc(i, j)) ins.push_back(i);
    fns.push_back(BooleanFunction::linear(n, std::move(ins)));
  }
  BooleanNetwork net(std::move(fns));
  if (verify)
    require(interaction_graph(net) == g, "linear network: interaction graph mismatch");
  return net;
}

VectorSet bounded_weight_parity_set(int n, int max_weight, int parity) {
  std::vector<uint32_t> rows;
  const uint32_t states = uint32_t{1} << n;
  for (uint32_t x = 0; x < states; ++x) {
    const int w = std::popcount(x);
    if (w <= max_weight && w % 2 == parity) rows.push_back(x);
  }
  return VectorSet(n, std::move(rows));
}

BooleanNetwork sk_network(int n, int k, bool verify) {
  if (k < 1 || k > n - 2)
    throw parameter_error("sk_network needs 1 <= k <= n-2");
  // Node i looks at the weight of the state with its own coordinate blanked:
  // at most k and odd for even k, at most k and even for odd k.
  const int want_parity = (k % 2 == 0) ? 1 : 0;
  std::vector<BooleanFunction> fns;
  fns.reserve(n);
  const uint64_t states = uint64_t{1} << n;
  for (int i = 1; i <= n; ++i) {
    const uint32_t blank = ~(uint32_t{1} << (i - 1));
    std::vector<uint64_t> words(word_count(n), 0);
    for (uint64_t x = 0; x < states; ++x) {
      const int w = std::popcount(uint32_t(x) & blank);
      if (w <= k && w % 2 == want_parity) words[x >> 6] |= uint64_t{1} << (x & 63);
    }
    fns.push_back(BooleanFunction::from_words(n, std::move(words)));
  }
  BooleanNetwork net(std::move(fns));
  if (verify) {
    require(fixed_points(net) == bounded_weight_parity_set(n, k + 1, k % 2),
            "sk_network: fixed points differ from the weight/parity set");
    require(independence_number(net) == k, "sk_network: independence number is not k");
    require(interaction_graph(net) == InteractionGraph::complete(n),
            "sk_network: graph is not the loopless complete one");
  }
  return net;
}

GraphNetwork clique_gluing(int r, int s, bool verify) {
  if (r < 2 || s < 2)
    throw parameter_error("clique_gluing needs r, s >= 2");
  const int n = r + s;
  InteractionGraph g(n);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i != j) g.add_arc(i, j);
  for (int i = r + 1; i <= n; ++i)
    for (int j = r + 1; j <= n; ++j)
      if (i != j) g.add_arc(i, j);
  for (int j = r + 1; j <= n; ++j) g.add_arc(1, j); // bridge from the first clique
  BooleanNetwork net = linear_network(g, verify);
  if (verify) {
    const VectorSet fp = fixed_points(net);
    require(fp.size() == (size_t{1} << (r + s - 2)),
            "clique_gluing: expected 2^(r+s-2) fixed points");
    require(strength(fp) == std::min(r, s) - 1,
            "clique_gluing: independence number is not min(r,s)-1");
  }
  return GraphNetwork{std::move(g), std::move(net)};
}

GraphNetwork windmill(int m, int k, bool verify) {
  if (m < 2)
    throw parameter_error("windmill needs m >= 2");
  if (k < 1 || k % 2 == 0)
    throw parameter_error("windmill needs odd k >= 1");
  const int n = (m - 1) * k + 1;
  InteractionGraph g(n);
  for (int l = 1; l <= k; ++l) {
    std::vector<int> clique{1};
    const int base = 2 + (l - 1) * (m - 1);
    for (int v = base; v <= 1 + l * (m - 1); ++v) clique.push_back(v);
    for (int a : clique)
      for (int b : clique)
        if (a != b) g.add_arc(a, b);
  }
  BooleanNetwork net = linear_network(g, verify);
  if (verify) {
    const VectorSet fp = fixed_points(net);
    require(fp.size() == (size_t{1} << ((m - 2) * k + 1)),
            "windmill: expected 2^((m-2)k+1) fixed points");
    require(strength(fp) == m - 1, "windmill: independence number is not m-1");
    require(graph_metrics(g).strongly_connected, "windmill: graph not strongly connected");
  }
  return GraphNetwork{std::move(g), std::move(net)};
}

BooleanNetwork add_loop(const BooleanNetwork& f, bool verify) {
  const int n = f.size();
  std::vector<BooleanFunction> fns = widen_nodes(f, n + 1, 0);
  fns.push_back(BooleanFunction::var(n + 1, n + 1));
  BooleanNetwork out(std::move(fns));
  if (verify) {
    const VectorSet before = fixed_points(f);
    const VectorSet after = fixed_points(out);
    require(after.size() == 2 * before.size(), "add_loop: fixed points did not double");
    const int expected = expected_product_strength(
        {{strength(before), n}, {1, 1}}, n + 1);
    require(strength(after) == expected, "add_loop: strength changed unexpectedly");
  }
  return out;
}

BooleanNetwork clique_plus_loops(int n, int k, bool verify) {
  if (k < 1 || k + 1 > n)
    throw parameter_error("clique_plus_loops needs 1 <= k <= n-1");
  InteractionGraph g(n);
  for (int i = 1; i <= k + 1; ++i)
    for (int j = 1; j <= k + 1; ++j)
      if (i != j) g.add_arc(i, j);
  for (int v = k + 2; v <= n; ++v) g.add_arc(v, v);
  BooleanNetwork net = linear_network(g, verify);
  if (verify) {
    const VectorSet fp = fixed_points(net);
    require(fp.size() == (size_t{1} << (n - 1)),
            "clique_plus_loops: expected 2^(n-1) fixed points");
    require(strength(fp) == k, "clique_plus_loops: independence number is not k");
  }
  return net;
}

BooleanNetwork extend_with_pivot(const BooleanNetwork& f, const BooleanNetwork& f_tilde,
                                 bool loopless, bool verify) {
  if (f.size() != f_tilde.size())
    throw parameter_error("extend_with_pivot needs networks of equal size");
  const int n = f.size() + 1;
  const BooleanFunction pivot = BooleanFunction::var(n, n);
  std::vector<BooleanFunction> high = widen_nodes(f, n, 0);
  std::vector<BooleanFunction> low = widen_nodes(f_tilde, n, 0);
  std::vector<BooleanFunction> fns;
  fns.reserve(n);
  for (int i = 0; i < n - 1; ++i) {
    std::vector<uint64_t> words(word_count(n));
    for (size_t w = 0; w < words.size(); ++w)
      words[w] = (pivot.words()[w] & high[i].words()[w]) |
                 (~pivot.words()[w] & low[i].words()[w]);
    trim_words(n, words);
    fns.push_back(BooleanFunction::from_words(n, std::move(words)));
  }

  const VectorSet fp_f = fixed_points(f);
  const VectorSet fp_ft = fixed_points(f_tilde);
  if (loopless) {
    for (uint32_t r : fp_f.rows())
      if (fp_ft.contains(r))
        throw parameter_error("loopless extension needs disjoint fixed point sets");
    fns.push_back(indicator(fp_f, n, 0));
  } else {
    fns.push_back(pivot);
  }
  BooleanNetwork out(std::move(fns));

  if (verify) {
    std::vector<uint32_t> expect = fp_ft.rows();
    for (uint32_t r : fp_f.rows()) expect.push_back(r | (uint32_t{1} << (n - 1)));
    require(fixed_points(out) == VectorSet(n, std::move(expect)),
            "extend_with_pivot: fixed points are not FP(f_tilde)x0 + FP(f)x1");
    const int sf = strength(fp_f);
    const int sft = strength(fp_ft);
    if (sf >= 0 && sft == sf + 1)
      require(strength(fixed_points(out)) == sft,
              "extend_with_pivot: expected independence to step up");
  }
  return out;
}

BooleanNetwork disjoint_product(const std::vector<BooleanNetwork>& parts, bool verify) {
  if (parts.empty())
    throw parameter_error("disjoint_product needs at least one network");
  if (parts.size() == 1) return parts.front();
  int total = 0;
  for (const auto& p : parts) total += p.size();
  if (total > arity_cap())
    throw limit_error("combined size exceeds the arity cap");

  std::vector<BooleanFunction> fns;
  fns.reserve(total);
  int offset = 0;
  for (const auto& p : parts) {
    auto lifted = widen_nodes(p, total, offset);
    std::move(lifted.begin(), lifted.end(), std::back_inserter(fns));
    offset += p.size();
  }
  BooleanNetwork out(std::move(fns));

  if (verify) {
    VectorSet expect = fixed_points(parts[0]);
    std::vector<std::pair<int, int>> factors{{strength(expect), parts[0].size()}};
    for (size_t l = 1; l < parts.size(); ++l) {
      const VectorSet fp = fixed_points(parts[l]);
      factors.emplace_back(strength(fp), parts[l].size());
      expect = product(expect, fp);
    }
    require(fixed_points(out) == expect, "disjoint_product: fixed points mismatch");
    require(strength(fixed_points(out)) == expected_product_strength(factors, total),
            "disjoint_product: strength law violated");
  }
  return out;
}

BooleanNetwork strong_union(const std::vector<BooleanNetwork>& parts, bool verify) {
  if (parts.empty())
    throw parameter_error("strong_union needs at least one network");
  if (parts.size() == 1) return parts.front();
  int total = 0;
  for (const auto& p : parts) total += p.size();
  if (total > arity_cap())
    throw limit_error("combined size exceeds the arity cap");

  std::vector<VectorSet> fps;
  std::vector<int> offsets;
  int offset = 0;
  for (const auto& p : parts) {
    fps.push_back(fixed_points(p));
    if (fps.back().empty())
      throw parameter_error("strong_union needs nonempty fixed point sets");
    offsets.push_back(offset);
    offset += p.size();
  }

  // Gate functions: the indicator of each block's fixed point set, widened
  // onto the union variables.
  std::vector<BooleanFunction> gates;
  for (size_t l = 0; l < parts.size(); ++l)
    gates.push_back(indicator(fps[l], total, offsets[l]));

  // Gate failure must steer a block toward one of its own fixed points, not
  // toward the all-zero state: otherwise all-zeros becomes a stray fixed
  // point whenever no block fixes the origin. Non-constant nodes fall back
  // to their anchor bit (a plain conjunction with the gate when the anchor
  // is the origin); a constant node already equals its anchor bit, so it
  // negates itself instead, which keeps its cross-block arcs alive and
  // still leaves the failed regime without fixed points.
  auto steer = [&](BooleanFunction base, const BooleanFunction& gate, bool anchor_bit,
                   int self_var) {
    std::vector<uint64_t> words = base.words();
    const auto& gw = gate.words();
    if (base.is_constant()) {
      const auto sw = BooleanFunction::var(total, self_var).words();
      for (size_t w = 0; w < words.size(); ++w)
        words[w] = (anchor_bit ? gw[w] : 0) | (~gw[w] & ~sw[w]);
    } else {
      for (size_t w = 0; w < words.size(); ++w) {
        words[w] &= gw[w];
        if (anchor_bit) words[w] |= ~gw[w];
      }
    }
    trim_words(total, words);
    return BooleanFunction::from_words(total, std::move(words));
  };

  // The first block answers to the conjunction of all other gates.
  std::vector<uint64_t> cw(gates[1].words());
  for (size_t o = 2; o < parts.size(); ++o)
    for (size_t w = 0; w < cw.size(); ++w) cw[w] &= gates[o].words()[w];
  const BooleanFunction combined = BooleanFunction::from_words(total, std::move(cw));

  std::vector<BooleanFunction> fns;
  fns.reserve(total);
  for (size_t l = 0; l < parts.size(); ++l) {
    auto lifted = widen_nodes(parts[l], total, offsets[l]);
    const BooleanFunction& gate = l == 0 ? combined : gates[0];
    const uint32_t anchor = fps[l].rows().front();
    for (size_t j = 0; j < lifted.size(); ++j)
      fns.push_back(steer(std::move(lifted[j]), gate, (anchor >> j) & 1,
                          offsets[l] + static_cast<int>(j) + 1));
  }
  BooleanNetwork out(std::move(fns));

  if (verify) {
    VectorSet expect = fps[0];
    std::vector<std::pair<int, int>> factors{{strength(fps[0]), parts[0].size()}};
    for (size_t l = 1; l < parts.size(); ++l) {
      factors.emplace_back(strength(fps[l]), parts[l].size());
      expect = product(expect, fps[l]);
    }
    require(fixed_points(out) == expect, "strong_union: fixed points mismatch");
    require(strength(fixed_points(out)) == expected_product_strength(factors, total),
            "strong_union: strength law violated");
    // The indicator of a full-cube fixed point set is constant and carries
    // no arcs, so such blocks void the connectivity claim.
    bool all_strong = true;
    for (const auto& p : parts)
      if (!graph_metrics(interaction_graph(p)).strongly_connected) all_strong = false;
    for (const auto& s : fps)
      if (s.size() == (size_t{1} << s.width())) all_strong = false;
    if (all_strong)
      require(graph_metrics(interaction_graph(out)).strongly_connected,
              "strong_union: union is not strongly connected");
  }
  return out;
}

BooleanNetwork steiner_monotone(const SteinerSystem& s, bool verify) {
  const int n = s.points();
  const int t = s.strength_t();
  if (s.block_size() != t + 1)
    throw parameter_error("steiner_monotone needs block size t+1");
  if (t < 2 || 2 * t >= n)
    throw parameter_error("steiner_monotone needs 2 <= t < n/2");

  std::vector<BooleanFunction> fns;
  fns.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<int>> clauses;
    for (uint32_t b : s.blocks()) {
      if (!(b >> (i - 1) & 1)) continue;
      std::vector<int> clause;
      for (int p = 1; p <= n; ++p)
        if (p != i && (b >> (p - 1) & 1)) clause.push_back(p);
      clauses.push_back(std::move(clause));
    }
    fns.push_back(BooleanFunction::dnf(n, std::move(clauses)));
  }
  BooleanNetwork net(std::move(fns));

  if (verify) {
    require(verify_steiner(s).ok, "steiner_monotone: not a valid Steiner system");
    for (int i = 1; i <= n; ++i) {
      require(is_monotone(net.node(i)), "steiner_monotone: node not monotone");
      require(ic_index(net.node(i)) == t, "steiner_monotone: node ic_index is not t");
    }
    require(interaction_graph(net) == InteractionGraph::complete(n),
            "steiner_monotone: graph is not the loopless complete one");
    const VectorSet fp = fixed_points(net);
    require(fp.contains(0) && fp.contains((uint32_t{1} << n) - 1),
            "steiner_monotone: constant vectors are not fixed");
    for (uint32_t b : s.blocks())
      require(fp.contains(b), "steiner_monotone: a block is not fixed");
    require(strength(fp) == t, "steiner_monotone: independence number is not t");
  }
  return net;
}

} // namespace boolnet
