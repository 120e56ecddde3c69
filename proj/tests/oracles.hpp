#ifndef BOOLNET_TESTS_ORACLES_HPP
#define BOOLNET_TESTS_ORACLES_HPP

// Reference implementations used to cross-check the library, written in the
// most direct way possible: per-state loops, tuple sets, full subset
// enumeration. Nothing here shares code with the fast paths under test.
// The random generators take an explicit engine so every test is seeded
// and reproducible.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "boolnet/bool_fn.hpp"
#include "boolnet/bool_net.hpp"
#include "boolnet/cover.hpp"
#include "boolnet/graph.hpp"

namespace oracle {

using boolnet::BooleanFunction;
using boolnet::BooleanNetwork;
using boolnet::InteractionGraph;
using boolnet::VectorSet;

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// ---- covering arrays ----------------------------------------------------

inline bool has_strength_naive(const std::vector<uint32_t>& rows, int n, int k) {
  if (k == 0) return !rows.empty();
  for (const auto& idx : subsets(n, k)) {
    std::set<std::vector<int>> seen;
    for (uint32_t row : rows) {
      std::vector<int> tuple;
      for (int v : idx) tuple.push_back(row >> (v - 1) & 1);
      seen.insert(tuple);
    }
    if (seen.size() != (size_t{1} << k)) return false;
  }
  return true;
}

inline int strength_naive(const std::vector<uint32_t>& rows, int n) {
  if (rows.empty()) return -1;
  int k = 0;
  while (k < n && has_strength_naive(rows, n, k + 1)) ++k;
  return k;
}

// ---- networks -------------------------------------------------------------

inline uint64_t step_naive(const BooleanNetwork& f, uint64_t x) {
  uint64_t next = 0;
  for (int i = 1; i <= f.size(); ++i)
    if (f.node(i).eval(x)) next |= uint64_t{1} << (i - 1);
  return next;
}

inline std::vector<uint32_t> fixed_points_naive(const BooleanNetwork& f) {
  std::vector<uint32_t> out;
  for (uint64_t x = 0; x < (uint64_t{1} << f.size()); ++x)
    if (step_naive(f, x) == x) out.push_back(static_cast<uint32_t>(x));
  return out;
}

// ---- graphs ---------------------------------------------------------------

// Cycle detection by DFS over the vertices not in `removed` (bitmask over
// vertex-1 positions).
inline bool acyclic_naive(const InteractionGraph& g, uint64_t removed) {
  const int n = g.size();
  std::vector<int> state(n + 1, 0); // 0 fresh, 1 on stack, 2 done
  std::vector<int> order;
  std::vector<std::pair<int, int>> stack;
  for (int start = 1; start <= n; ++start) {
    if (removed >> (start - 1) & 1) continue;
    if (state[start]) continue;
    stack.push_back({start, 1});
    state[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      bool descended = false;
      for (int w = next; w <= n; ++w) {
        if (!g.has_arc(v, w)) continue;
        if (removed >> (w - 1) & 1) continue;
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          stack.back().second = w + 1;
          stack.push_back({w, 1});
          state[w] = 1;
          descended = true;
          break;
        }
      }
      if (!descended) {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

// Minimum feedback vertex set size by trying all subsets, sizes ascending.
inline int feedback_naive(const InteractionGraph& g) {
  const int n = g.size();
  if (n > 16) throw std::runtime_error("feedback_naive is for small graphs");
  for (int size = 0; size <= n; ++size)
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask)
      if (__builtin_popcountll(mask) == size && acyclic_naive(g, mask))
        return size;
  return n;
}

// ---- single functions -------------------------------------------------------

inline int ic_index_naive(const BooleanFunction& f) {
  const int n = f.arity();
  const uint64_t states = uint64_t{1} << n;
  for (int k = 0; k <= n; ++k) {
    for (const auto& vars : subsets(n, k)) {
      for (uint32_t a = 0; a < (uint32_t{1} << k); ++a) {
        int seen0 = 0, seen1 = 0;
        for (uint64_t x = 0; x < states; ++x) {
          bool match = true;
          for (int l = 0; l < k && match; ++l)
            match = (x >> (vars[l] - 1) & 1) == (a >> l & 1);
          if (!match) continue;
          (f.eval(x) ? seen1 : seen0) = 1;
          if (seen0 && seen1) break;
        }
        if (!(seen0 && seen1)) return k;
      }
    }
  }
  return n;
}

inline bool increasing_in_naive(const BooleanFunction& f, int var) {
  const uint64_t bit = uint64_t{1} << (var - 1);
  for (uint64_t x = 0; x < f.state_count(); ++x)
    if (!(x & bit) && f.eval(x) && !f.eval(x | bit)) return false;
  return true;
}

inline bool decreasing_in_naive(const BooleanFunction& f, int var) {
  const uint64_t bit = uint64_t{1} << (var - 1);
  for (uint64_t x = 0; x < f.state_count(); ++x)
    if (!(x & bit) && !f.eval(x) && f.eval(x | bit)) return false;
  return true;
}

inline bool unate_naive(const BooleanFunction& f) {
  for (int v = 1; v <= f.arity(); ++v)
    if (!increasing_in_naive(f, v) && !decreasing_in_naive(f, v)) return false;
  return true;
}

inline bool monotone_naive(const BooleanFunction& f) {
  for (int v = 1; v <= f.arity(); ++v)
    if (!increasing_in_naive(f, v)) return false;
  return true;
}

// Matches the library convention: variables the function ignores count on
// the increasing side.
inline int xi_naive(const BooleanFunction& f) {
  const int n = f.arity();
  uint64_t plus = 0, minus = 0;
  for (int v = 1; v <= n; ++v) {
    if (increasing_in_naive(f, v))
      plus |= uint64_t{1} << (v - 1);
    else if (decreasing_in_naive(f, v))
      minus |= uint64_t{1} << (v - 1);
    else
      throw std::runtime_error("xi_naive needs a unate function");
  }
  int best = -1;
  for (uint64_t x = 0; x < f.state_count(); ++x) {
    const int w = __builtin_popcountll(x & plus) + __builtin_popcountll(~x & minus);
    const int value = f.eval(x) ? n - w : w;
    if (value > best) best = value;
  }
  return best;
}

// ---- random generators ------------------------------------------------------

inline BooleanFunction random_function(std::mt19937_64& rng, int arity) {
  std::vector<uint64_t> words((size_t{1} << arity) / 64 + 1);
  for (auto& w : words) w = rng();
  words.resize((arity < 6) ? 1 : (size_t{1} << (arity - 6)));
  if (arity < 6) words[0] &= (uint64_t{1} << (1 << arity)) - 1;
  return BooleanFunction::from_words(arity, std::move(words));
}

inline BooleanNetwork random_network(std::mt19937_64& rng, int n) {
  std::vector<BooleanFunction> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back(random_function(rng, n));
  return BooleanNetwork(std::move(nodes));
}

// Node i ignores variable i: a random (n-1)-ary function is transplanted
// onto the other variables.
inline BooleanNetwork random_loopless_network(std::mt19937_64& rng, int n) {
  std::vector<BooleanFunction> nodes;
  for (int i = 1; i <= n; ++i) {
    const BooleanFunction g = random_function(rng, n - 1);
    std::vector<int> map;
    for (int v = 1; v <= n; ++v)
      if (v != i) map.push_back(v);
    nodes.push_back(g.remap(n, map));
  }
  return BooleanNetwork(std::move(nodes));
}

// Positive DNF over the allowed variables; monotone by construction.
inline BooleanFunction random_monotone_function(std::mt19937_64& rng, int arity,
                                                const std::vector<int>& allowed) {
  std::uniform_int_distribution<int> clause_count(1, 3);
  std::uniform_int_distribution<size_t> pick(0, allowed.size() - 1);
  std::uniform_int_distribution<int> clause_size(1, static_cast<int>(allowed.size()));
  std::vector<std::vector<int>> clauses;
  const int m = clause_count(rng);
  for (int c = 0; c < m; ++c) {
    std::set<int> vars;
    const int size = std::min<int>(clause_size(rng), 3);
    while (static_cast<int>(vars.size()) < size) vars.insert(allowed[pick(rng)]);
    clauses.emplace_back(vars.begin(), vars.end());
  }
  return BooleanFunction::dnf(arity, std::move(clauses));
}

inline BooleanNetwork random_loopless_monotone_network(std::mt19937_64& rng, int n) {
  std::vector<BooleanFunction> nodes;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> allowed;
    for (int v = 1; v <= n; ++v)
      if (v != i) allowed.push_back(v);
    nodes.push_back(random_monotone_function(rng, n, allowed));
  }
  return BooleanNetwork(std::move(nodes));
}

// Monotone sample with random polarity flips: unate by construction.
inline BooleanFunction random_unate_function(std::mt19937_64& rng, int arity) {
  std::vector<int> all;
  for (int v = 1; v <= arity; ++v) all.push_back(v);
  const BooleanFunction base = random_monotone_function(rng, arity, all);
  const uint64_t flips = rng() & ((uint64_t{1} << arity) - 1);
  std::vector<uint64_t> words(base.words().size(), 0);
  for (uint64_t x = 0; x < base.state_count(); ++x)
    if (base.eval(x ^ flips)) words[x >> 6] |= uint64_t{1} << (x & 63);
  return BooleanFunction::from_words(arity, std::move(words));
}

// Every node an AND or an OR of signed literals on the other variables.
inline BooleanNetwork random_and_or_network(std::mt19937_64& rng, int n) {
  std::vector<BooleanFunction> nodes;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> literals;
    for (int v = 1; v <= n; ++v) {
      if (v == i) continue;
      if (coin(rng)) continue;
      literals.push_back(coin(rng) ? v : -v);
    }
    if (literals.empty()) literals.push_back(i == 1 ? 2 : 1);
    nodes.push_back(coin(rng) ? BooleanFunction::and_gate(n, literals)
                              : BooleanFunction::or_gate(n, literals));
  }
  return BooleanNetwork(std::move(nodes));
}

// Random subset of {0,1}^n rows, each kept with the given density.
inline std::vector<uint32_t> random_rows(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<uint32_t> rows;
  for (uint32_t x = 0; x < (uint32_t{1} << n); ++x)
    if (keep(rng)) rows.push_back(x);
  return rows;
}

} // namespace oracle

#endif
