#include "boolnet/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

void check_vertex(int n, int v) {
  if (v < 1 || v > n)
    throw parameter_error("vertex " + std::to_string(v) + " out of range 1.." +
                          std::to_string(n));
}

// Kahn style peeling on adjacency masks. `alive` is the 0-indexed vertex set
// still present; a vertex with a loop never peels, which is the right answer.
bool acyclic(const std::vector<uint64_t>& out, uint64_t alive) {
  while (alive) {
    uint64_t peeled = 0;
    for (uint64_t rest = alive; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      bool has_pred = false;
      for (uint64_t cand = alive; cand;) {
        const int u = std::countr_zero(cand);
        cand &= cand - 1;
        if (out[u] >> v & 1) { has_pred = true; break; }
      }
      if (!has_pred) peeled |= uint64_t{1} << v;
    }
    if (!peeled) return false;
    alive &= ~peeled;
  }
  return true;
}

} // namespace

InteractionGraph::InteractionGraph(int n) : n_(n) {
  if (n < 1 || n > 63)
    throw parameter_error("graph size must lie in 1..63");
  out_.assign(n, 0);
}

InteractionGraph InteractionGraph::complete(int n) {
  InteractionGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) g.add_arc(i, j);
  return g;
}

InteractionGraph InteractionGraph::complete_bipartite(int a, int b) {
  InteractionGraph g(a + b);
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) {
      g.add_arc(i, j);
      g.add_arc(j, i);
    }
  return g;
}

InteractionGraph InteractionGraph::cycle(int n) {
  InteractionGraph g(n);
  for (int i = 1; i <= n; ++i) g.add_arc(i, i % n + 1);
  return g;
}

void InteractionGraph::add_arc(int from, int to) {
  check_vertex(n_, from);
  check_vertex(n_, to);
  out_[from - 1] |= uint64_t{1} << (to - 1);
}

bool InteractionGraph::has_arc(int from, int to) const {
  check_vertex(n_, from);
  check_vertex(n_, to);
  return out_[from - 1] >> (to - 1) & 1;
}

std::vector<std::pair<int, int>> InteractionGraph::arcs() const {
  std::vector<std::pair<int, int>> a;
  for (int i = 0; i < n_; ++i)
    for (uint64_t m = out_[i]; m;) {
      const int j = std::countr_zero(m);
      m &= m - 1;
      a.emplace_back(i + 1, j + 1);
    }
  return a;
}

int InteractionGraph::in_degree(int v) const {
  check_vertex(n_, v);
  int d = 0;
  for (int u = 0; u < n_; ++u) d += out_[u] >> (v - 1) & 1;
  return d;
}

int InteractionGraph::out_degree(int v) const {
  check_vertex(n_, v);
  return std::popcount(out_[v - 1]);
}

uint64_t InteractionGraph::out_mask(int v) const {
  check_vertex(n_, v);
  return out_[v - 1];
}

bool is_acyclic_without(const InteractionGraph& g, const std::vector<int>& removed) {
  uint64_t alive = (g.size() == 63 ? ~uint64_t{0} : (uint64_t{1} << g.size()) - 1);
  std::vector<uint64_t> out(g.size());
  for (int v = 1; v <= g.size(); ++v) out[v - 1] = g.out_mask(v);
  for (int v : removed) {
    check_vertex(g.size(), v);
    alive &= ~(uint64_t{1} << (v - 1));
  }
  return acyclic(out, alive);
}

namespace {

struct FeedbackSearch {
  const std::vector<uint64_t>& out;
  const std::vector<int>& candidates; // 0-indexed, ascending
  uint64_t all_vertices;
  std::vector<int> chosen;

  // Picks `need` candidates with indices >= from (positions into candidates)
  // keeping removal order ascending, so the first hit is the
  // lexicographically smallest witness of this size.
  bool search(size_t from, int need, uint64_t removed) {
    if (need == 0) return acyclic(out, all_vertices & ~removed);
    if (candidates.size() - from < static_cast<size_t>(need)) return false;
    // Bound: if removing every remaining candidate still leaves a cycle,
    // no completion of this branch can succeed.
    uint64_t rest = removed;
    for (size_t i = from; i < candidates.size(); ++i)
      rest |= uint64_t{1} << candidates[i];
    if (!acyclic(out, all_vertices & ~rest)) return false;
    for (size_t i = from; i < candidates.size(); ++i) {
      const uint64_t bit = uint64_t{1} << candidates[i];
      chosen.push_back(candidates[i]);
      if (search(i + 1, need - 1, removed | bit)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

} // namespace

FeedbackResult feedback_number(const InteractionGraph& g) {
  const int n = g.size();
  if (n > 20)
    throw limit_error("exact feedback search is limited to 20 vertices");
  std::vector<uint64_t> out(n);
  uint64_t forced = 0;
  for (int v = 1; v <= n; ++v) {
    out[v - 1] = g.out_mask(v);
    if (out[v - 1] >> (v - 1) & 1) forced |= uint64_t{1} << (v - 1);
  }
  const uint64_t all = (uint64_t{1} << n) - 1;

  // Loop vertices are one-vertex cycles, so they belong to every feedback
  // set; only the rest is searched.
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (!(forced >> v & 1)) candidates.push_back(v);

  FeedbackResult res;
  for (int extra = 0; extra <= static_cast<int>(candidates.size()); ++extra) {
    FeedbackSearch s{out, candidates, all, {}};
    if (s.search(0, extra, forced)) {
      uint64_t w = forced;
      for (int v : s.chosen) w |= uint64_t{1} << v;
      res.tau = std::popcount(w);
      for (int v = 0; v < n; ++v)
        if (w >> v & 1) res.witness.push_back(v + 1);
      return res;
    }
  }
  throw error("feedback search failed to terminate"); // removing all vertices always works
}

GraphMetrics graph_metrics(const InteractionGraph& g) {
  const int n = g.size();
  GraphMetrics m;
  m.min_indegree = n + 1;
  for (int v = 1; v <= n; ++v) {
    m.min_indegree = std::min(m.min_indegree, g.in_degree(v));
    if (g.has_arc(v, v)) m.has_loops = true;
  }

  // Strong connectivity: everything reachable from vertex 1 along arcs and
  // along reversed arcs.
  auto reach = [&](bool reversed) {
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t m2 = frontier; m2;) {
        const int v = std::countr_zero(m2);
        m2 &= m2 - 1;
        if (!reversed) {
          next |= g.out_mask(v + 1);
        } else {
          for (int u = 1; u <= n; ++u)
            if (g.out_mask(u) >> v & 1) next |= uint64_t{1} << (u - 1);
        }
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  };
  const uint64_t all = (uint64_t{1} << n) - 1;
  m.strongly_connected = reach(false) == all && reach(true) == all;
  return m;
}

} // namespace boolnet
