#include "boolnet/cover.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

// First k-combination of 1..n in lexicographic order.
void first_combination(std::vector<int>& idx, int k) {
  idx.resize(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
}

// Next combination, false when exhausted.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

// Pattern of row projected onto idx, first index in the most significant
// bit so that ascending integers spell lexicographically ascending tuples.
uint32_t project(uint32_t row, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  uint32_t a = 0;
  for (int l = 0; l < k; ++l)
    a |= ((row >> (idx[l] - 1)) & 1u) << (k - 1 - l);
  return a;
}

} // namespace

VectorSet::VectorSet(int n, std::vector<uint32_t> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > 31)
    throw parameter_error("vector width must lie in 0..31");
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
  if (!rows_.empty()) {
    if (n == 0)
      throw parameter_error("nonempty sets need a positive width");
    if (rows_.back() >> n)
      throw parameter_error("row exceeds the vector width");
  }
}

bool VectorSet::contains(uint32_t row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

VectorSet product(const VectorSet& a, const VectorSet& b) {
  if (a.width() + b.width() > 31)
    throw limit_error("product width exceeds 31");
  std::vector<uint32_t> rows;
  rows.reserve(a.size() * b.size());
  for (uint32_t rb : b.rows())
    for (uint32_t ra : a.rows())
      rows.push_back(ra | (rb << a.width()));
  return VectorSet(a.width() + b.width(), std::move(rows));
}

std::string CoverageWitness::pattern_string() const {
  std::string s;
  const int k = static_cast<int>(indices.size());
  for (int l = 0; l < k; ++l)
    s += ((pattern >> (k - 1 - l)) & 1) ? '1' : '0';
  return s;
}

bool has_strength(const VectorSet& a, int k) {
  if (k < 0 || k > a.width())
    throw parameter_error("strength level out of range");
  if (k == 0) return !a.empty();
  std::vector<int> idx;
  first_combination(idx, k);
  std::vector<uint64_t> seen((size_t{1} << k) / 64 + 1);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    uint32_t remaining = uint32_t{1} << k;
    for (uint32_t row : a.rows()) {
      const uint32_t p = project(row, idx);
      if (!(seen[p >> 6] >> (p & 63) & 1)) {
        seen[p >> 6] |= uint64_t{1} << (p & 63);
        if (--remaining == 0) break;
      }
    }
    if (remaining != 0) return false;
  } while (next_combination(idx, a.width()));
  return true;
}

std::optional<CoverageWitness> find_uncovered(const VectorSet& a, int k) {
  if (k < 1 || k > a.width())
    throw parameter_error("strength level out of range");
  std::vector<int> idx;
  first_combination(idx, k);
  std::vector<uint64_t> seen((size_t{1} << k) / 64 + 1);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    uint32_t remaining = uint32_t{1} << k;
    for (uint32_t row : a.rows()) {
      const uint32_t p = project(row, idx);
      if (!(seen[p >> 6] >> (p & 63) & 1)) {
        seen[p >> 6] |= uint64_t{1} << (p & 63);
        if (--remaining == 0) break;
      }
    }
    if (remaining != 0) {
      for (uint32_t p = 0; p < (uint32_t{1} << k); ++p)
        if (!(seen[p >> 6] >> (p & 63) & 1)) return CoverageWitness{idx, p};
    }
  } while (next_combination(idx, a.width()));
  return std::nullopt;
}

int strength(const VectorSet& a) {
  if (a.empty()) return -1;
  int k = 0;
  while (k < a.width() && has_strength(a, k + 1)) ++k;
  return k;
}

int independence_number(const BooleanNetwork& f) {
  return std::max(0, strength(fixed_points(f)));
}

namespace {

// Known CAN(s+t; t) bounds, rows s = 0..10, columns t = 1..6; lo = hi marks
// exact values. The (s=1, t=4) cell is 16 = 2^4, attained by the even-weight
// vectors of length 5.
struct Bounds { int lo, hi; };
constexpr Bounds kCanTable[11][6] = {
    {{2, 2}, {4, 4}, {8, 8}, {16, 16}, {32, 32}, {64, 64}},       // s = 0
    {{2, 2}, {4, 4}, {8, 8}, {16, 16}, {32, 32}, {64, 64}},       // s = 1
    {{2, 2}, {5, 5}, {10, 10}, {21, 21}, {42, 42}, {85, 85}},     // s = 2
    {{2, 2}, {6, 6}, {12, 12}, {24, 24}, {48, 52}, {96, 108}},    // s = 3
    {{2, 2}, {6, 6}, {12, 12}, {24, 24}, {48, 54}, {96, 116}},    // s = 4
    {{2, 2}, {6, 6}, {12, 12}, {24, 24}, {48, 56}, {96, 118}},    // s = 5
    {{2, 2}, {6, 6}, {12, 12}, {24, 24}, {48, 64}, {96, 128}},    // s = 6
    {{2, 2}, {6, 6}, {12, 12}, {24, 24}, {48, 64}, {96, 128}},    // s = 7
    {{2, 2}, {6, 6}, {12, 12}, {24, 24}, {48, 64}, {96, 128}},    // s = 8
    {{2, 2}, {7, 7}, {15, 15}, {30, 32}, {60, 64}, {120, 128}},   // s = 9
    {{2, 2}, {7, 7}, {15, 16}, {30, 35}, {60, 79}, {120, 179}},   // s = 10
};

} // namespace

std::optional<CanEntry> can_lookup(int n, int k) {
  if (k < 1 || n < k)
    throw parameter_error("can_lookup needs 1 <= k <= n");
  const int s = n - k;
  if (k <= 6 && s <= 10) {
    const Bounds& b = kCanTable[s][k - 1];
    return CanEntry{n, k, b.lo, b.hi};
  }
  if (s == 0) {
    // CAN(k;k) = 2^k for every k: all patterns on all columns.
    const int64_t v = int64_t{1} << k;
    return CanEntry{n, k, v, v};
  }
  return std::nullopt;
}

namespace {

struct CanSearch {
  int n, k, m;
  uint32_t row_limit;                 // 2^n
  std::vector<std::vector<int>> subsets;
  std::vector<uint32_t> covered;      // bitmask of patterns per subset
  int uncovered_total = 0;
  std::vector<uint32_t> rows;

  bool covers_all() const { return uncovered_total == 0; }

  // Adds a row, returns the list of (subset, pattern) newly covered so the
  // caller can undo.
  std::vector<std::pair<int, uint32_t>> add(uint32_t row) {
    std::vector<std::pair<int, uint32_t>> added;
    for (size_t s = 0; s < subsets.size(); ++s) {
      const uint32_t p = project(row, subsets[s]);
      if (!(covered[s] >> p & 1)) {
        covered[s] |= uint32_t{1} << p;
        --uncovered_total;
        added.emplace_back(static_cast<int>(s), p);
      }
    }
    rows.push_back(row);
    return added;
  }

  void undo(const std::vector<std::pair<int, uint32_t>>& added) {
    for (auto [s, p] : added) {
      covered[s] &= ~(uint32_t{1} << p);
      ++uncovered_total;
    }
    rows.pop_back();
  }

  bool extend(uint32_t next_row, int slots_left) {
    if (covers_all()) return true;
    if (slots_left == 0) return false;
    // Each new row covers at most one pattern per subset.
    if (uncovered_total > slots_left * static_cast<int>(subsets.size()))
      return false;
    if (row_limit - next_row < static_cast<uint32_t>(slots_left)) return false;
    for (uint32_t r = next_row; r < row_limit; ++r) {
      auto added = add(r);
      if (extend(r + 1, slots_left - 1)) return true;
      undo(added);
    }
    return false;
  }
};

} // namespace

std::optional<int> can_exact_search(int n, int k, int max_rows) {
  if (n < 1 || n > 5 || k < 1 || k > 3 || k > n)
    throw limit_error("exact search is limited to n <= 5, k <= 3");
  if (max_rows < 1)
    throw parameter_error("max_rows must be positive");
  const int lower = 1 << k;
  for (int m = lower; m <= max_rows; ++m) {
    CanSearch s;
    s.n = n;
    s.k = k;
    s.m = m;
    s.row_limit = uint32_t{1} << n;
    std::vector<int> idx;
    first_combination(idx, k);
    do {
      s.subsets.push_back(idx);
    } while (next_combination(idx, n));
    s.covered.assign(s.subsets.size(), 0);
    s.uncovered_total = static_cast<int>(s.subsets.size()) * (1 << k);
    // Complementing every row with the smallest one maps any witness to one
    // containing the all-zero row, so pinning it loses nothing.
    auto added = s.add(0);
    (void)added;
    if (s.extend(1, m - 1)) return m;
  }
  return std::nullopt;
}

int64_t max_rows_bound(int n, int k) {
  if (k < 1 || k > n)
    throw parameter_error("max_rows_bound needs 1 <= k <= n");
  if (n > 62)
    throw limit_error("width too large for a 64-bit bound");
  if (k == n) return int64_t{1} << n;
  return (int64_t{1} << n) - (int64_t{1} << (n - k - 1));
}

AdmissibilityReport admissibility_check(const InteractionGraph& g, int k) {
  const int n = g.size();
  if (k < 1 || k > n)
    throw parameter_error("admissibility level k must lie in 1..n");
  AdmissibilityReport rep;
  const GraphMetrics metrics = graph_metrics(g);
  rep.min_indegree = metrics.min_indegree;
  rep.tau = feedback_number(g).tau;

  if (!metrics.has_loops && metrics.min_indegree < k) {
    rep.rejected = true;
    rep.reasons.push_back(
        "loopless graph has a vertex of in-degree " +
        std::to_string(metrics.min_indegree) + ", below k = " + std::to_string(k) +
        "; independence k forces every node to be k-set canalizing, which needs "
        "k inputs");
  }

  // Best known lower bound on CAN(n;k): table when available, else 2^k,
  // sharpened by CAN(n;k) >= 2^(k-2) * CAN(n-k+2; 2) when that entry is exact.
  rep.can = can_lookup(n, k);
  int64_t lo = int64_t{1} << k;
  std::string lo_src = "2^k";
  if (rep.can && rep.can->lo > lo) {
    lo = rep.can->lo;
    lo_src = "table";
  }
  if (k >= 2) {
    if (auto base = can_lookup(n - k + 2, 2); base && base->exact()) {
      const int64_t rec = (int64_t{1} << (k - 2)) * base->lo;
      if (rec > lo) {
        lo = rec;
        lo_src = "recursive";
      }
    }
  }
  rep.can_lo = lo;

  const int64_t capacity = rep.tau >= 62 ? -1 : (int64_t{1} << rep.tau);
  if (capacity >= 0 && capacity < lo) {
    rep.rejected = true;
    rep.reasons.push_back(
        "feedback bound: at most 2^tau = " + std::to_string(capacity) +
        " fixed points, but strength " + std::to_string(k) + " on " +
        std::to_string(n) + " columns needs at least " + std::to_string(lo) +
        " rows (" + lo_src + " bound)");
  }

  if (!rep.rejected)
    rep.reasons.push_back("no necessary condition violated; the test is one-sided");
  return rep;
}

} // namespace boolnet
