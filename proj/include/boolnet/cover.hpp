#ifndef BOOLNET_COVER_HPP
#define BOOLNET_COVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolnet/bool_net.hpp"
#include "boolnet/graph.hpp"

namespace boolnet {

/// A set of binary vectors of a common width n, kept sorted and duplicate
/// free. Vector x assigns variable i the bit (x >> (i-1)) & 1.
class VectorSet {
public:
  VectorSet() = default; ///< empty set of width 0
  VectorSet(int n, std::vector<uint32_t> rows);

  int width() const { return n_; }
  size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<uint32_t>& rows() const { return rows_; }
  bool contains(uint32_t row) const;

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  int n_ = 0;
  std::vector<uint32_t> rows_;
};

/// Concatenation product: every row of a glued to every row of b, with b's
/// variables renumbered to sit above a's.
VectorSet product(const VectorSet& a, const VectorSet& b);

/// Uncovered pair found while testing strength k: no row projects onto the
/// k columns `indices` as the tuple spelled by `pattern` (MSB first, so bit
/// k-1-l of pattern belongs to indices[l]).
struct CoverageWitness {
  std::vector<int> indices;
  uint32_t pattern = 0;
  std::string pattern_string() const;
};

/// True when every k of the n columns exhibit all 2^k patterns across the
/// rows. k = 0 holds exactly for nonempty sets.
bool has_strength(const VectorSet& a, int k);

/// Lexicographically first uncovered (columns, pattern) at size k, if any.
std::optional<CoverageWitness> find_uncovered(const VectorSet& a, int k);

/// Largest k with has_strength(a, k); -1 for the empty set.
int strength(const VectorSet& a);

/// strength(fixed_points(f)) clamped to at least 0.
int independence_number(const BooleanNetwork& f);

/// Known bounds on the minimum size of a strength-k binary covering array
/// with n columns. lo = hi when the value is exact.
struct CanEntry {
  int n = 0;
  int k = 0;
  int64_t lo = 0;
  int64_t hi = 0;
  bool exact() const { return lo == hi; }
};

/// Table lookup for 1 <= k <= 6, 0 <= n-k <= 10, plus the identity
/// CAN(k;k) = 2^k for any k. Returns nothing outside that range.
std::optional<CanEntry> can_lookup(int n, int k);

/// Smallest row count m <= max_rows admitting a strength-k set of width n,
/// found by exhaustive search with the first row pinned to all zeros and rows
/// kept ascending. Requires n <= 5 and k <= 3. Returns nothing when even
/// max_rows rows do not suffice.
std::optional<int> can_exact_search(int n, int k, int max_rows);

/// Maximum size of a width-n set whose strength is exactly k, namely
/// 2^n - 2^(n-k-1); for k = n the full cube is the only such set, so 2^n.
int64_t max_rows_bound(int n, int k);

struct AdmissibilityReport {
  bool rejected = false; ///< otherwise inconclusive
  std::vector<std::string> reasons;
  int tau = 0;
  int min_indegree = 0;
  int64_t can_lo = 0;          ///< best lower bound used for CAN(n;k)
  std::optional<CanEntry> can; ///< table entry when one exists
};

/// Necessary conditions for some network on graph g to reach independence
/// number k: a loopless graph needs min in-degree >= k, and 2^tau(g) must
/// reach the best known lower bound on CAN(n;k) (table value, else 2^k,
/// sharpened by CAN(n;k) >= 2^(k-2) * CAN(n-k+2;2) when that row is exact).
/// Never answers "admissible", only "rejected" or "inconclusive".
AdmissibilityReport admissibility_check(const InteractionGraph& g, int k);

} // namespace boolnet

#endif
