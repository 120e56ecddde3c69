#include "boolnet/steiner.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "boolnet/cover.hpp"
#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

uint32_t block_of(std::initializer_list<int> points) {
  uint32_t b = 0;
  for (int p : points) b |= uint32_t{1} << (p - 1);
  return b;
}

uint32_t block_from_string(const char* row) {
  // Row text puts point 1 leftmost.
  uint32_t b = 0;
  for (int i = 0; row[i]; ++i)
    if (row[i] == '1') b |= uint32_t{1} << i;
  return b;
}

} // namespace

SteinerSystem::SteinerSystem(int n, int k, int t, std::vector<uint32_t> blocks)
    : n_(n), k_(k), t_(t), blocks_(std::move(blocks)) {
  if (n < 1 || n > 31)
    throw parameter_error("point count must lie in 1..31");
  if (t < 1 || k < t || k > n)
    throw parameter_error("need 1 <= t <= k <= n");
  for (uint32_t b : blocks_)
    if (b >> n)
      throw parameter_error("block mentions a point beyond n");
  std::sort(blocks_.begin(), blocks_.end());
}

VectorSet SteinerSystem::as_rows() const { return VectorSet(n_, blocks_); }

SteinerCheck verify_steiner(const SteinerSystem& s) {
  SteinerCheck chk;
  const auto& blocks = s.blocks();
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (std::popcount(blocks[i]) != s.block_size()) {
      chk.kind = SteinerCheck::Kind::block_weight;
      chk.block_index = static_cast<int>(i) + 1;
      return chk;
    }
  }

  // Count how often each t-subset occurs inside a block, then report the
  // first subset (in lexicographic order) whose count is not 1.
  const int n = s.points();
  const int t = s.strength_t();
  std::map<std::vector<int>, int> counts;
  auto record = [&](uint32_t block) {
    std::vector<int> members;
    for (int p = 1; p <= n; ++p)
      if (block >> (p - 1) & 1) members.push_back(p);
    // every t-subset of the block
    std::vector<int> pick(t);
    for (int i = 0; i < t; ++i) pick[i] = i;
    while (true) {
      std::vector<int> key(t);
      for (int i = 0; i < t; ++i) key[i] = members[pick[i]];
      ++counts[key];
      int i = t - 1;
      while (i >= 0 && pick[i] == static_cast<int>(members.size()) - (t - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
  };
  for (uint32_t b : blocks) record(b);

  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i + 1;
  while (true) {
    const auto it = counts.find(idx);
    const int c = it == counts.end() ? 0 : it->second;
    if (c != 1) {
      chk.kind = SteinerCheck::Kind::coverage;
      chk.subset = idx;
      chk.count = c;
      return chk;
    }
    int i = t - 1;
    while (i >= 0 && idx[i] == n - (t - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  chk.ok = true;
  return chk;
}

SteinerSystem fano() {
  std::vector<uint32_t> blocks = {
      block_of({1, 2, 4}), block_of({2, 3, 5}), block_of({3, 4, 6}),
      block_of({4, 5, 7}), block_of({1, 5, 6}), block_of({2, 6, 7}),
      block_of({1, 3, 7}),
  };
  return SteinerSystem(7, 3, 2, std::move(blocks));
}

SteinerSystem sqs8() {
  static const char* rows[14] = {
      "11010001", "01101001", "00110101", "00011011", "10001101",
      "01000111", "10100011", "00101110", "10010110", "11001010",
      "11100100", "01110010", "10111000", "01011100",
  };
  std::vector<uint32_t> blocks;
  for (const char* r : rows) blocks.push_back(block_from_string(r));
  return SteinerSystem(8, 4, 3, std::move(blocks));
}

namespace {

// Bose: n = 6t+3. Points are (x, l) with x in Z_m, m = 2t+1, l in {1,2,3},
// numbered x + (l-1)m + 1. The quasigroup x*y = (x+y)(t+1) mod m is
// idempotent and commutative ((t+1) doubles to 1 mod m).
SteinerSystem sts_bose(int n) {
  const int t = (n - 3) / 6;
  const int m = 2 * t + 1;
  auto point = [&](int x, int l) { return x + (l - 1) * m + 1; };
  auto mul = [&](int x, int y) { return ((x + y) * (t + 1)) % m; };
  std::vector<uint32_t> blocks;
  for (int x = 0; x < m; ++x)
    blocks.push_back(block_of({point(x, 1), point(x, 2), point(x, 3)}));
  for (int l = 1; l <= 3; ++l) {
    const int next = l % 3 + 1;
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        blocks.push_back(block_of({point(x, l), point(y, l), point(mul(x, y), next)}));
  }
  return SteinerSystem(n, 3, 2, std::move(blocks));
}

// Skolem type: n = 6t+1. Points are (i, l) with i in 1..2t, l in {1,2,3},
// numbered (i-1) + (l-1)2t + 1, plus an extra point n. Uses the commutative
// half-idempotent quasigroup i*j = pi((i + j - 2) mod 2t) where pi maps even
// residues 2a to a+1 and odd residues 2a+1 to t+a+1; then i*i = i for i <= t
// and i*i = i-t above.
SteinerSystem sts_skolem(int n) {
  const int t = (n - 1) / 6;
  const int m = 2 * t;
  auto point = [&](int i, int l) { return (i - 1) + (l - 1) * m + 1; };
  auto pi = [&](int r) { return r % 2 == 0 ? r / 2 + 1 : t + (r - 1) / 2 + 1; };
  auto mul = [&](int i, int j) { return pi((i + j - 2) % m); };
  const int inf = n;
  std::vector<uint32_t> blocks;
  for (int i = 1; i <= t; ++i)
    blocks.push_back(block_of({point(i, 1), point(i, 2), point(i, 3)}));
  for (int i = 1; i <= t; ++i) {
    blocks.push_back(block_of({inf, point(t + i, 1), point(i, 2)}));
    blocks.push_back(block_of({inf, point(t + i, 2), point(i, 3)}));
    blocks.push_back(block_of({inf, point(t + i, 3), point(i, 1)}));
  }
  for (int l = 1; l <= 3; ++l) {
    const int next = l % 3 + 1;
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        blocks.push_back(block_of({point(i, l), point(j, l), point(mul(i, j), next)}));
  }
  return SteinerSystem(n, 3, 2, std::move(blocks));
}

} // namespace

SteinerSystem sts(int n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3))
    throw parameter_error("triple systems exist for n = 1 or 3 (mod 6), n >= 7");
  SteinerSystem s = (n % 6 == 3) ? sts_bose(n) : sts_skolem(n);
  const SteinerCheck chk = verify_steiner(s);
  if (!chk.ok)
    throw verify_error("generated triple system failed verification"); // unreachable
  return s;
}

SteinerCaReport steiner_to_ca_check(const SteinerSystem& s) {
  SteinerCaReport rep;
  if (s.block_size() != s.strength_t() + 1) {
    rep.reason = "needs block size t+1";
    return rep;
  }
  if (2 * s.strength_t() >= s.points()) {
    rep.reason = "needs 2t < n";
    return rep;
  }
  rep.applicable = true;
  rep.expected = s.strength_t();
  rep.strength = strength(s.as_rows());
  rep.ok = rep.strength == rep.expected;
  return rep;
}

} // namespace boolnet
