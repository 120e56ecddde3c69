#ifndef BOOLNET_STEINER_HPP
#define BOOLNET_STEINER_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace boolnet {

class VectorSet;

/// A block design on points 1..n: blocks of size k such that every t-subset
/// of points lies in exactly one block. Blocks are stored as bitmasks
/// (point i at bit i-1), sorted ascending by encoding.
class SteinerSystem {
public:
  SteinerSystem(int n, int k, int t, std::vector<uint32_t> blocks);

  int points() const { return n_; }
  int block_size() const { return k_; }
  int strength_t() const { return t_; }
  const std::vector<uint32_t>& blocks() const { return blocks_; }
  size_t block_count() const { return blocks_.size(); }

  /// Blocks as rows of a width-n vector set.
  VectorSet as_rows() const;

private:
  int n_, k_, t_;
  std::vector<uint32_t> blocks_;
};

struct SteinerCheck {
  bool ok = false;
  enum class Kind { none, block_weight, coverage } kind = Kind::none;
  int block_index = -1;    ///< offending block (1-indexed) for block_weight
  std::vector<int> subset; ///< first bad t-subset in lexicographic order
  int count = 0;           ///< how many blocks contain it (1 expected)
};

/// Full verification: every block has weight k, every t-subset is covered
/// exactly once. Reports the first violation in a fixed scan order.
SteinerCheck verify_steiner(const SteinerSystem& s);

/// The (7,3,2) system on seven points whose blocks are
/// {1,2,4} {2,3,5} {3,4,6} {4,5,7} {1,5,6} {2,6,7} {1,3,7}.
SteinerSystem fano();

/// A (8,4,3) quadruple system given by fourteen weight-4 rows.
SteinerSystem sqs8();

/// A triple system (n,3,2) for n = 1 or 3 (mod 6), n >= 7: the Bose
/// construction for n = 3 (mod 6), a Skolem-type construction with a
/// half-idempotent quasigroup for n = 1 (mod 6). The result is re-verified
/// before it is returned.
SteinerSystem sts(int n);

struct SteinerCaReport {
  bool applicable = false; ///< hypotheses k = t+1 and 2t < n hold
  std::string reason;      ///< why not, when inapplicable
  int strength = -1;
  int expected = -1;
  bool ok = false; ///< strength == expected
};

/// Checks that the block rows of a (n,t+1,t) system with 2t < n form a set
/// of strength exactly t.
SteinerCaReport steiner_to_ca_check(const SteinerSystem& s);

} // namespace boolnet

#endif
