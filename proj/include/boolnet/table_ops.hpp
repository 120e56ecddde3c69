#ifndef BOOLNET_TABLE_OPS_HPP
#define BOOLNET_TABLE_OPS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace boolnet {

/// Words needed for a 2^arity bit table, packed 64 states per word.
inline size_t word_count(int arity) {
  return arity >= 6 ? (size_t{1} << (arity - 6)) : 1;
}

/// Valid-bit mask of the (single) word of a table with arity < 6;
/// all ones for arity >= 6.
inline uint64_t table_mask(int arity) {
  return arity >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << arity)) - 1;
}

/// Clears bits beyond the 2^arity states of the first word.
inline void trim_words(int arity, std::vector<uint64_t>& words) {
  if (arity < 6) words[0] &= table_mask(arity);
}

/// kProjection[p] has bit x set iff bit p of x is set; this is the truth
/// table pattern of the variable at position p, repeated every 2^(p+1) bits.
inline constexpr uint64_t kProjection[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
};

} // namespace boolnet

#endif
