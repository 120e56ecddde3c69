#ifndef BOOLNET_BOOL_FN_HPP
#define BOOLNET_BOOL_FN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace boolnet {

/// Symbolic forms a function may carry next to its truth table.
/// Variables are 1-indexed; negative entries in literal lists mean negation.
struct LinearDesc {
  std::vector<int> inputs; ///< XOR of these variables (empty = constant 0)
};
struct DnfDesc {
  std::vector<std::vector<int>> clauses; ///< OR of ANDs of literals
};
struct MajorityDesc {
  std::vector<int> inputs; ///< 1 iff at least ceil(m/2) of the m inputs are 1
};
struct AndDesc {
  std::vector<int> literals; ///< conjunction (empty = constant 1)
};
struct OrDesc {
  std::vector<int> literals; ///< disjunction (empty = constant 0)
};

/// monostate = truth table only.
using Descriptor =
    std::variant<std::monostate, LinearDesc, DnfDesc, MajorityDesc, AndDesc, OrDesc>;

/// Behaviour of a function in one variable.
enum class VarTrend : uint8_t {
  increasing, ///< never 1 -> 0 when the variable flips 0 -> 1
  decreasing, ///< never 0 -> 1 when the variable flips 0 -> 1
  both,       ///< does not depend on the variable
  neither     ///< violates both directions
};

struct UnateProfile {
  std::vector<VarTrend> trend; ///< trend[i-1] is the trend in variable i
  bool unate() const;          ///< no variable is VarTrend::neither
  bool monotone() const;       ///< every variable increasing or vacuous
};

/// First canalizing set found: fixing vars to the assignment forces f = value.
/// Bit k-1-l of assignment holds the value given to vars[l], so reading the
/// assignment MSB-first spells the tuple in variable order.
struct CanalizingWitness {
  std::vector<int> vars;
  uint32_t assignment = 0;
  bool value = false;
  std::string assignment_string() const;
};

/// A Boolean function of small arity, stored as a complete truth table.
///
/// State x encodes an assignment by giving variable i the bit (x >> (i-1)) & 1.
/// Bit x of the table is the function value at state x. Tables are packed 64
/// states per word, word x/64 bit x%64, with unused high bits kept zero.
class BooleanFunction {
public:
  BooleanFunction() = default;

  static BooleanFunction from_words(int arity, std::vector<uint64_t> words,
                                    Descriptor desc = std::monostate{});
  static BooleanFunction from_hex(int arity, const std::string& hex);
  static BooleanFunction constant(int arity, bool value);
  /// Projection onto one variable, i.e. f(x) = x_index.
  static BooleanFunction var(int arity, int index);
  static BooleanFunction linear(int arity, std::vector<int> inputs);
  static BooleanFunction majority(int arity, std::vector<int> inputs);
  static BooleanFunction dnf(int arity, std::vector<std::vector<int>> clauses);
  static BooleanFunction and_gate(int arity, std::vector<int> literals);
  static BooleanFunction or_gate(int arity, std::vector<int> literals);

  int arity() const { return arity_; }
  uint64_t state_count() const { return uint64_t{1} << arity_; }
  const std::vector<uint64_t>& words() const { return words_; }
  const Descriptor& descriptor() const { return desc_; }
  bool has_descriptor() const { return !std::holds_alternative<std::monostate>(desc_); }

  /// Value at a state, 0 <= state < 2^arity.
  bool eval(uint64_t state) const;

  /// True when some state pair differing only in variable var has different values.
  bool depends_on(int var) const;

  bool is_constant() const;

  /// Truth table as lowercase hex, one digit per four states, state 0 in the
  /// low bit of the first digit.
  std::string table_hex() const;

  /// Transplant onto new_arity variables: old variable j becomes var_map[j-1].
  /// The map must be injective with values in 1..new_arity. Descriptors are
  /// relabelled, so symbolic forms survive the move.
  BooleanFunction remap(int new_arity, std::span<const int> var_map) const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }

private:
  int arity_ = 0;
  std::vector<uint64_t> words_{0};
  Descriptor desc_{};
};

/// Trend of every variable, one table pass per variable.
UnateProfile unate_profile(const BooleanFunction& f);

bool is_unate(const BooleanFunction& f);
bool is_monotone(const BooleanFunction& f);

/// Smallest k such that fixing some k variables forces the value of f;
/// 0 for constant functions, arity(f) in the worst case. Scans set sizes
/// upward, and within a size scans variable sets and assignments in
/// lexicographic order, so the witness is reproducible.
int ic_index(const BooleanFunction& f, CanalizingWitness* witness = nullptr);

/// Certificate size xi(f) for unate f. With P the increasing-or-vacuous
/// variables and M the decreasing ones, the adjusted weight of x is
/// |{i in P : x_i = 1}| + |{j in M : x_j = 0}|, and xi is the larger of
/// max {n - w(x) : f(x) = 1} and max {w(y) : f(y) = 0}, ignoring an empty
/// side. Throws parameter_error when f is not unate.
int xi_value(const BooleanFunction& f);

/// State x with x_var = 0, f(x) = 1 and f(x + e_var) = 0, if any.
/// Such a pair witnesses that f is not increasing in var.
std::optional<uint64_t> find_increase_violation(const BooleanFunction& f, int var);

} // namespace boolnet

#endif
