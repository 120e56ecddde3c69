#include "boolnet/bool_fn.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "boolnet/config.hpp"
#include "boolnet/errors.hpp"
#include "boolnet/table_ops.hpp"

namespace boolnet {

namespace {

void check_arity(int arity) {
  if (arity < 1)
    throw parameter_error("function arity must be at least 1");
  if (arity > arity_cap())
    throw limit_error("arity " + std::to_string(arity) + " exceeds the cap of " +
                      std::to_string(arity_cap()));
}

void check_var(int arity, int var) {
  if (var < 1 || var > arity)
    throw parameter_error("variable index " + std::to_string(var) +
                          " out of range 1.." + std::to_string(arity));
}

void check_inputs(int arity, const std::vector<int>& inputs, bool allow_empty) {
  if (inputs.empty() && !allow_empty)
    throw parameter_error("input list must not be empty");
  std::set<int> seen;
  for (int v : inputs) {
    check_var(arity, v);
    if (!seen.insert(v).second)
      throw parameter_error("duplicate input variable " + std::to_string(v));
  }
}

void check_literals(int arity, const std::vector<int>& lits) {
  for (int lit : lits) {
    if (lit == 0)
      throw parameter_error("literal 0 is not a variable");
    check_var(arity, lit < 0 ? -lit : lit);
  }
}

// Truth table of the projection x -> x_index.
std::vector<uint64_t> var_words(int arity, int index) {
  const int p = index - 1;
  std::vector<uint64_t> w(word_count(arity), 0);
  if (p < 6) {
    for (auto& x : w) x = kProjection[p];
  } else {
    for (size_t i = 0; i < w.size(); ++i)
      if ((i >> (p - 6)) & 1) w[i] = ~uint64_t{0};
  }
  trim_words(arity, w);
  return w;
}

std::vector<uint64_t> literal_words(int arity, int lit) {
  auto w = var_words(arity, lit < 0 ? -lit : lit);
  if (lit < 0) {
    for (auto& x : w) x = ~x;
    trim_words(arity, w);
  }
  return w;
}

} // namespace

bool UnateProfile::unate() const {
  return std::none_of(trend.begin(), trend.end(),
                      [](VarTrend t) { return t == VarTrend::neither; });
}

bool UnateProfile::monotone() const {
  return std::all_of(trend.begin(), trend.end(), [](VarTrend t) {
    return t == VarTrend::increasing || t == VarTrend::both;
  });
}

std::string CanalizingWitness::assignment_string() const {
  std::string s;
  const int k = static_cast<int>(vars.size());
  for (int l = 0; l < k; ++l)
    s += ((assignment >> (k - 1 - l)) & 1) ? '1' : '0';
  return s;
}

BooleanFunction BooleanFunction::from_words(int arity, std::vector<uint64_t> words,
                                            Descriptor desc) {
  check_arity(arity);
  if (words.size() != word_count(arity))
    throw parameter_error("truth table has wrong word count");
  trim_words(arity, words);
  BooleanFunction f;
  f.arity_ = arity;
  f.words_ = std::move(words);
  f.desc_ = std::move(desc);
  return f;
}

BooleanFunction BooleanFunction::from_hex(int arity, const std::string& hex) {
  check_arity(arity);
  const uint64_t states = uint64_t{1} << arity;
  const size_t digits = static_cast<size_t>((states + 3) / 4);
  if (hex.size() != digits)
    throw parse_error("truth table hex has " + std::to_string(hex.size()) +
                      " digits, expected " + std::to_string(digits));
  std::vector<uint64_t> w(word_count(arity), 0);
  for (size_t i = 0; i < digits; ++i) {
    const char c = hex[i];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw parse_error(std::string("bad hex digit '") + c + "' in truth table");
    w[(4 * i) >> 6] |= uint64_t(v) << ((4 * i) & 63);
  }
  std::vector<uint64_t> trimmed = w;
  trim_words(arity, trimmed);
  if (trimmed != w)
    throw parse_error("truth table hex sets bits beyond 2^arity states");
  return from_words(arity, std::move(w));
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  check_arity(arity);
  std::vector<uint64_t> w(word_count(arity), value ? ~uint64_t{0} : 0);
  trim_words(arity, w);
  return from_words(arity, std::move(w),
                    value ? Descriptor{AndDesc{{}}} : Descriptor{OrDesc{{}}});
}

BooleanFunction BooleanFunction::var(int arity, int index) {
  check_arity(arity);
  check_var(arity, index);
  return from_words(arity, var_words(arity, index), LinearDesc{{index}});
}

BooleanFunction BooleanFunction::linear(int arity, std::vector<int> inputs) {
  check_arity(arity);
  check_inputs(arity, inputs, true);
  std::vector<uint64_t> w(word_count(arity), 0);
  for (int v : inputs) {
    auto vw = var_words(arity, v);
    for (size_t i = 0; i < w.size(); ++i) w[i] ^= vw[i];
  }
  std::sort(inputs.begin(), inputs.end());
  return from_words(arity, std::move(w), LinearDesc{std::move(inputs)});
}

BooleanFunction BooleanFunction::majority(int arity, std::vector<int> inputs) {
  check_arity(arity);
  check_inputs(arity, inputs, false);
  const int m = static_cast<int>(inputs.size());
  const int need = (m + 1) / 2;
  uint32_t mask = 0;
  for (int v : inputs) mask |= uint32_t{1} << (v - 1);
  std::vector<uint64_t> w(word_count(arity), 0);
  const uint64_t states = uint64_t{1} << arity;
  for (uint64_t x = 0; x < states; ++x)
    if (std::popcount(uint32_t(x) & mask) >= need) w[x >> 6] |= uint64_t{1} << (x & 63);
  std::sort(inputs.begin(), inputs.end());
  return from_words(arity, std::move(w), MajorityDesc{std::move(inputs)});
}

BooleanFunction BooleanFunction::dnf(int arity, std::vector<std::vector<int>> clauses) {
  check_arity(arity);
  for (const auto& c : clauses) check_literals(arity, c);
  std::vector<uint64_t> w(word_count(arity), 0);
  for (const auto& clause : clauses) {
    std::vector<uint64_t> cw(word_count(arity), ~uint64_t{0});
    for (int lit : clause) {
      auto lw = literal_words(arity, lit);
      for (size_t i = 0; i < cw.size(); ++i) cw[i] &= lw[i];
    }
    for (size_t i = 0; i < w.size(); ++i) w[i] |= cw[i];
  }
  trim_words(arity, w);
  return from_words(arity, std::move(w), DnfDesc{std::move(clauses)});
}

BooleanFunction BooleanFunction::and_gate(int arity, std::vector<int> literals) {
  check_arity(arity);
  check_literals(arity, literals);
  std::vector<uint64_t> w(word_count(arity), ~uint64_t{0});
  for (int lit : literals) {
    auto lw = literal_words(arity, lit);
    for (size_t i = 0; i < w.size(); ++i) w[i] &= lw[i];
  }
  trim_words(arity, w);
  return from_words(arity, std::move(w), AndDesc{std::move(literals)});
}

BooleanFunction BooleanFunction::or_gate(int arity, std::vector<int> literals) {
  check_arity(arity);
  check_literals(arity, literals);
  std::vector<uint64_t> w(word_count(arity), 0);
  for (int lit : literals) {
    auto lw = literal_words(arity, lit);
    for (size_t i = 0; i < w.size(); ++i) w[i] |= lw[i];
  }
  return from_words(arity, std::move(w), OrDesc{std::move(literals)});
}

bool BooleanFunction::eval(uint64_t state) const {
  if (state >= state_count())
    throw parameter_error("state out of range for arity " + std::to_string(arity_));
  return (words_[state >> 6] >> (state & 63)) & 1;
}

bool BooleanFunction::depends_on(int var) const {
  check_var(arity_, var);
  const int p = var - 1;
  if (p < 6) {
    const uint64_t lo = ~kProjection[p] & table_mask(arity_);
    const int d = 1 << p;
    for (uint64_t w : words_)
      if (((w ^ (w >> d)) & lo) != 0) return true;
  } else {
    const size_t stride = size_t{1} << (p - 6);
    for (size_t w = 0; w < words_.size(); ++w)
      if (!((w >> (p - 6)) & 1) && words_[w] != words_[w + stride]) return true;
  }
  return false;
}

bool BooleanFunction::is_constant() const {
  if (words_[0] != 0 && words_[0] != table_mask(arity_)) return false;
  for (size_t i = 1; i < words_.size(); ++i)
    if (words_[i] != words_[0]) return false;
  return true;
}

std::string BooleanFunction::table_hex() const {
  const uint64_t states = state_count();
  const size_t digits = static_cast<size_t>((states + 3) / 4);
  std::string s(digits, '0');
  for (size_t i = 0; i < digits; ++i) {
    const int v = static_cast<int>((words_[(4 * i) >> 6] >> ((4 * i) & 63)) & 0xf);
    s[i] = v < 10 ? char('0' + v) : char('a' + v - 10);
  }
  return s;
}

namespace {

struct DescriptorRemap {
  std::span<const int> map;
  Descriptor operator()(const std::monostate&) const { return std::monostate{}; }
  Descriptor operator()(const LinearDesc& d) const {
    LinearDesc out;
    for (int v : d.inputs) out.inputs.push_back(map[v - 1]);
    std::sort(out.inputs.begin(), out.inputs.end());
    return out;
  }
  Descriptor operator()(const MajorityDesc& d) const {
    MajorityDesc out;
    for (int v : d.inputs) out.inputs.push_back(map[v - 1]);
    std::sort(out.inputs.begin(), out.inputs.end());
    return out;
  }
  std::vector<int> lits(const std::vector<int>& in) const {
    std::vector<int> out;
    for (int lit : in)
      out.push_back(lit < 0 ? -map[-lit - 1] : map[lit - 1]);
    return out;
  }
  Descriptor operator()(const DnfDesc& d) const {
    DnfDesc out;
    for (const auto& c : d.clauses) out.clauses.push_back(lits(c));
    return out;
  }
  Descriptor operator()(const AndDesc& d) const { return AndDesc{lits(d.literals)}; }
  Descriptor operator()(const OrDesc& d) const { return OrDesc{lits(d.literals)}; }
};

} // namespace

BooleanFunction BooleanFunction::remap(int new_arity, std::span<const int> var_map) const {
  check_arity(new_arity);
  if (var_map.size() != static_cast<size_t>(arity_))
    throw parameter_error("variable map must list every old variable once");
  std::set<int> targets;
  for (int v : var_map) {
    check_var(new_arity, v);
    if (!targets.insert(v).second)
      throw parameter_error("variable map is not injective");
  }

  Descriptor desc = std::visit(DescriptorRemap{var_map}, desc_);

  bool identity_prefix = true;
  for (int j = 0; j < arity_; ++j)
    if (var_map[j] != j + 1) { identity_prefix = false; break; }

  std::vector<uint64_t> w(word_count(new_arity), 0);
  if (identity_prefix) {
    // The new variables sit above the old ones, so the table is the old one
    // repeated 2^(new-old) times.
    if (arity_ >= 6) {
      for (size_t i = 0; i < w.size(); ++i) w[i] = words_[i & (words_.size() - 1)];
    } else {
      uint64_t pattern = words_[0];
      for (int b = 1 << arity_; b < 64; b *= 2) pattern |= pattern << b;
      for (auto& x : w) x = pattern;
    }
  } else {
    const uint64_t states = uint64_t{1} << new_arity;
    for (uint64_t y = 0; y < states; ++y) {
      uint64_t x = 0;
      for (int j = 0; j < arity_; ++j)
        x |= ((y >> (var_map[j] - 1)) & 1) << j;
      if ((words_[x >> 6] >> (x & 63)) & 1) w[y >> 6] |= uint64_t{1} << (y & 63);
    }
  }
  trim_words(new_arity, w);
  return from_words(new_arity, std::move(w), std::move(desc));
}

UnateProfile unate_profile(const BooleanFunction& f) {
  const int n = f.arity();
  const auto& t = f.words();
  UnateProfile prof;
  prof.trend.resize(n);
  for (int var = 1; var <= n; ++var) {
    const int p = var - 1;
    bool inc_viol = false, dec_viol = false;
    if (p < 6) {
      const uint64_t lo = ~kProjection[p] & table_mask(n);
      const int d = 1 << p;
      for (uint64_t w : t) {
        const uint64_t w0 = w & lo;          // states with the variable at 0
        const uint64_t w1 = (w >> d) & lo;   // their partners, shifted down
        if (w0 & ~w1) inc_viol = true;
        if (w1 & ~w0) dec_viol = true;
        if (inc_viol && dec_viol) break;
      }
    } else {
      const size_t stride = size_t{1} << (p - 6);
      for (size_t w = 0; w < t.size() && !(inc_viol && dec_viol); ++w) {
        if ((w >> (p - 6)) & 1) continue;
        if (t[w] & ~t[w + stride]) inc_viol = true;
        if (~t[w] & t[w + stride]) dec_viol = true;
      }
    }
    prof.trend[p] = inc_viol ? (dec_viol ? VarTrend::neither : VarTrend::decreasing)
                             : (dec_viol ? VarTrend::increasing : VarTrend::both);
  }
  return prof;
}

bool is_unate(const BooleanFunction& f) { return unate_profile(f).unate(); }
bool is_monotone(const BooleanFunction& f) { return unate_profile(f).monotone(); }

int ic_index(const BooleanFunction& f, CanalizingWitness* witness) {
  const int n = f.arity();
  if (f.is_constant()) {
    if (witness) *witness = CanalizingWitness{{}, 0, f.eval(0)};
    return 0;
  }
  const uint64_t states = f.state_count();
  const auto& tw = f.words();
  std::vector<int> idx(n);
  for (int k = 1; k <= n; ++k) {
    // Combinations of k variables in lexicographic order.
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
      const uint32_t groups = uint32_t{1} << k;
      // For every assignment to the chosen variables, track whether the
      // restriction of f is still all-zero or all-one.
      std::vector<uint8_t> seen0(groups, 0), seen1(groups, 0);
      uint32_t live = groups;
      for (uint64_t x = 0; x < states && live > 0; ++x) {
        uint32_t a = 0;
        for (int l = 0; l < k; ++l)
          a |= uint32_t((x >> (idx[l] - 1)) & 1) << (k - 1 - l);
        const bool v = (tw[x >> 6] >> (x & 63)) & 1;
        uint8_t& hit = v ? seen1[a] : seen0[a];
        if (!hit) {
          hit = 1;
          if (seen0[a] && seen1[a]) --live;
        }
      }
      if (live > 0) {
        for (uint32_t a = 0; a < groups; ++a) {
          if (seen0[a] && seen1[a]) continue;
          if (witness)
            *witness = CanalizingWitness{std::vector<int>(idx.begin(), idx.begin() + k),
                                         a, seen1[a] != 0};
          return k;
        }
      }
      // Advance the combination.
      int i = k - 1;
      while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // Unreachable: fixing all n variables always forces the value.
  throw error("ic_index failed to terminate");
}

int xi_value(const BooleanFunction& f) {
  const UnateProfile prof = unate_profile(f);
  if (!prof.unate())
    throw parameter_error("xi_value requires a unate function");
  const int n = f.arity();
  uint32_t plus = 0, minus = 0;
  for (int i = 0; i < n; ++i) {
    if (prof.trend[i] == VarTrend::decreasing) minus |= uint32_t{1} << i;
    else plus |= uint32_t{1} << i; // increasing and vacuous count as positive
  }
  int best_one = -1, best_zero = -1;
  const uint64_t states = f.state_count();
  const auto& tw = f.words();
  for (uint64_t x = 0; x < states; ++x) {
    const int w = std::popcount(uint32_t(x) & plus) + std::popcount(~uint32_t(x) & minus);
    if ((tw[x >> 6] >> (x & 63)) & 1) best_one = std::max(best_one, n - w);
    else best_zero = std::max(best_zero, w);
  }
  return std::max(best_one, best_zero);
}

std::optional<uint64_t> find_increase_violation(const BooleanFunction& f, int var) {
  check_var(f.arity(), var);
  const int p = var - 1;
  const auto& t = f.words();
  if (p < 6) {
    const uint64_t lo = ~kProjection[p] & table_mask(f.arity());
    const int d = 1 << p;
    for (size_t w = 0; w < t.size(); ++w) {
      const uint64_t viol = t[w] & lo & ~(t[w] >> d);
      if (viol) return (uint64_t(w) << 6) + std::countr_zero(viol);
    }
  } else {
    const size_t stride = size_t{1} << (p - 6);
    for (size_t w = 0; w < t.size(); ++w) {
      if ((w >> (p - 6)) & 1) continue;
      const uint64_t viol = t[w] & ~t[w + stride];
      if (viol) return (uint64_t(w) << 6) + std::countr_zero(viol);
    }
  }
  return std::nullopt;
}

} // namespace boolnet
