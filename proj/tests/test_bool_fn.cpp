#include <doctest.h>

#include <algorithm>
#include <random>

#include "boolnet/bool_fn.hpp"
#include "boolnet/config.hpp"
#include "boolnet/errors.hpp"
#include "oracles.hpp"

using namespace boolnet;

namespace {

// Evaluates a witness claim directly: with the witness variables pinned to the
// witness assignment, the function must be constant and equal to the witness value.
bool witness_forces(const BooleanFunction& f, const CanalizingWitness& w) {
  const int n = f.arity();
  const int k = static_cast<int>(w.vars.size());
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    bool match = true;
    for (int l = 0; l < k; ++l) {
      const bool want = ((w.assignment >> (k - 1 - l)) & 1) != 0;
      const bool got = ((x >> (w.vars[l] - 1)) & 1) != 0;
      if (got != want) { match = false; break; }
    }
    if (match && f.eval(x) != w.value) return false;
  }
  return true;
}

} // namespace

TEST_SUITE("bool_fn") {

TEST_CASE("gate factories evaluate correctly") {
  auto and3 = BooleanFunction::and_gate(3, {1, 2, 3});
  CHECK(and3.eval(0b111));
  CHECK_FALSE(and3.eval(0b011));
  CHECK_FALSE(and3.eval(0));

  auto maj3 = BooleanFunction::majority(3, {1, 2, 3});
  CHECK(maj3.eval(0b011)); // x1=1, x2=1, x3=0
  CHECK_FALSE(maj3.eval(0b100));
  CHECK(maj3.eval(0b111));

  auto lin = BooleanFunction::linear(3, {1, 2});
  CHECK_FALSE(lin.eval(0b011)); // x1 xor x2 at x1=1, x2=1
  CHECK(lin.eval(0b001));
  CHECK(lin.eval(0b110)); // x1=0, x2=1

  auto or3 = BooleanFunction::or_gate(3, {1, -2, 3});
  CHECK(or3.eval(0b000)); // -x2 satisfied
  CHECK_FALSE(or3.eval(0b010));
}

TEST_CASE("constants and projections") {
  auto zero = BooleanFunction::constant(3, false);
  auto one = BooleanFunction::constant(3, true);
  for (uint64_t x = 0; x < 8; ++x) {
    CHECK_FALSE(zero.eval(x));
    CHECK(one.eval(x));
  }
  CHECK(zero.is_constant());
  CHECK(one.is_constant());

  auto p2 = BooleanFunction::var(4, 2);
  for (uint64_t x = 0; x < 16; ++x)
    CHECK(p2.eval(x) == (((x >> 1) & 1) != 0));
}

TEST_CASE("dnf semantics with signed literals") {
  // (x1 and not x3) or (x2)
  auto f = BooleanFunction::dnf(3, {{1, -3}, {2}});
  for (uint64_t x = 0; x < 8; ++x) {
    const bool x1 = (x & 1) != 0, x2 = (x & 2) != 0, x3 = (x & 4) != 0;
    CHECK(f.eval(x) == ((x1 && !x3) || x2));
  }
  CHECK_THROWS_AS(BooleanFunction::dnf(3, {{0}}), parameter_error);
  CHECK_THROWS_AS(BooleanFunction::dnf(3, {{4}}), parameter_error);
  CHECK_THROWS_AS(BooleanFunction::dnf(3, {{-4}}), parameter_error);
  // An empty clause is an always-true conjunction.
  auto t = BooleanFunction::dnf(2, {{}});
  CHECK(t.is_constant());
  CHECK(t.eval(0));
}

TEST_CASE("factory argument validation") {
  CHECK_THROWS_AS(BooleanFunction::majority(3, {1, 1, 2}), parameter_error);
  CHECK_THROWS_AS(BooleanFunction::linear(3, {0}), parameter_error);
  CHECK_THROWS_AS(BooleanFunction::var(3, 4), parameter_error);
  CHECK_THROWS_AS(BooleanFunction::constant(0, false), parameter_error);
  // An even input count is allowed; the threshold (m+1)/2 is 1 for two inputs.
  auto even = BooleanFunction::majority(3, {1, 2});
  CHECK(even.eval(0b001));
  CHECK(even.eval(0b010));
  CHECK_FALSE(even.eval(0b100));
  // Clashing literals are allowed and collapse to a constant.
  auto clash = BooleanFunction::and_gate(2, {1, -1});
  CHECK(clash.is_constant());
  CHECK_FALSE(clash.eval(0));
}

TEST_CASE("hex round trip") {
  std::mt19937_64 rng(11);
  for (int arity = 1; arity <= 8; ++arity) {
    for (int trial = 0; trial < 20; ++trial) {
      auto f = oracle::random_function(rng, arity);
      auto g = BooleanFunction::from_hex(arity, f.table_hex());
      CHECK(g.words() == f.words());
      CHECK(g.arity() == arity);
    }
  }
  CHECK_THROWS_AS(BooleanFunction::from_hex(3, "f"), parse_error);
  CHECK_THROWS_AS(BooleanFunction::from_hex(3, "zz"), parse_error);
  CHECK_THROWS_AS(BooleanFunction::from_hex(1, "4"), parse_error);
}

TEST_CASE("from_words validates shape") {
  CHECK_THROWS_AS(BooleanFunction::from_words(3, {1, 2}), parameter_error);
  CHECK_THROWS_AS(BooleanFunction::from_words(7, {0}), parameter_error);
  auto f = BooleanFunction::from_words(2, {0b0110});
  CHECK(f.eval(1));
  CHECK_FALSE(f.eval(3));
}

TEST_CASE("depends_on") {
  auto f = BooleanFunction::dnf(4, {{4}, {-1, -2, -3}});
  for (int v = 1; v <= 4; ++v) CHECK(f.depends_on(v));

  auto g = BooleanFunction::linear(3, {1, 3});
  CHECK(g.depends_on(1));
  CHECK_FALSE(g.depends_on(2));
  CHECK(g.depends_on(3));

  auto zero = BooleanFunction::constant(3, false);
  for (int v = 1; v <= 3; ++v) CHECK_FALSE(zero.depends_on(v));
  CHECK_THROWS_AS(zero.depends_on(4), parameter_error);
}

TEST_CASE("unate profile examples") {
  auto and3 = BooleanFunction::and_gate(3, {1, 2, 3});
  auto p = unate_profile(and3);
  for (auto t : p.trend) CHECK(t == VarTrend::increasing);
  CHECK(p.unate());
  CHECK(p.monotone());

  auto h = BooleanFunction::dnf(2, {{-1, 2}});
  auto ph = unate_profile(h);
  CHECK(ph.trend[0] == VarTrend::decreasing);
  CHECK(ph.trend[1] == VarTrend::increasing);
  CHECK(ph.unate());
  CHECK_FALSE(ph.monotone());

  auto x2 = BooleanFunction::linear(2, {1, 2});
  auto px = unate_profile(x2);
  CHECK(px.trend[0] == VarTrend::neither);
  CHECK(px.trend[1] == VarTrend::neither);
  CHECK_FALSE(px.unate());

  auto zero = BooleanFunction::constant(2, false);
  auto pz = unate_profile(zero);
  CHECK(pz.trend[0] == VarTrend::both);
  CHECK(pz.trend[1] == VarTrend::both);
  CHECK(pz.monotone());
}

TEST_CASE("unate profile matches the direct definition") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 6);
    auto f = oracle::random_function(rng, arity);
    auto p = unate_profile(f);
    for (int v = 1; v <= arity; ++v) {
      const bool inc = oracle::increasing_in_naive(f, v);
      const bool dec = oracle::decreasing_in_naive(f, v);
      VarTrend want = VarTrend::neither;
      if (inc && dec) want = VarTrend::both;
      else if (inc) want = VarTrend::increasing;
      else if (dec) want = VarTrend::decreasing;
      CHECK(p.trend[v - 1] == want);
    }
    CHECK(is_unate(f) == oracle::unate_naive(f));
    CHECK(is_monotone(f) == oracle::monotone_naive(f));
  }
}

TEST_CASE("monotone examples") {
  CHECK(is_monotone(BooleanFunction::majority(5, {1, 2, 3, 4, 5})));
  CHECK(is_monotone(BooleanFunction::constant(4, true)));
  CHECK_FALSE(is_monotone(BooleanFunction::linear(3, {1, 2, 3})));
  CHECK(is_monotone(BooleanFunction::dnf(3, {{1, 2}, {3}})));
}

TEST_CASE("monotone implies unate") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int arity = 2 + static_cast<int>(rng() % 5);
    std::vector<int> vars(arity);
    for (int i = 0; i < arity; ++i) vars[i] = i + 1;
    auto f = oracle::random_monotone_function(rng, arity, vars);
    REQUIRE(is_monotone(f));
    CHECK(is_unate(f));
  }
}

TEST_CASE("profile is stable under variable relabeling") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int arity = 2 + static_cast<int>(rng() % 4);
    auto f = oracle::random_function(rng, arity);
    std::vector<int> perm(arity);
    for (int i = 0; i < arity; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto g = f.remap(arity, perm);
    auto pf = unate_profile(f);
    auto pg = unate_profile(g);
    for (int i = 0; i < arity; ++i)
      CHECK(pg.trend[perm[i] - 1] == pf.trend[i]);
    CHECK(ic_index(f) == ic_index(g));
  }
}

TEST_CASE("ic_index examples") {
  CHECK(ic_index(BooleanFunction::and_gate(4, {1, 2, 3, 4})) == 1);
  CHECK(ic_index(BooleanFunction::or_gate(4, {1, -2, 3, 4})) == 1);
  CHECK(ic_index(BooleanFunction::majority(5, {1, 2, 3, 4, 5})) == 3);
  CHECK(ic_index(BooleanFunction::linear(3, {1, 2, 3})) == 3);
  CHECK(ic_index(BooleanFunction::constant(3, false)) == 0);
  CHECK(ic_index(BooleanFunction::constant(1, true)) == 0);
}

TEST_CASE("ic_index equals the brute force value") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 5);
    auto f = oracle::random_function(rng, arity);
    CHECK(ic_index(f) == oracle::ic_index_naive(f));
  }
}

TEST_CASE("ic_index bounds and witness") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 6);
    auto f = oracle::random_function(rng, arity);
    CanalizingWitness w;
    const int k = ic_index(f, &w);
    CHECK(k >= 0);
    CHECK(k <= arity);
    CHECK((k == 0) == f.is_constant());
    if (k > 0) {
      CHECK(static_cast<int>(w.vars.size()) == k);
      CHECK(std::is_sorted(w.vars.begin(), w.vars.end()));
      CHECK(witness_forces(f, w));
      CHECK(static_cast<int>(w.assignment_string().size()) == k);
    }
  }
}

TEST_CASE("ic witness is the lexicographically first one") {
  // Maj_3 is canalized by any two equal inputs; {1,2} with assignment 00 comes first.
  CanalizingWitness w;
  CHECK(ic_index(BooleanFunction::majority(3, {1, 2, 3}), &w) == 2);
  CHECK(w.vars == std::vector<int>{1, 2});
  CHECK(w.assignment_string() == "00");
  CHECK(w.value == false);
}

TEST_CASE("ic_index is at most the shortest dnf clause") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int arity = 2 + static_cast<int>(rng() % 4);
    std::vector<std::vector<int>> clauses;
    const int nclauses = 1 + static_cast<int>(rng() % 3);
    size_t shortest = 100;
    for (int c = 0; c < nclauses; ++c) {
      std::vector<int> clause;
      for (int v = 1; v <= arity; ++v)
        if (rng() % 2) clause.push_back((rng() % 2) ? v : -v);
      if (clause.empty()) clause.push_back(1);
      shortest = std::min(shortest, clause.size());
      clauses.push_back(std::move(clause));
    }
    auto f = BooleanFunction::dnf(arity, clauses);
    // Setting one clause true canalizes f to 1, so ic never exceeds the
    // shortest clause. It can be strictly smaller.
    CHECK(ic_index(f) <= static_cast<int>(shortest));
  }
}

TEST_CASE("xi_value examples") {
  CHECK(xi_value(BooleanFunction::majority(3, {1, 2, 3})) == 1);
  CHECK(xi_value(BooleanFunction::and_gate(3, {1, 2, 3})) == 2);
  CHECK(xi_value(BooleanFunction::or_gate(3, {1, 2, 3})) == 2);
  CHECK_THROWS_AS(xi_value(BooleanFunction::linear(2, {1, 2})), parameter_error);
}

TEST_CASE("xi_value matches the brute force value on unate functions") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 6);
    auto f = oracle::random_unate_function(rng, arity);
    REQUIRE(is_unate(f));
    CHECK(xi_value(f) == oracle::xi_naive(f));
  }
}

TEST_CASE("unate bounds on ic and xi") {
  // Exhaustive over every unate function of arity at most 3, sampled above that.
  for (int arity = 1; arity <= 3; ++arity) {
    const uint64_t tables = uint64_t{1} << (1 << arity);
    for (uint64_t t = 0; t < tables; ++t) {
      auto f = BooleanFunction::from_words(arity, {t});
      if (!oracle::unate_naive(f)) continue;
      CHECK(ic_index(f) <= (arity + 1) / 2);
      CHECK(xi_value(f) >= arity / 2);
    }
  }
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int arity = 4 + static_cast<int>(rng() % 3);
    auto f = oracle::random_unate_function(rng, arity);
    CHECK(ic_index(f) <= (arity + 1) / 2);
    CHECK(xi_value(f) >= arity / 2);
  }
}

TEST_CASE("majority meets the xi floor") {
  CHECK(xi_value(BooleanFunction::majority(3, {1, 2, 3})) == 3 / 2);
  CHECK(xi_value(BooleanFunction::majority(5, {1, 2, 3, 4, 5})) == 5 / 2);
  CHECK(ic_index(BooleanFunction::majority(5, {1, 2, 3, 4, 5})) == (5 + 1) / 2);
}

TEST_CASE("find_increase_violation") {
  auto notx1 = BooleanFunction::dnf(2, {{-1}});
  auto v = find_increase_violation(notx1, 1);
  REQUIRE(v.has_value());
  CHECK(notx1.eval(*v));
  CHECK_FALSE(notx1.eval(*v | 1));
  CHECK(((*v >> 0) & 1) == 0);
  CHECK_FALSE(find_increase_violation(notx1, 2).has_value());

  auto maj = BooleanFunction::majority(3, {1, 2, 3});
  for (int var = 1; var <= 3; ++var)
    CHECK_FALSE(find_increase_violation(maj, var).has_value());
  CHECK_THROWS_AS(find_increase_violation(maj, 0), parameter_error);
}

TEST_CASE("find_increase_violation agrees with the trend") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 150; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 5);
    auto f = oracle::random_function(rng, arity);
    for (int var = 1; var <= arity; ++var) {
      auto v = find_increase_violation(f, var);
      CHECK(v.has_value() == !oracle::increasing_in_naive(f, var));
      if (v) {
        CHECK(((*v >> (var - 1)) & 1) == 0);
        CHECK(f.eval(*v));
        CHECK_FALSE(f.eval(*v | (uint64_t{1} << (var - 1))));
      }
    }
  }
}

TEST_CASE("remap widens and permutes") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int arity = 1 + static_cast<int>(rng() % 4);
    const int wide = arity + static_cast<int>(rng() % 3);
    auto f = oracle::random_function(rng, arity);
    std::vector<int> pool(wide);
    for (int i = 0; i < wide; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> map(pool.begin(), pool.begin() + arity);
    auto g = f.remap(wide, map);
    CHECK(g.arity() == wide);
    for (uint64_t y = 0; y < (uint64_t{1} << wide); ++y) {
      uint64_t x = 0;
      for (int j = 0; j < arity; ++j)
        if ((y >> (map[j] - 1)) & 1) x |= uint64_t{1} << j;
      CHECK(g.eval(y) == f.eval(x));
    }
  }
  auto f = BooleanFunction::var(2, 1);
  const std::vector<int> repeated{1, 1};
  const std::vector<int> too_wide{1, 2};
  CHECK_THROWS_AS(f.remap(3, repeated), parameter_error);
  CHECK_THROWS_AS(f.remap(1, too_wide), parameter_error);
}

TEST_CASE("arity cap is enforced and adjustable") {
  const int old_cap = arity_cap();
  CHECK(old_cap == 26);
  CHECK_THROWS_AS(BooleanFunction::constant(old_cap + 1, false), limit_error);
  set_arity_cap(5);
  CHECK_THROWS_AS(BooleanFunction::constant(6, false), limit_error);
  CHECK(BooleanFunction::constant(5, false).arity() == 5);
  set_arity_cap(old_cap);
  CHECK_THROWS_AS(set_arity_cap(0), parameter_error);
  CHECK_THROWS_AS(set_arity_cap(29), parameter_error);
  set_arity_cap(28);
  set_arity_cap(old_cap);
}

} // TEST_SUITE
