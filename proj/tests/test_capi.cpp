#include <doctest.h>

#include <cstring>
#include <string>

#include "boolnet.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  bn_string_free(s);
  return out;
}

} // namespace

TEST_SUITE("capi") {

TEST_CASE("identity network end to end") {
  bn_network* net = nullptr;
  REQUIRE(bn_network_identity(3, &net) == BN_OK);
  CHECK(bn_network_size(net) == 3);

  uint64_t next = 99;
  CHECK(bn_network_step(net, 5, &next) == BN_OK);
  CHECK(next == 5);

  bn_rows* fp = nullptr;
  REQUIRE(bn_network_fixed_points(net, &fp) == BN_OK);
  CHECK(bn_rows_size(fp) == 8);
  CHECK(bn_rows_width(fp) == 3);
  uint32_t row = 7;
  CHECK(bn_rows_get(fp, 0, &row) == BN_OK);
  CHECK(row == 0);
  CHECK(bn_rows_get(fp, 8, &row) == BN_E_PARAM);

  int indep = -1;
  CHECK(bn_network_independence(net, &indep) == BN_OK);
  CHECK(indep == 3);

  bn_rows_free(fp);
  bn_network_free(net);
}

TEST_CASE("json round trip") {
  bn_network* net = nullptr;
  REQUIRE(bn_construct_sk(4, 2, 1, &net) == BN_OK);
  char* text = nullptr;
  REQUIRE(bn_network_to_json(net, &text) == BN_OK);
  const std::string doc = take(text);
  CHECK(doc.find("\"truth_table\"") != std::string::npos);
  CHECK(doc.back() == '\n');

  bn_network* back = nullptr;
  REQUIRE(bn_network_from_json(doc.c_str(), &back) == BN_OK);
  CHECK(bn_network_size(back) == 4);
  int indep = -1;
  CHECK(bn_network_independence(back, &indep) == BN_OK);
  CHECK(indep == 2);
  bn_network_free(back);
  bn_network_free(net);
}

TEST_CASE("error reporting") {
  bn_network* net = nullptr;
  CHECK(bn_network_from_json("{ not json", &net) == BN_E_PARSE);
  CHECK(net == nullptr);
  CHECK(std::strlen(bn_last_error()) > 0);

  CHECK(bn_construct_sk(4, 5, 0, &net) == BN_E_PARAM);
  const std::string msg = bn_last_error();
  CHECK(msg.find("sk_network") != std::string::npos);

  CHECK(bn_network_identity(0, &net) == BN_E_PARAM);
  CHECK(bn_network_identity(3, nullptr) == BN_E_PARAM);
  CHECK(bn_network_step(nullptr, 0, nullptr) == BN_E_PARAM);

  int indep = 0;
  CHECK(bn_network_independence(nullptr, &indep) == BN_E_PARAM);
}

TEST_CASE("arity cap") {
  CHECK(bn_arity_cap() == 26);
  CHECK(bn_set_arity_cap(40) == BN_E_PARAM);
  CHECK(bn_set_arity_cap(5) == BN_OK);
  bn_network* net = nullptr;
  CHECK(bn_network_identity(6, &net) == BN_E_LIMIT);
  CHECK(bn_network_identity(5, &net) == BN_OK);
  bn_network_free(net);
  CHECK(bn_set_arity_cap(26) == BN_OK);
}

TEST_CASE("node queries") {
  bn_network* net = nullptr;
  bn_design* d = nullptr;
  REQUIRE(bn_design_fano(&d) == BN_OK);
  REQUIRE(bn_construct_steiner_monotone(d, 1, &net) == BN_OK);

  for (int i = 1; i <= 7; ++i) {
    int ic = -1, monotone = 0, unate = 0;
    CHECK(bn_network_node_ic(net, i, &ic) == BN_OK);
    CHECK(ic == 2);
    CHECK(bn_network_node_flags(net, i, &monotone, &unate) == BN_OK);
    CHECK(monotone == 1);
    CHECK(unate == 1);
  }
  int ic = -1;
  CHECK(bn_network_node_ic(net, 8, &ic) == BN_E_PARAM);
  CHECK(bn_network_node_ic(net, 0, &ic) == BN_E_PARAM);

  bn_network_free(net);
  bn_design_free(d);
}

TEST_CASE("feedback bound over the capi") {
  bn_graph* g = nullptr;
  REQUIRE(bn_graph_complete(5, &g) == BN_OK);
  bn_network* net = nullptr;
  REQUIRE(bn_construct_linear(g, 1, &net) == BN_OK);

  uint64_t fp_count = 0;
  int tau = -1, holds = 0;
  REQUIRE(bn_network_feedback_bound(net, &fp_count, &tau, &holds) == BN_OK);
  CHECK(fp_count == 16);
  CHECK(tau == 4);
  CHECK(holds == 1);

  bn_network_free(net);
  bn_graph_free(g);
}

TEST_CASE("graph handles") {
  bn_graph* g = nullptr;
  REQUIRE(bn_graph_new(3, &g) == BN_OK);
  CHECK(bn_graph_size(g) == 3);
  CHECK(bn_graph_add_arc(g, 1, 2) == BN_OK);
  CHECK(bn_graph_add_arc(g, 2, 1) == BN_OK);
  CHECK(bn_graph_add_arc(g, 9, 1) == BN_E_PARAM);
  CHECK(bn_graph_has_arc(g, 1, 2) == 1);
  CHECK(bn_graph_has_arc(g, 1, 3) == 0);
  CHECK(bn_graph_has_arc(nullptr, 1, 2) == 0);

  char* dot = nullptr;
  REQUIRE(bn_graph_to_dot(g, &dot) == BN_OK);
  const std::string text = take(dot);
  bn_graph* back = nullptr;
  REQUIRE(bn_graph_from_dot(text.c_str(), &back) == BN_OK);
  CHECK(bn_graph_size(back) == 3);
  CHECK(bn_graph_has_arc(back, 2, 1) == 1);
  bn_graph_free(back);

  CHECK(bn_graph_from_dot("nonsense", &back) == BN_E_PARSE);

  int min_in = -1, loops = -1, sc = -1;
  REQUIRE(bn_graph_metrics(g, &min_in, &loops, &sc) == BN_OK);
  CHECK(min_in == 0);
  CHECK(loops == 0);
  CHECK(sc == 0);
  bn_graph_free(g);
}

TEST_CASE("feedback witness buffers") {
  bn_graph* g = nullptr;
  REQUIRE(bn_graph_complete(4, &g) == BN_OK);

  int tau = -1;
  int32_t witness[8] = {0};
  size_t len = 0;
  REQUIRE(bn_graph_feedback(g, &tau, witness, 8, &len) == BN_OK);
  CHECK(tau == 3);
  CHECK(len == 3);
  CHECK(witness[0] == 1);
  CHECK(witness[1] == 2);
  CHECK(witness[2] == 3);

  // A short buffer still reports the true length.
  int32_t two[2] = {0};
  len = 0;
  REQUIRE(bn_graph_feedback(g, &tau, two, 2, &len) == BN_OK);
  CHECK(len == 3);
  CHECK(two[0] == 1);
  CHECK(two[1] == 2);

  REQUIRE(bn_graph_feedback(g, &tau, nullptr, 0, &len) == BN_OK);
  CHECK(len == 3);
  bn_graph_free(g);

  REQUIRE(bn_graph_new(21, &g) == BN_OK);
  CHECK(bn_graph_feedback(g, &tau, nullptr, 0, &len) == BN_E_LIMIT);
  bn_graph_free(g);
}

TEST_CASE("admissibility over the capi") {
  bn_graph* g = nullptr;
  REQUIRE(bn_graph_complete_bipartite(4, 2, &g) == BN_OK);
  int rejected = -1, tau = -1, min_in = -1;
  int64_t can_lo = -1;
  char* reasons = nullptr;
  REQUIRE(bn_graph_admissible(g, 2, &rejected, &tau, &min_in, &can_lo, &reasons) ==
          BN_OK);
  CHECK(rejected == 1);
  CHECK(tau == 2);
  CHECK(min_in == 2);
  CHECK(can_lo > 4);
  CHECK(take(reasons).find("2^tau") != std::string::npos);
  bn_graph_free(g);

  REQUIRE(bn_graph_complete(6, &g) == BN_OK);
  REQUIRE(bn_graph_admissible(g, 5, &rejected, &tau, &min_in, &can_lo, &reasons) ==
          BN_OK);
  CHECK(rejected == 0);
  CHECK(take(reasons).find("one-sided") != std::string::npos);
  bn_graph_free(g);
}

TEST_CASE("rows and strength") {
  bn_rows* rows = nullptr;
  REQUIRE(bn_rows_from_text("0000\n1011\n0111\n1101\n1110\n", &rows) == BN_OK);
  CHECK(bn_rows_size(rows) == 5);
  CHECK(bn_rows_width(rows) == 4);

  int s = -2;
  CHECK(bn_rows_strength(rows, &s) == BN_OK);
  CHECK(s == 2);

  int found = -1;
  int32_t indices[4] = {0};
  uint32_t pattern = 9;
  REQUIRE(bn_rows_find_uncovered(rows, 3, &found, indices, 4, &pattern) == BN_OK);
  CHECK(found == 1);
  CHECK(indices[0] == 1);
  CHECK(indices[1] == 2);
  CHECK(indices[2] == 3);
  CHECK(pattern == 1); // 001

  REQUIRE(bn_rows_find_uncovered(rows, 2, &found, indices, 4, &pattern) == BN_OK);
  CHECK(found == 0);
  CHECK(bn_rows_find_uncovered(rows, 0, &found, indices, 4, &pattern) == BN_E_PARAM);
  CHECK(bn_rows_find_uncovered(rows, 5, &found, indices, 4, &pattern) == BN_E_PARAM);

  char* text = nullptr;
  REQUIRE(bn_rows_to_text(rows, &text) == BN_OK);
  CHECK(take(text) == "0000\n1110\n1101\n1011\n0111\n");
  bn_rows_free(rows);

  CHECK(bn_rows_from_text("01\n011\n", &rows) == BN_E_PARSE);

  REQUIRE(bn_rows_from_text("", &rows) == BN_OK);
  int es = 5;
  CHECK(bn_rows_strength(rows, &es) == BN_OK);
  CHECK(es == -1);
  bn_rows_free(rows);
}

TEST_CASE("can bounds") {
  int known = -1;
  int64_t lo = 0, hi = 0;
  REQUIRE(bn_can_lookup(6, 3, &known, &lo, &hi) == BN_OK);
  CHECK(known == 1);
  CHECK(lo == 12);
  CHECK(hi == 12);

  REQUIRE(bn_can_lookup(20, 7, &known, &lo, &hi) == BN_OK);
  CHECK(known == 0);
  CHECK(bn_can_lookup(2, 3, &known, &lo, &hi) == BN_E_PARAM);

  int found = -1, value = -1;
  REQUIRE(bn_can_search(4, 2, 16, &found, &value) == BN_OK);
  CHECK(found == 1);
  CHECK(value == 5);
  REQUIRE(bn_can_search(4, 2, 4, &found, &value) == BN_OK);
  CHECK(found == 0);
  CHECK(bn_can_search(6, 2, 8, &found, &value) == BN_E_LIMIT);
}

TEST_CASE("designs") {
  bn_design* d = nullptr;
  REQUIRE(bn_design_sts(9, &d) == BN_OK);
  CHECK(bn_design_points(d) == 9);
  CHECK(bn_design_block_size(d) == 3);
  CHECK(bn_design_strength_t(d) == 2);
  CHECK(bn_design_block_count(d) == 12);

  int ok = -1;
  char* detail = nullptr;
  REQUIRE(bn_design_verify(d, &ok, &detail) == BN_OK);
  CHECK(ok == 1);
  CHECK(take(detail) == "ok");

  int applicable = -1, strength = -1, expected = -1;
  REQUIRE(bn_design_ca_check(d, &applicable, &ok, &strength, &expected, nullptr) ==
          BN_OK);
  CHECK(applicable == 1);
  CHECK(ok == 1);
  CHECK(strength == 2);
  CHECK(expected == 2);

  char* text = nullptr;
  REQUIRE(bn_design_to_text(d, &text) == BN_OK);
  const std::string doc = take(text);
  CHECK(doc.substr(0, 6) == "9 3 2\n");
  bn_design* back = nullptr;
  REQUIRE(bn_design_from_text(doc.c_str(), &back) == BN_OK);
  CHECK(bn_design_block_count(back) == 12);
  bn_design_free(back);
  bn_design_free(d);

  CHECK(bn_design_sts(8, &d) == BN_E_PARAM);
  CHECK(bn_design_from_text("7 3\n", &d) == BN_E_PARSE);
}

TEST_CASE("verify reports failures with detail") {
  bn_design* d = nullptr;
  // The fano plane with one block repeated covers a pair twice.
  REQUIRE(bn_design_from_text("7 3 2\n1101000\n1101000\n0110100\n0011010\n"
                              "0001101\n1000110\n0100011\n1010001\n",
                              &d) == BN_OK);
  int ok = -1;
  char* detail = nullptr;
  REQUIRE(bn_design_verify(d, &ok, &detail) == BN_OK);
  CHECK(ok == 0);
  const std::string msg = take(detail);
  CHECK(msg.find("lies in 2 blocks") != std::string::npos);
  bn_design_free(d);
}

TEST_CASE("constructions through the capi") {
  bn_network* net = nullptr;
  REQUIRE(bn_construct_windmill(3, 3, 1, &net) == BN_OK);
  CHECK(bn_network_size(net) == 7);
  int indep = -1;
  CHECK(bn_network_independence(net, &indep) == BN_OK);
  CHECK(indep == 2);

  bn_network* lifted = nullptr;
  REQUIRE(bn_construct_add_loop(net, 1, &lifted) == BN_OK);
  CHECK(bn_network_size(lifted) == 8);
  CHECK(bn_network_independence(lifted, &indep) == BN_OK);
  CHECK(indep == 2);
  bn_network_free(lifted);

  const bn_network* parts[2] = {net, net};
  bn_network* prod = nullptr;
  REQUIRE(bn_construct_product(parts, 2, 1, &prod) == BN_OK);
  CHECK(bn_network_size(prod) == 14);
  CHECK(bn_network_independence(prod, &indep) == BN_OK);
  CHECK(indep == 2);
  bn_network_free(prod);

  bn_network* united = nullptr;
  REQUIRE(bn_construct_strong_union(parts, 2, 1, &united) == BN_OK);
  CHECK(bn_network_size(united) == 14);
  bn_network_free(united);

  CHECK(bn_construct_product(parts, 0, 0, &prod) == BN_E_PARAM);
  CHECK(bn_construct_windmill(3, 2, 0, &net) == BN_E_PARAM);
  bn_network_free(net);
}

TEST_CASE("pivot extension error paths") {
  bn_network* id2 = nullptr;
  REQUIRE(bn_network_identity(2, &id2) == BN_OK);
  bn_network* out = nullptr;
  // Identical fixed point sets cannot feed the loopless pivot.
  CHECK(bn_construct_pivot_extend(id2, id2, 1, 0, &out) == BN_E_PARAM);
  REQUIRE(bn_construct_pivot_extend(id2, id2, 0, 1, &out) == BN_OK);
  CHECK(bn_network_size(out) == 3);
  int indep = -1;
  CHECK(bn_network_independence(out, &indep) == BN_OK);
  CHECK(indep == 3);
  bn_network_free(out);

  bn_network* id3 = nullptr;
  REQUIRE(bn_network_identity(3, &id3) == BN_OK);
  CHECK(bn_construct_pivot_extend(id2, id3, 0, 0, &out) == BN_E_PARAM);
  bn_network_free(id3);
  bn_network_free(id2);
}

TEST_CASE("null handles are parameter errors") {
  char* s = nullptr;
  CHECK(bn_network_to_json(nullptr, &s) == BN_E_PARAM);
  CHECK(bn_graph_to_dot(nullptr, &s) == BN_E_PARAM);
  CHECK(bn_rows_to_text(nullptr, &s) == BN_E_PARAM);
  CHECK(bn_design_to_text(nullptr, &s) == BN_E_PARAM);
  CHECK(bn_network_from_json(nullptr, nullptr) == BN_E_PARAM);
  CHECK(bn_rows_size(nullptr) == 0);
  CHECK(bn_design_points(nullptr) == 0);
  bn_string_free(nullptr); // must be a no-op
}

} // TEST_SUITE
