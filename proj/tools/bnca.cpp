// bnca: build, analyze and verify Boolean networks from the command line.
//
// Reports go to stdout as JSON; files are written only through explicit
// output flags. Exit codes: 0 success, 2 bad parameters, 3 a verification
// failed, 4 unreadable or malformed input.

#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolnet.h"

namespace {

using ordered_json = nlohmann::ordered_json;

int status_exit_code(bn_status st) {
  switch (st) {
    case BN_OK: return 0;
    case BN_E_PARAM:
    case BN_E_LIMIT: return 2;
    case BN_E_VERIFY: return 3;
    case BN_E_PARSE: return 4;
    default: return 1;
  }
}

[[noreturn]] void die(bn_status st) {
  std::fprintf(stderr, "bnca: %s\n", bn_last_error());
  std::exit(status_exit_code(st));
}

void check(bn_status st) {
  if (st != BN_OK) die(st);
}

[[noreturn]] void die_io(const std::string& message) {
  std::fprintf(stderr, "bnca: %s\n", message.c_str());
  std::exit(4);
}

[[noreturn]] void die_param(const std::string& message) {
  std::fprintf(stderr, "bnca: %s\n", message.c_str());
  std::exit(2);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die_io("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die_io("cannot write '" + path + "'");
  out << content;
  if (!out) die_io("failed while writing '" + path + "'");
}

template <auto Free>
struct CallFree {
  template <typename T>
  void operator()(T* p) const { Free(p); }
};
using NetPtr = std::unique_ptr<bn_network, CallFree<bn_network_free>>;
using GraphPtr = std::unique_ptr<bn_graph, CallFree<bn_graph_free>>;
using RowsPtr = std::unique_ptr<bn_rows, CallFree<bn_rows_free>>;
using DesignPtr = std::unique_ptr<bn_design, CallFree<bn_design_free>>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  bn_string_free(s);
  return out;
}

class PhaseTimer {
public:
  double take() {
    const auto now = clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

void print_report(const ordered_json& report) {
  std::cout << report.dump(2) << "\n" << std::flush;
}

NetPtr load_network(const std::string& path) {
  const std::string text = slurp(path);
  bn_network* raw = nullptr;
  check(bn_network_from_json(text.c_str(), &raw));
  return NetPtr(raw);
}

// Accepts fano, sqs8, sts:<n>, or a path to a block file.
DesignPtr load_design(const std::string& source) {
  bn_design* raw = nullptr;
  if (source == "fano") {
    check(bn_design_fano(&raw));
  } else if (source == "sqs8") {
    check(bn_design_sqs8(&raw));
  } else if (source.rfind("sts:", 0) == 0) {
    const std::string arg = source.substr(4);
    char* end = nullptr;
    const long n = std::strtol(arg.c_str(), &end, 10);
    if (arg.empty() || *end || n < 1 || n > INT_MAX)
      die_param("sts wants an integer point count, got '" + arg + "'");
    check(bn_design_sts(static_cast<int>(n), &raw));
  } else {
    const std::string text = slurp(source);
    check(bn_design_from_text(text.c_str(), &raw));
  }
  return DesignPtr(raw);
}

void emit_network(const NetPtr& net, const std::string& out_path) {
  char* text = nullptr;
  check(bn_network_to_json(net.get(), &text));
  const std::string json = take_string(text);
  if (out_path.empty())
    std::cout << json << std::flush;
  else
    spill(out_path, json);
}

std::string pattern_string(uint32_t pattern, int k) {
  std::string s;
  for (int l = 0; l < k; ++l) s += (pattern >> (k - 1 - l) & 1) ? '1' : '0';
  return s;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

void run_analyze(const std::string& path, const std::string& fp_out,
                 const std::string& dot_out, bool timing) {
  PhaseTimer timer;
  const NetPtr net = load_network(path);
  const int n = bn_network_size(net.get());
  const double t_parse = timer.take();

  bn_rows* fp_raw = nullptr;
  check(bn_network_fixed_points(net.get(), &fp_raw));
  const RowsPtr fp(fp_raw);
  const uint64_t fp_count = bn_rows_size(fp.get());
  const double t_fp = timer.take();

  int fp_strength = -1;
  check(bn_rows_strength(fp.get(), &fp_strength));
  const int independence = fp_strength < 0 ? 0 : fp_strength;
  const double t_strength = timer.take();

  ordered_json nodes = ordered_json::array();
  for (int i = 1; i <= n; ++i) {
    int ic = 0, monotone = 0, unate = 0;
    check(bn_network_node_ic(net.get(), i, &ic));
    check(bn_network_node_flags(net.get(), i, &monotone, &unate));
    nodes.push_back({{"node", i},
                     {"ic_index", ic},
                     {"monotone", monotone != 0},
                     {"unate", unate != 0}});
  }
  const double t_nodes = timer.take();

  bn_graph* graph_raw = nullptr;
  check(bn_network_graph(net.get(), &graph_raw));
  const GraphPtr graph(graph_raw);
  int min_indegree = 0, has_loops = 0, strongly = 0;
  check(bn_graph_metrics(graph.get(), &min_indegree, &has_loops, &strongly));

  int tau = -1;
  size_t witness_len = 0;
  std::vector<int32_t> witness(static_cast<size_t>(n));
  const bn_status fb = bn_graph_feedback(graph.get(), &tau, witness.data(),
                                         witness.size(), &witness_len);
  const bool have_tau = fb == BN_OK;
  if (!have_tau && fb != BN_E_LIMIT) die(fb);
  const double t_graph = timer.take();

  ordered_json report;
  report["n"] = n;
  report["fp_count"] = fp_count;
  report["independence_number"] = independence;
  report["nodes"] = nodes;
  report["graph"] = {{"min_indegree", min_indegree},
                     {"has_loops", has_loops != 0},
                     {"strongly_connected", strongly != 0}};
  if (have_tau) {
    const uint64_t bound = uint64_t{1} << tau;
    witness.resize(witness_len);
    report["feedback"] = {{"tau", tau},
                          {"witness", witness},
                          {"bound", bound},
                          {"holds", fp_count <= bound}};
  } else {
    // feedback_number refuses graphs this size; the report says so instead
    // of stalling.
    report["feedback"] = nullptr;
  }
  if (timing)
    report["timing_ms"] = {{"parse", t_parse},
                           {"fixed_points", t_fp},
                           {"strength", t_strength},
                           {"nodes", t_nodes},
                           {"graph", t_graph}};

  if (!fp_out.empty()) {
    char* text = nullptr;
    check(bn_rows_to_text(fp.get(), &text));
    spill(fp_out, take_string(text));
  }
  if (!dot_out.empty()) {
    char* text = nullptr;
    check(bn_graph_to_dot(graph.get(), &text));
    spill(dot_out, take_string(text));
  }
  print_report(report);
}

void run_strength(const std::string& path) {
  const std::string text = slurp(path);
  bn_rows* raw = nullptr;
  check(bn_rows_from_text(text.c_str(), &raw));
  const RowsPtr rows(raw);

  int s = -1;
  check(bn_rows_strength(rows.get(), &s));

  ordered_json report;
  report["rows"] = bn_rows_size(rows.get());
  report["width"] = bn_rows_width(rows.get());
  report["strength"] = s;
  if (s >= 0 && s < bn_rows_width(rows.get())) {
    const int k = s + 1;
    int found = 0;
    uint32_t pattern = 0;
    std::vector<int32_t> indices(static_cast<size_t>(k));
    check(bn_rows_find_uncovered(rows.get(), k, &found, indices.data(),
                                 indices.size(), &pattern));
    if (found)
      report["uncovered"] = {{"columns", indices},
                             {"pattern", pattern_string(pattern, k)}};
  }
  print_report(report);
}

void run_admissible(const std::string& dot_path, int complete_n,
                    const std::vector<int>& bipartite, int k) {
  bn_graph* raw = nullptr;
  const int sources = (dot_path.empty() ? 0 : 1) + (complete_n > 0 ? 1 : 0) +
                      (bipartite.empty() ? 0 : 1);
  if (sources != 1)
    die_param("pick exactly one graph source: a DOT file, --complete or --bipartite");
  if (!dot_path.empty()) {
    const std::string text = slurp(dot_path);
    check(bn_graph_from_dot(text.c_str(), &raw));
  } else if (complete_n > 0) {
    check(bn_graph_complete(complete_n, &raw));
  } else {
    check(bn_graph_complete_bipartite(bipartite[0], bipartite[1], &raw));
  }
  const GraphPtr graph(raw);

  int rejected = 0, tau = 0, min_indegree = 0;
  int64_t can_lo = 0;
  char* reasons = nullptr;
  check(bn_graph_admissible(graph.get(), k, &rejected, &tau, &min_indegree,
                            &can_lo, &reasons));

  ordered_json report;
  report["n"] = bn_graph_size(graph.get());
  report["k"] = k;
  report["verdict"] = rejected ? "rejected" : "inconclusive";
  report["tau"] = tau;
  report["min_indegree"] = min_indegree;
  report["can_lower_bound"] = can_lo;
  report["reasons"] = split_lines(take_string(reasons));
  print_report(report);
}

void run_verify_steiner(const std::string& source, bool ca_check) {
  const DesignPtr design = load_design(source);

  int ok = 0;
  char* detail = nullptr;
  check(bn_design_verify(design.get(), &ok, &detail));

  ordered_json report;
  report["source"] = source;
  report["n"] = bn_design_points(design.get());
  report["k"] = bn_design_block_size(design.get());
  report["t"] = bn_design_strength_t(design.get());
  report["blocks"] = bn_design_block_count(design.get());
  report["valid"] = ok != 0;
  report["detail"] = take_string(detail);

  bool failed = ok == 0;
  if (ca_check) {
    int applicable = 0, ca_ok = 0, strength = -1, expected = -1;
    char* reason = nullptr;
    check(bn_design_ca_check(design.get(), &applicable, &ca_ok, &strength,
                             &expected, &reason));
    report["ca_check"] = {{"applicable", applicable != 0},
                          {"strength", strength},
                          {"expected", expected},
                          {"ok", ca_ok != 0},
                          {"detail", take_string(reason)}};
    if (!applicable || !ca_ok) failed = true;
  }
  print_report(report);
  if (failed) std::exit(3);
}

void run_can_search(int n, int k, int64_t max_rows) {
  int64_t limit = max_rows;
  if (limit <= 0)
    limit = (n >= 0 && n < 31) ? (int64_t{1} << n) : 0;

  int found = 0, value = 0;
  check(bn_can_search(n, k, limit, &found, &value));

  ordered_json report;
  report["n"] = n;
  report["k"] = k;
  report["max_rows"] = limit;
  report["found"] = found != 0;
  report["can"] = found ? ordered_json(value) : ordered_json(nullptr);
  print_report(report);
}

GraphPtr load_graph_choice(const std::string& dot_path, int complete_n,
                           int cycle_n, const std::vector<int>& bipartite) {
  bn_graph* raw = nullptr;
  const int sources = (dot_path.empty() ? 0 : 1) + (complete_n > 0 ? 1 : 0) +
                      (cycle_n > 0 ? 1 : 0) + (bipartite.empty() ? 0 : 1);
  if (sources != 1)
    die_param("pick exactly one graph source: --graph, --complete, --cycle or --bipartite");
  if (!dot_path.empty()) {
    const std::string text = slurp(dot_path);
    check(bn_graph_from_dot(text.c_str(), &raw));
  } else if (complete_n > 0) {
    check(bn_graph_complete(complete_n, &raw));
  } else if (cycle_n > 0) {
    check(bn_graph_cycle(cycle_n, &raw));
  } else {
    check(bn_graph_complete_bipartite(bipartite[0], bipartite[1], &raw));
  }
  return GraphPtr(raw);
}

} // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("BN_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (!*cap || *end || v < 1 || v > INT_MAX)
      die_param("BN_CAP must be a positive integer");
    check(bn_set_arity_cap(static_cast<int>(v)));
  }

  CLI::App app{"Boolean network and covering array toolkit"};
  app.require_subcommand(1);

  // construct ------------------------------------------------------------
  auto* construct =
      app.add_subcommand("construct", "Build a network and print or write its JSON");
  construct->require_subcommand(1);

  bool verify = true;
  std::string out_path;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--verify,!--no-verify", verify,
                  "Re-check the builder's postconditions (default on)");
    sub->add_option("-o,--output", out_path, "Write the network here instead of stdout");
  };

  std::string linear_dot;
  int linear_complete = 0, linear_cycle = 0;
  std::vector<int> linear_bipartite;
  auto* c_linear = construct->add_subcommand("linear", "XOR of the in-neighbours on a given graph");
  c_linear->add_option("--graph", linear_dot, "DOT file with the interaction graph");
  c_linear->add_option("--complete", linear_complete, "Use a loopless complete graph of this size");
  c_linear->add_option("--cycle", linear_cycle, "Use a directed cycle of this size");
  c_linear->add_option("--bipartite", linear_bipartite, "Use a complete bipartite graph a b")
      ->expected(2);
  add_common(c_linear);

  int sk_n = 0, sk_k = 0;
  auto* c_sk = construct->add_subcommand("sk", "Network on loopless K_n with independence k");
  c_sk->add_option("--n", sk_n)->required();
  c_sk->add_option("--k", sk_k)->required();
  add_common(c_sk);

  int wm_m = 0, wm_k = 0;
  auto* c_windmill = construct->add_subcommand("windmill", "k cliques K_m sharing one vertex");
  c_windmill->add_option("--m", wm_m)->required();
  c_windmill->add_option("--k", wm_k)->required();
  add_common(c_windmill);

  int cg_r = 0, cg_s = 0;
  auto* c_gluing = construct->add_subcommand("clique-gluing", "K_r and K_s bridged through one vertex");
  c_gluing->add_option("--r", cg_r)->required();
  c_gluing->add_option("--s", cg_s)->required();
  add_common(c_gluing);

  int cpl_n = 0, cpl_k = 0;
  auto* c_cpl = construct->add_subcommand("clique-plus-loops", "K_{k+1} plus identity loops up to n");
  c_cpl->add_option("--n", cpl_n)->required();
  c_cpl->add_option("--k", cpl_k)->required();
  add_common(c_cpl);

  std::string sm_system;
  auto* c_steiner = construct->add_subcommand("steiner-monotone", "Monotone network of a block design");
  c_steiner->add_option("--system", sm_system, "fano, sqs8, sts:<n>, or a block file")->required();
  add_common(c_steiner);

  std::string al_input;
  auto* c_add_loop = construct->add_subcommand("add-loop", "Append a fresh looped variable");
  c_add_loop->add_option("--input", al_input, "Network JSON file")->required();
  add_common(c_add_loop);

  std::string pe_input, pe_tilde;
  bool pe_loopless = false;
  auto* c_pivot = construct->add_subcommand("pivot-extend", "Multiplexer extension on a fresh variable");
  c_pivot->add_option("--input", pe_input, "Network chosen when the pivot is 1")->required();
  c_pivot->add_option("--tilde", pe_tilde, "Network chosen when the pivot is 0")->required();
  c_pivot->add_flag("--loopless", pe_loopless, "Replace the pivot loop by a fixed-point indicator");
  add_common(c_pivot);

  std::vector<std::string> prod_inputs;
  auto* c_product = construct->add_subcommand("product", "Disjoint union of networks");
  c_product->add_option("--input", prod_inputs, "Network JSON file (repeatable)")->required();
  add_common(c_product);

  std::vector<std::string> su_inputs;
  auto* c_union = construct->add_subcommand("strong-union", "Gated union preserving strong connectivity");
  c_union->add_option("--input", su_inputs, "Network JSON file (repeatable)")->required();
  add_common(c_union);

  c_linear->callback([&] {
    const GraphPtr graph =
        load_graph_choice(linear_dot, linear_complete, linear_cycle, linear_bipartite);
    bn_network* raw = nullptr;
    check(bn_construct_linear(graph.get(), verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  c_sk->callback([&] {
    bn_network* raw = nullptr;
    check(bn_construct_sk(sk_n, sk_k, verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  c_windmill->callback([&] {
    bn_network* raw = nullptr;
    check(bn_construct_windmill(wm_m, wm_k, verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  c_gluing->callback([&] {
    bn_network* raw = nullptr;
    check(bn_construct_clique_gluing(cg_r, cg_s, verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  c_cpl->callback([&] {
    bn_network* raw = nullptr;
    check(bn_construct_clique_plus_loops(cpl_n, cpl_k, verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  c_steiner->callback([&] {
    const DesignPtr design = load_design(sm_system);
    bn_network* raw = nullptr;
    check(bn_construct_steiner_monotone(design.get(), verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  c_add_loop->callback([&] {
    const NetPtr base = load_network(al_input);
    bn_network* raw = nullptr;
    check(bn_construct_add_loop(base.get(), verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  c_pivot->callback([&] {
    const NetPtr high = load_network(pe_input);
    const NetPtr low = load_network(pe_tilde);
    bn_network* raw = nullptr;
    check(bn_construct_pivot_extend(high.get(), low.get(), pe_loopless, verify, &raw));
    emit_network(NetPtr(raw), out_path);
  });
  const auto run_parts = [&](const std::vector<std::string>& paths, bool strong) {
    std::vector<NetPtr> owners;
    std::vector<const bn_network*> parts;
    for (const auto& p : paths) {
      owners.push_back(load_network(p));
      parts.push_back(owners.back().get());
    }
    bn_network* raw = nullptr;
    if (strong)
      check(bn_construct_strong_union(parts.data(), parts.size(), verify, &raw));
    else
      check(bn_construct_product(parts.data(), parts.size(), verify, &raw));
    emit_network(NetPtr(raw), out_path);
  };
  c_product->callback([&] { run_parts(prod_inputs, false); });
  c_union->callback([&] { run_parts(su_inputs, true); });

  // analyze ----------------------------------------------------------------
  std::string an_path, an_fp_out, an_dot_out;
  bool an_no_timing = false;
  auto* analyze = app.add_subcommand("analyze", "Full report on a network file");
  analyze->add_option("network", an_path, "Network JSON file")->required();
  analyze->add_option("--fp-out", an_fp_out, "Write the fixed points as a row file");
  analyze->add_option("--dot", an_dot_out, "Write the interaction graph as DOT");
  analyze->add_flag("--no-timing", an_no_timing, "Omit elapsed times for reproducible output");
  analyze->callback([&] { run_analyze(an_path, an_fp_out, an_dot_out, !an_no_timing); });

  // strength ---------------------------------------------------------------
  std::string st_path;
  auto* strength = app.add_subcommand("strength", "Covering array strength of a row file");
  strength->add_option("rows", st_path, "Row file, one binary vector per line")->required();
  strength->callback([&] { run_strength(st_path); });

  // admissible ---------------------------------------------------------------
  std::string ad_path;
  int ad_complete = 0, ad_k = 0;
  std::vector<int> ad_bipartite;
  auto* admissible = app.add_subcommand("admissible", "Screen a graph for k-independent networks");
  admissible->add_option("graph", ad_path, "DOT file");
  admissible->add_option("--complete", ad_complete, "Use a loopless complete graph of this size");
  admissible->add_option("--bipartite", ad_bipartite, "Use a complete bipartite graph a b")
      ->expected(2);
  admissible->add_option("--k", ad_k, "Independence number to screen for")->required();
  admissible->callback([&] { run_admissible(ad_path, ad_complete, ad_bipartite, ad_k); });

  // verify-steiner ---------------------------------------------------------
  std::string vs_source;
  bool vs_ca = false;
  auto* verify_steiner = app.add_subcommand("verify-steiner", "Check a block design");
  verify_steiner->add_option("system", vs_source, "fano, sqs8, sts:<n>, or a block file")->required();
  verify_steiner->add_flag("--ca-check", vs_ca, "Also check the blocks' covering array strength");
  verify_steiner->callback([&] { run_verify_steiner(vs_source, vs_ca); });

  // can-search ---------------------------------------------------------------
  int cs_n = 0, cs_k = 0;
  int64_t cs_max_rows = 0;
  auto* can_search = app.add_subcommand("can-search", "Exhaustive minimum covering array size");
  can_search->add_option("--n", cs_n, "Columns (at most 5)")->required();
  can_search->add_option("--k", cs_k, "Strength (at most 3)")->required();
  can_search->add_option("--max-rows", cs_max_rows, "Give up beyond this many rows (default 2^n)");
  can_search->callback([&] { run_can_search(cs_n, cs_k, cs_max_rows); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return 0;
}
