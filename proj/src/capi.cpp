// Implementation of the C interface declared in boolnet.h. Handles are the
// C++ objects behind a reinterpret_cast, exceptions become status codes, and
// the offending message is parked in a thread-local slot for bn_last_error.

#include "boolnet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "boolnet/bool_fn.hpp"
#include "boolnet/bool_net.hpp"
#include "boolnet/config.hpp"
#include "boolnet/constructions.hpp"
#include "boolnet/cover.hpp"
#include "boolnet/errors.hpp"
#include "boolnet/graph.hpp"
#include "boolnet/io.hpp"
#include "boolnet/steiner.hpp"

using boolnet::BooleanNetwork;
using boolnet::InteractionGraph;
using boolnet::SteinerSystem;
using boolnet::VectorSet;

namespace {

thread_local std::string t_last_error = "no error";

bn_status fail(bn_status code, const char* what) {
  t_last_error = what;
  return code;
}

template <typename Fn>
bn_status guarded(Fn&& fn) {
  try {
    fn();
    return BN_OK;
  } catch (const boolnet::parameter_error& e) {
    return fail(BN_E_PARAM, e.what());
  } catch (const boolnet::limit_error& e) {
    return fail(BN_E_LIMIT, e.what());
  } catch (const boolnet::parse_error& e) {
    return fail(BN_E_PARSE, e.what());
  } catch (const boolnet::verify_error& e) {
    return fail(BN_E_VERIFY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BN_E_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(BN_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bn_network* as_c(BooleanNetwork* p) { return reinterpret_cast<bn_network*>(p); }
bn_graph* as_c(InteractionGraph* p) { return reinterpret_cast<bn_graph*>(p); }
bn_rows* as_c(VectorSet* p) { return reinterpret_cast<bn_rows*>(p); }
bn_design* as_c(SteinerSystem* p) { return reinterpret_cast<bn_design*>(p); }

const BooleanNetwork* as_cpp(const bn_network* p) {
  return reinterpret_cast<const BooleanNetwork*>(p);
}
InteractionGraph* as_cpp(bn_graph* p) {
  return reinterpret_cast<InteractionGraph*>(p);
}
const InteractionGraph* as_cpp(const bn_graph* p) {
  return reinterpret_cast<const InteractionGraph*>(p);
}
const VectorSet* as_cpp(const bn_rows* p) {
  return reinterpret_cast<const VectorSet*>(p);
}
const SteinerSystem* as_cpp(const bn_design* p) {
  return reinterpret_cast<const SteinerSystem*>(p);
}

bn_status null_arg() { return fail(BN_E_PARAM, "null argument"); }

std::string subset_string(const std::vector<int>& subset) {
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

std::vector<BooleanNetwork> collect_parts(const bn_network* const* parts,
                                          size_t count) {
  std::vector<BooleanNetwork> v;
  v.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (!parts[i]) throw boolnet::parameter_error("null network in part list");
    v.push_back(*as_cpp(parts[i]));
  }
  return v;
}

} // namespace

extern "C" {

const char* bn_last_error(void) { return t_last_error.c_str(); }

void bn_string_free(char* s) { std::free(s); }

int bn_arity_cap(void) { return boolnet::arity_cap(); }

bn_status bn_set_arity_cap(int cap) {
  return guarded([&] { boolnet::set_arity_cap(cap); });
}

/* ---- networks ---------------------------------------------------------- */

bn_status bn_network_from_json(const char* text, bn_network** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::network_from_json_text(text)));
  });
}

bn_status bn_network_to_json(const bn_network* f, char** out) {
  if (!f || !out) return null_arg();
  return guarded([&] {
    *out = dup_string(boolnet::network_to_json(*as_cpp(f)).dump(2) + "\n");
  });
}

bn_status bn_network_identity(int n, bn_network** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = as_c(new BooleanNetwork(BooleanNetwork::identity(n))); });
}

void bn_network_free(bn_network* f) { delete as_cpp(f); }

int bn_network_size(const bn_network* f) { return f ? as_cpp(f)->size() : 0; }

bn_status bn_network_step(const bn_network* f, uint64_t state, uint64_t* out) {
  if (!f || !out) return null_arg();
  return guarded([&] {
    if (state >> as_cpp(f)->size())
      throw boolnet::parameter_error("state out of range");
    *out = as_cpp(f)->step(state);
  });
}

bn_status bn_network_fixed_points(const bn_network* f, bn_rows** out) {
  if (!f || !out) return null_arg();
  return guarded([&] { *out = as_c(new VectorSet(boolnet::fixed_points(*as_cpp(f)))); });
}

bn_status bn_network_independence(const bn_network* f, int* out) {
  if (!f || !out) return null_arg();
  return guarded([&] { *out = boolnet::independence_number(*as_cpp(f)); });
}

bn_status bn_network_graph(const bn_network* f, bn_graph** out) {
  if (!f || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new InteractionGraph(boolnet::interaction_graph(*as_cpp(f))));
  });
}

bn_status bn_network_node_ic(const bn_network* f, int node, int* ic) {
  if (!f || !ic) return null_arg();
  return guarded([&] { *ic = boolnet::ic_index(as_cpp(f)->node(node)); });
}

bn_status bn_network_node_flags(const bn_network* f, int node, int* monotone,
                                int* unate) {
  if (!f) return null_arg();
  return guarded([&] {
    const auto profile = boolnet::unate_profile(as_cpp(f)->node(node));
    if (monotone) *monotone = profile.monotone() ? 1 : 0;
    if (unate) *unate = profile.unate() ? 1 : 0;
  });
}

bn_status bn_network_feedback_bound(const bn_network* f, uint64_t* fp_count,
                                    int* tau, int* holds) {
  if (!f) return null_arg();
  return guarded([&] {
    const auto report = boolnet::check_feedback_bound(*as_cpp(f));
    if (fp_count) *fp_count = report.fp_count;
    if (tau) *tau = report.tau;
    if (holds) *holds = report.holds ? 1 : 0;
  });
}

/* ---- graphs ------------------------------------------------------------ */

bn_status bn_graph_new(int n, bn_graph** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = as_c(new InteractionGraph(n)); });
}

bn_status bn_graph_complete(int n, bn_graph** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = as_c(new InteractionGraph(InteractionGraph::complete(n))); });
}

bn_status bn_graph_complete_bipartite(int a, int b, bn_graph** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = as_c(new InteractionGraph(InteractionGraph::complete_bipartite(a, b)));
  });
}

bn_status bn_graph_cycle(int n, bn_graph** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = as_c(new InteractionGraph(InteractionGraph::cycle(n))); });
}

bn_status bn_graph_from_dot(const char* text, bn_graph** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new InteractionGraph(boolnet::graph_from_dot(text)));
  });
}

bn_status bn_graph_to_dot(const bn_graph* g, char** out) {
  if (!g || !out) return null_arg();
  return guarded([&] { *out = dup_string(boolnet::graph_to_dot(*as_cpp(g))); });
}

void bn_graph_free(bn_graph* g) { delete as_cpp(g); }

int bn_graph_size(const bn_graph* g) { return g ? as_cpp(g)->size() : 0; }

bn_status bn_graph_add_arc(bn_graph* g, int from, int to) {
  if (!g) return null_arg();
  return guarded([&] { as_cpp(g)->add_arc(from, to); });
}

int bn_graph_has_arc(const bn_graph* g, int from, int to) {
  if (!g) return 0;
  if (from < 1 || from > as_cpp(g)->size() || to < 1 || to > as_cpp(g)->size())
    return 0;
  return as_cpp(g)->has_arc(from, to) ? 1 : 0;
}

bn_status bn_graph_metrics(const bn_graph* g, int* min_indegree,
                           int* has_loops, int* strongly_connected) {
  if (!g) return null_arg();
  return guarded([&] {
    const auto m = boolnet::graph_metrics(*as_cpp(g));
    if (min_indegree) *min_indegree = m.min_indegree;
    if (has_loops) *has_loops = m.has_loops ? 1 : 0;
    if (strongly_connected) *strongly_connected = m.strongly_connected ? 1 : 0;
  });
}

bn_status bn_graph_feedback(const bn_graph* g, int* tau, int32_t* witness,
                            size_t witness_cap, size_t* witness_len) {
  if (!g) return null_arg();
  return guarded([&] {
    const auto result = boolnet::feedback_number(*as_cpp(g));
    if (tau) *tau = result.tau;
    if (witness_len) *witness_len = result.witness.size();
    if (witness)
      for (size_t i = 0; i < result.witness.size() && i < witness_cap; ++i)
        witness[i] = result.witness[i];
  });
}

bn_status bn_graph_admissible(const bn_graph* g, int k, int* rejected,
                              int* tau, int* min_indegree, int64_t* can_lo,
                              char** reasons) {
  if (!g || !rejected) return null_arg();
  return guarded([&] {
    const auto report = boolnet::admissibility_check(*as_cpp(g), k);
    *rejected = report.rejected ? 1 : 0;
    if (tau) *tau = report.tau;
    if (min_indegree) *min_indegree = report.min_indegree;
    if (can_lo) *can_lo = report.can_lo;
    if (reasons) {
      std::string joined;
      for (size_t i = 0; i < report.reasons.size(); ++i) {
        if (i) joined += "\n";
        joined += report.reasons[i];
      }
      *reasons = dup_string(joined);
    }
  });
}

/* ---- vector sets ------------------------------------------------------- */

bn_status bn_rows_from_text(const char* text, bn_rows** out) {
  if (!text || !out) return null_arg();
  return guarded([&] { *out = as_c(new VectorSet(boolnet::rows_from_text(text))); });
}

bn_status bn_rows_to_text(const bn_rows* a, char** out) {
  if (!a || !out) return null_arg();
  return guarded([&] { *out = dup_string(boolnet::rows_to_text(*as_cpp(a))); });
}

void bn_rows_free(bn_rows* a) { delete as_cpp(static_cast<const bn_rows*>(a)); }

size_t bn_rows_size(const bn_rows* a) { return a ? as_cpp(a)->size() : 0; }

int bn_rows_width(const bn_rows* a) { return a ? as_cpp(a)->width() : 0; }

bn_status bn_rows_get(const bn_rows* a, size_t index, uint32_t* out) {
  if (!a || !out) return null_arg();
  if (index >= as_cpp(a)->size()) return fail(BN_E_PARAM, "row index out of range");
  *out = as_cpp(a)->rows()[index];
  return BN_OK;
}

bn_status bn_rows_strength(const bn_rows* a, int* out) {
  if (!a || !out) return null_arg();
  return guarded([&] { *out = boolnet::strength(*as_cpp(a)); });
}

bn_status bn_rows_find_uncovered(const bn_rows* a, int k, int* found,
                                 int32_t* indices, size_t indices_cap,
                                 uint32_t* pattern) {
  if (!a || !found) return null_arg();
  return guarded([&] {
    const auto witness = boolnet::find_uncovered(*as_cpp(a), k);
    *found = witness ? 1 : 0;
    if (!witness) return;
    if (indices) {
      if (indices_cap < witness->indices.size())
        throw boolnet::parameter_error("indices buffer too small");
      for (size_t i = 0; i < witness->indices.size(); ++i)
        indices[i] = witness->indices[i];
    }
    if (pattern) *pattern = witness->pattern;
  });
}

/* ---- covering array numbers ------------------------------------------- */

bn_status bn_can_lookup(int n, int k, int* known, int64_t* lo, int64_t* hi) {
  if (!known) return null_arg();
  return guarded([&] {
    const auto entry = boolnet::can_lookup(n, k);
    *known = entry ? 1 : 0;
    if (entry) {
      if (lo) *lo = entry->lo;
      if (hi) *hi = entry->hi;
    }
  });
}

bn_status bn_can_search(int n, int k, int64_t max_rows, int* found,
                        int* value) {
  if (!found) return null_arg();
  return guarded([&] {
    const int rows = max_rows > INT32_MAX ? INT32_MAX : static_cast<int>(max_rows);
    const auto result = boolnet::can_exact_search(n, k, rows);
    *found = result ? 1 : 0;
    if (result && value) *value = *result;
  });
}

/* ---- Steiner systems --------------------------------------------------- */

bn_status bn_design_fano(bn_design** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = as_c(new SteinerSystem(boolnet::fano())); });
}

bn_status bn_design_sqs8(bn_design** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = as_c(new SteinerSystem(boolnet::sqs8())); });
}

bn_status bn_design_sts(int n, bn_design** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = as_c(new SteinerSystem(boolnet::sts(n))); });
}

bn_status bn_design_from_text(const char* text, bn_design** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new SteinerSystem(boolnet::steiner_from_text(text)));
  });
}

bn_status bn_design_to_text(const bn_design* s, char** out) {
  if (!s || !out) return null_arg();
  return guarded([&] { *out = dup_string(boolnet::steiner_to_text(*as_cpp(s))); });
}

void bn_design_free(bn_design* s) {
  delete as_cpp(static_cast<const bn_design*>(s));
}

int bn_design_points(const bn_design* s) { return s ? as_cpp(s)->points() : 0; }

int bn_design_block_size(const bn_design* s) {
  return s ? as_cpp(s)->block_size() : 0;
}

int bn_design_strength_t(const bn_design* s) {
  return s ? as_cpp(s)->strength_t() : 0;
}

size_t bn_design_block_count(const bn_design* s) {
  return s ? as_cpp(s)->block_count() : 0;
}

bn_status bn_design_verify(const bn_design* s, int* ok, char** detail) {
  if (!s || !ok) return null_arg();
  return guarded([&] {
    const auto check = boolnet::verify_steiner(*as_cpp(s));
    *ok = check.ok ? 1 : 0;
    if (!detail) return;
    std::string text = "ok";
    if (check.kind == boolnet::SteinerCheck::Kind::block_weight)
      text = "block " + std::to_string(check.block_index) +
             " does not have weight " + std::to_string(as_cpp(s)->block_size());
    else if (check.kind == boolnet::SteinerCheck::Kind::coverage)
      text = "subset " + subset_string(check.subset) + " lies in " +
             std::to_string(check.count) + " blocks, expected exactly 1";
    *detail = dup_string(text);
  });
}

bn_status bn_design_ca_check(const bn_design* s, int* applicable, int* ok,
                             int* strength, int* expected, char** detail) {
  if (!s || !applicable) return null_arg();
  return guarded([&] {
    const auto report = boolnet::steiner_to_ca_check(*as_cpp(s));
    *applicable = report.applicable ? 1 : 0;
    if (ok) *ok = report.ok ? 1 : 0;
    if (strength) *strength = report.strength;
    if (expected) *expected = report.expected;
    if (detail) *detail = dup_string(report.reason.empty() ? "ok" : report.reason);
  });
}

/* ---- constructions ------------------------------------------------------ */

bn_status bn_construct_linear(const bn_graph* g, int verify, bn_network** out) {
  if (!g || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::linear_network(*as_cpp(g), verify != 0)));
  });
}

bn_status bn_construct_sk(int n, int k, int verify, bn_network** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::sk_network(n, k, verify != 0)));
  });
}

bn_status bn_construct_clique_gluing(int r, int s, int verify,
                                     bn_network** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::clique_gluing(r, s, verify != 0).network));
  });
}

bn_status bn_construct_windmill(int m, int k, int verify, bn_network** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::windmill(m, k, verify != 0).network));
  });
}

bn_status bn_construct_clique_plus_loops(int n, int k, int verify,
                                         bn_network** out) {
  if (!out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::clique_plus_loops(n, k, verify != 0)));
  });
}

bn_status bn_construct_add_loop(const bn_network* f, int verify,
                                bn_network** out) {
  if (!f || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::add_loop(*as_cpp(f), verify != 0)));
  });
}

bn_status bn_construct_pivot_extend(const bn_network* f,
                                    const bn_network* f_tilde, int loopless,
                                    int verify, bn_network** out) {
  if (!f || !f_tilde || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::extend_with_pivot(
        *as_cpp(f), *as_cpp(f_tilde), loopless != 0, verify != 0)));
  });
}

bn_status bn_construct_product(const bn_network* const* parts, size_t count,
                               int verify, bn_network** out) {
  if (!parts || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(
        boolnet::disjoint_product(collect_parts(parts, count), verify != 0)));
  });
}

bn_status bn_construct_strong_union(const bn_network* const* parts,
                                    size_t count, int verify,
                                    bn_network** out) {
  if (!parts || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(
        boolnet::strong_union(collect_parts(parts, count), verify != 0)));
  });
}

bn_status bn_construct_steiner_monotone(const bn_design* s, int verify,
                                        bn_network** out) {
  if (!s || !out) return null_arg();
  return guarded([&] {
    *out = as_c(new BooleanNetwork(boolnet::steiner_monotone(*as_cpp(s), verify != 0)));
  });
}

} // extern "C"
