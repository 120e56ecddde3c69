#ifndef BOOLNET_IO_HPP
#define BOOLNET_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "boolnet/bool_fn.hpp"
#include "boolnet/bool_net.hpp"
#include "boolnet/cover.hpp"
#include "boolnet/graph.hpp"
#include "boolnet/steiner.hpp"

namespace boolnet {

// File formats.
//
// Network JSON: {"n": 3, "functions": [f1, f2, f3]} where each function is
//   {"type":"linear","inputs":[...]}, {"type":"dnf","clauses":[[...],...]},
//   {"type":"majority","inputs":[...]}, {"type":"and"/"or","inputs":[lits]},
//   or {"type":"truth_table","arity":n,"bits":"<hex>"} with the hex string
//   little-endian by digit (first digit holds states 0..3).
//
// Row files: one binary string per line, variable 1 leftmost.
// Block files: header line "n k t", then one binary row per block.
// DOT: "digraph name { 1; 2; 1 -> 2; }" with bare integer vertex names;
//   the parser accepts exactly the subset the writer emits.

nlohmann::ordered_json function_to_json(const BooleanFunction& f);
BooleanFunction function_from_json(const nlohmann::json& j, int arity);

nlohmann::ordered_json network_to_json(const BooleanNetwork& f);
BooleanNetwork network_from_json(const nlohmann::json& j);
BooleanNetwork network_from_json_text(std::string_view text);

std::string rows_to_text(const VectorSet& a);
VectorSet rows_from_text(std::string_view text);

std::string graph_to_dot(const InteractionGraph& g);
InteractionGraph graph_from_dot(std::string_view text);

std::string steiner_to_text(const SteinerSystem& s);
SteinerSystem steiner_from_text(std::string_view text);

/// Reads a whole file; throws parse_error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace boolnet

#endif
