#include "boolnet/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

// Builder errors on file content are reported as parse errors; limits
// (arity cap) keep their own type.
template <typename Fn>
auto parsing(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const parameter_error& e) {
    throw parse_error(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what());
  }
}

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw parse_error(std::string("function needs an array field '") + key + "'");
  std::vector<int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer())
      throw parse_error(std::string("field '") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

} // namespace

nlohmann::ordered_json function_to_json(const BooleanFunction& f) {
  nlohmann::ordered_json j;
  const Descriptor& d = f.descriptor();
  if (const auto* lin = std::get_if<LinearDesc>(&d)) {
    j["type"] = "linear";
    j["inputs"] = lin->inputs;
  } else if (const auto* dn = std::get_if<DnfDesc>(&d)) {
    j["type"] = "dnf";
    j["clauses"] = dn->clauses;
  } else if (const auto* maj = std::get_if<MajorityDesc>(&d)) {
    j["type"] = "majority";
    j["inputs"] = maj->inputs;
  } else if (const auto* an = std::get_if<AndDesc>(&d)) {
    j["type"] = "and";
    j["inputs"] = an->literals;
  } else if (const auto* o = std::get_if<OrDesc>(&d)) {
    j["type"] = "or";
    j["inputs"] = o->literals;
  } else {
    j["type"] = "truth_table";
    j["arity"] = f.arity();
    j["bits"] = f.table_hex();
  }
  return j;
}

BooleanFunction function_from_json(const nlohmann::json& j, int arity) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw parse_error("function entries need a string 'type'");
  const std::string type = j["type"].get<std::string>();
  return parsing([&]() -> BooleanFunction {
    if (type == "linear") return BooleanFunction::linear(arity, int_list(j, "inputs"));
    if (type == "majority") return BooleanFunction::majority(arity, int_list(j, "inputs"));
    if (type == "and") return BooleanFunction::and_gate(arity, int_list(j, "inputs"));
    if (type == "or") return BooleanFunction::or_gate(arity, int_list(j, "inputs"));
    if (type == "dnf") {
      if (!j.contains("clauses") || !j["clauses"].is_array())
        throw parse_error("dnf functions need an array field 'clauses'");
      std::vector<std::vector<int>> clauses;
      for (const auto& c : j["clauses"]) {
        if (!c.is_array()) throw parse_error("dnf clauses must be arrays");
        std::vector<int> clause;
        for (const auto& lit : c) {
          if (!lit.is_number_integer())
            throw parse_error("dnf literals must be integers");
          clause.push_back(lit.get<int>());
        }
        clauses.push_back(std::move(clause));
      }
      return BooleanFunction::dnf(arity, std::move(clauses));
    }
    if (type == "truth_table") {
      if (!j.contains("arity") || !j["arity"].is_number_integer())
        throw parse_error("truth_table functions need an integer 'arity'");
      if (j["arity"].get<int>() != arity)
        throw parse_error("truth_table arity disagrees with the network size");
      if (!j.contains("bits") || !j["bits"].is_string())
        throw parse_error("truth_table functions need a hex string 'bits'");
      return BooleanFunction::from_hex(arity, j["bits"].get<std::string>());
    }
    throw parse_error("unknown function type '" + type + "'");
  });
}

nlohmann::ordered_json network_to_json(const BooleanNetwork& f) {
  nlohmann::ordered_json j;
  j["n"] = f.size();
  auto& fns = j["functions"] = nlohmann::ordered_json::array();
  for (const auto& node : f.nodes()) fns.push_back(function_to_json(node));
  return j;
}

BooleanNetwork network_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw parse_error("network files need an integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1)
    throw parse_error("network size must be positive");
  if (!j.contains("functions") || !j["functions"].is_array())
    throw parse_error("network files need an array field 'functions'");
  if (static_cast<int>(j["functions"].size()) != n)
    throw parse_error("expected exactly n entries in 'functions'");
  std::vector<BooleanFunction> fns;
  fns.reserve(n);
  for (const auto& fj : j["functions"]) fns.push_back(function_from_json(fj, n));
  return parsing([&] { return BooleanNetwork(std::move(fns)); });
}

BooleanNetwork network_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
  return network_from_json(j);
}

std::string rows_to_text(const VectorSet& a) {
  std::string out;
  for (uint32_t row : a.rows()) {
    for (int i = 0; i < a.width(); ++i) out += (row >> i & 1) ? '1' : '0';
    out += '\n';
  }
  return out;
}

VectorSet rows_from_text(std::string_view text) {
  std::vector<uint32_t> rows;
  int width = -1;
  size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (!line.empty()) {
      if (width < 0) {
        width = static_cast<int>(line.size());
        if (width > 31) throw parse_error("rows wider than 31 are not supported");
      } else if (static_cast<int>(line.size()) != width) {
        throw parse_error("ragged row on line " + std::to_string(line_no));
      }
      uint32_t row = 0;
      for (int i = 0; i < width; ++i) {
        if (line[i] == '1') row |= uint32_t{1} << i;
        else if (line[i] != '0')
          throw parse_error("rows must be binary strings, line " + std::to_string(line_no));
      }
      rows.push_back(row);
    }
    pos = end + 1;
  }
  if (width < 0) return VectorSet();
  return VectorSet(width, std::move(rows));
}

std::string graph_to_dot(const InteractionGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 1; v <= g.size(); ++v) out << "  " << v << ";\n";
  for (const auto& [a, b] : g.arcs()) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

struct DotLexer {
  std::string_view text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  std::string next() {
    skip_space();
    if (pos >= text.size()) return "";
    const char c = text[pos];
    if (c == '{' || c == '}' || c == ';') {
      ++pos;
      return std::string(1, c);
    }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      pos += 2;
      return "->";
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return std::string(text.substr(start, pos - start));
    }
    throw parse_error(std::string("unexpected character '") + c + "' in graph file");
  }
};

int vertex_token(const std::string& tok) {
  if (tok.empty())
    throw parse_error("unexpected end of graph file");
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("vertex names must be bare integers, got '" + tok + "'");
  const long v = std::stol(tok);
  if (v < 1 || v > 63)
    throw parse_error("vertex '" + tok + "' out of range");
  return static_cast<int>(v);
}

} // namespace

InteractionGraph graph_from_dot(std::string_view text) {
  DotLexer lex{text};
  if (lex.next() != "digraph")
    throw parse_error("graph files must start with 'digraph'");
  std::string tok = lex.next();
  if (tok != "{") {
    tok = lex.next(); // the previous token was the graph name
    if (tok != "{") throw parse_error("expected '{' after the graph name");
  }

  int max_vertex = 0;
  std::vector<std::pair<int, int>> arcs;
  while (true) {
    tok = lex.next();
    if (tok == "}") break;
    const int a = vertex_token(tok);
    max_vertex = std::max(max_vertex, a);
    tok = lex.next();
    if (tok == ";") continue;
    if (tok != "->")
      throw parse_error("expected ';' or '->' after a vertex");
    const int b = vertex_token(lex.next());
    max_vertex = std::max(max_vertex, b);
    if (lex.next() != ";")
      throw parse_error("expected ';' after an arc");
    arcs.emplace_back(a, b);
  }
  if (max_vertex == 0)
    throw parse_error("graph file declares no vertices");
  InteractionGraph g(max_vertex);
  for (const auto& [a, b] : arcs) g.add_arc(a, b);
  return g;
}

std::string steiner_to_text(const SteinerSystem& s) {
  std::ostringstream out;
  out << s.points() << ' ' << s.block_size() << ' ' << s.strength_t() << '\n';
  out << rows_to_text(s.as_rows());
  return out.str();
}

SteinerSystem steiner_from_text(std::string_view text) {
  size_t nl = text.find('\n');
  if (nl == std::string_view::npos)
    throw parse_error("block files need a header line 'n k t'");
  std::istringstream head{std::string(text.substr(0, nl))};
  int n, k, t;
  if (!(head >> n >> k >> t))
    throw parse_error("block file header must read 'n k t'");
  std::string rest;
  if (head >> rest)
    throw parse_error("block file header must read 'n k t'");

  // Duplicate blocks must survive parsing so that verification can point
  // at them, so the rows are collected by hand instead of via VectorSet.
  std::vector<uint32_t> blocks;
  std::string_view body = text.substr(nl + 1);
  size_t pos = 0, line_no = 1;
  while (pos < body.size()) {
    size_t end = body.find('\n', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view line = body.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (!line.empty()) {
      if (static_cast<int>(line.size()) != n)
        throw parse_error("block rows must have width n, line " + std::to_string(line_no));
      uint32_t row = 0;
      for (int i = 0; i < n; ++i) {
        if (line[i] == '1') row |= uint32_t{1} << i;
        else if (line[i] != '0')
          throw parse_error("blocks must be binary strings, line " + std::to_string(line_no));
      }
      blocks.push_back(row);
    }
    pos = end + 1;
  }
  return parsing([&] { return SteinerSystem(n, k, t, std::move(blocks)); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw parse_error("cannot write '" + path + "'");
  out << content;
  if (!out)
    throw parse_error("failed while writing '" + path + "'");
}

} // namespace boolnet
