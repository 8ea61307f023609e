#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphca/covering_array.hpp"
#include "graphca/error.hpp"
#include "graphca/graph.hpp"
#include "graphca/group.hpp"
#include "graphca/product.hpp"

namespace graphca {

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& source, std::size_t line, const std::string& msg) {
  fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + msg);
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, path + ": cannot open file for writing");
  return out;
}

inline std::size_t parse_count(const std::string& token, const std::string& source, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(source, line, "expected a non-negative integer, got '" + token + "'");
  try {
    return std::stoul(token);
  } catch (const std::exception&) {
    parse_fail(source, line, "number out of range: " + token);
  }
}

}  // namespace detail

// DIMACS .col: "c" comments, "p edge V E", then "e u v" with 1-based vertices.

inline Graph read_col(std::istream& in, const std::string& source = "<input>") {
  std::string text;
  std::size_t line_no = 0, declared_edges = 0;
  bool have_header = false;
  Graph g;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream ls(text);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind, v, e;
      if (have_header) detail::parse_fail(source, line_no, "duplicate problem line");
      if (!(ls >> kind >> v >> e) || kind != "edge") detail::parse_fail(source, line_no, "expected 'p edge V E'");
      g = Graph(detail::parse_count(v, source, line_no));
      declared_edges = detail::parse_count(e, source, line_no);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) detail::parse_fail(source, line_no, "edge before problem line");
      std::string a, b;
      if (!(ls >> a >> b)) detail::parse_fail(source, line_no, "expected 'e u v'");
      const std::size_t u = detail::parse_count(a, source, line_no), v = detail::parse_count(b, source, line_no);
      if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
        detail::parse_fail(source, line_no, "vertex out of range 1.." + std::to_string(g.vertex_count()));
      if (u == v) detail::parse_fail(source, line_no, "self-loop on vertex " + std::to_string(u));
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      detail::parse_fail(source, line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) detail::parse_fail(source, line_no, "missing 'p edge V E' line");
  if (g.edge_count() != declared_edges)
    detail::parse_fail(source, line_no, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                            std::to_string(g.edge_count()) + " distinct");
  return g;
}

inline void write_col(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline Graph read_col_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_col(in, path);
}

inline void write_col_file(const std::string& path, const Graph& g) {
  auto out = detail::open_output(path);
  write_col(out, g);
}

// CA file: "ca k n g", then k lines "<label> <n symbols>". Reading leaves
// the array unbound; labels are kept.

inline CoveringArray read_ca(std::istream& in, const std::string& source = "<input>") {
  std::string text;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, text)) {
      ++line_no;
      if (text.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) detail::parse_fail(source, line_no, "missing 'ca k n g' header");
  std::istringstream hs(text);
  std::string tag, k_s, n_s, g_s, extra;
  if (!(hs >> tag >> k_s >> n_s >> g_s) || tag != "ca" || (hs >> extra))
    detail::parse_fail(source, line_no, "expected 'ca k n g'");
  const std::size_t k = detail::parse_count(k_s, source, line_no);
  const std::size_t n = detail::parse_count(n_s, source, line_no);
  const std::size_t g = detail::parse_count(g_s, source, line_no);
  if (g < 1) detail::parse_fail(source, line_no, "alphabet size must be positive");
  CoveringArray ca{g, SymbolMatrix(k, n), std::nullopt, {}};
  for (std::size_t r = 0; r < k; ++r) {
    if (!next_line()) detail::parse_fail(source, line_no, "expected " + std::to_string(k) + " rows, got " + std::to_string(r));
    std::istringstream ls(text);
    std::string label, tok;
    ls >> label;
    ca.labels.push_back(label);
    std::size_t c = 0;
    while (ls >> tok) {
      if (c == n) detail::parse_fail(source, line_no, "row has more than " + std::to_string(n) + " symbols");
      const std::size_t x = detail::parse_count(tok, source, line_no);
      if (x >= g) detail::parse_fail(source, line_no, "symbol " + tok + " outside Z_" + std::to_string(g));
      ca.matrix.at(r, c++) = static_cast<Symbol>(x);
    }
    if (c != n) detail::parse_fail(source, line_no, "row has " + std::to_string(c) + " symbols, expected " + std::to_string(n));
  }
  if (next_line()) detail::parse_fail(source, line_no, "unexpected content after the last row");
  return ca;
}

inline void write_ca(std::ostream& out, const CoveringArray& ca) {
  out << "ca " << ca.rows() << ' ' << ca.cols() << ' ' << ca.symbols << '\n';
  for (std::size_t r = 0; r < ca.rows(); ++r) {
    out << ca.row_label(r);
    for (Symbol x : ca.matrix.row(r)) out << ' ' << x;
    out << '\n';
  }
}

inline CoveringArray read_ca_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_ca(in, path);
}

inline void write_ca_file(const std::string& path, const CoveringArray& ca) {
  auto out = detail::open_output(path);
  write_ca(out, ca);
}

/// Binds each row to the vertex its label names: a graph label if the
/// graph has labels, otherwise a 0-based vertex index.
inline void bind_by_labels(CoveringArray& ca, const Graph& g) {
  if (ca.labels.size() != ca.rows()) fail(ErrorCode::NotBound, "array rows carry no labels");
  std::vector<Vertex> b;
  for (const auto& label : ca.labels) {
    Vertex v = static_cast<Vertex>(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      if (g.label(x) == label) {
        v = x;
        break;
      }
    if (v == g.vertex_count()) fail(ErrorCode::NotBound, "row label '" + label + "' names no vertex");
    b.push_back(v);
  }
  ca.binding = std::move(b);
  rows_by_vertex(ca, g);
}

inline void write_coords(std::ostream& out, const std::vector<Tuple>& coords) {
  for (std::size_t v = 0; v < coords.size(); ++v) {
    out << v << ": (";
    for (std::size_t i = 0; i < coords[v].size(); ++i) out << (i ? "," : "") << coords[v][i];
    out << ")\n";
  }
}

// Group JSON: {"order": m, "elements": [names], "table": [[indices]]}.

inline nlohmann::json group_to_json(const FiniteGroup& grp) {
  return {{"order", grp.order()}, {"elements", grp.names()}, {"table", grp.table()}};
}

inline FiniteGroup group_from_json(const nlohmann::json& j, const std::string& source = "<input>") {
  try {
    const auto m = j.at("order").get<std::size_t>();
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    std::vector<std::string> names;
    if (j.contains("elements")) names = j.at("elements").get<std::vector<std::string>>();
    if (table.size() != m || (!names.empty() && names.size() != m))
      fail(ErrorCode::ParseError, source + ": order does not match table/elements size");
    return FiniteGroup::from_table(std::move(table), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, source + ": " + e.what());
  }
}

/// {"S": [...]} with element indices or element names.
inline ConnectionSet connection_set_from_json(const FiniteGroup& grp, const nlohmann::json& j,
                                              const std::string& source = "<input>") {
  try {
    std::vector<std::size_t> elems;
    for (const auto& x : j.at("S")) {
      if (x.is_number_unsigned()) {
        elems.push_back(x.get<std::size_t>());
      } else if (x.is_string()) {
        const auto idx = grp.find(x.get<std::string>());
        if (!idx) fail(ErrorCode::InvalidConnectionSet, source + ": unknown element '" + x.get<std::string>() + "'");
        elems.push_back(*idx);
      } else {
        fail(ErrorCode::ParseError, source + ": connection set entries must be indices or names");
      }
    }
    return ConnectionSet(grp, std::move(elems));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, source + ": " + e.what());
  }
}

inline nlohmann::json read_json_file(const std::string& path) {
  auto in = detail::open_input(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace graphca
