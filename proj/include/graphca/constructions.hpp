#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphca/coloring.hpp"
#include "graphca/covering_array.hpp"
#include "graphca/error.hpp"
#include "graphca/graph.hpp"
#include "graphca/group.hpp"
#include "graphca/product.hpp"

namespace graphca {

/// A covering array together with the graph its rows are bound to.
struct BoundArray {
  Graph graph;
  CoveringArray ca;
};

struct ConstructionReport {
  std::string strategy;
  std::vector<std::size_t> input_sizes;
  std::size_t output_size = 0;
  std::size_t lower_bound = 0;  // g^2
  std::vector<std::string> notes;
};

struct ConstructionResult {
  Graph graph;
  CoveringArray ca;
  ConstructionReport report;
  std::vector<Tuple> coords;  // product coordinates, empty for single graphs
};

namespace detail {

// Re-verifies every input and returns its vertex -> row map.
inline std::vector<std::vector<std::size_t>> check_inputs(std::span<const BoundArray> inputs,
                                                          std::size_t min_count) {
  if (inputs.size() < min_count)
    fail(ErrorCode::PreconditionFailed, "construction needs at least " + std::to_string(min_count) +
                                            " input arrays, got " + std::to_string(inputs.size()));
  std::vector<std::vector<std::size_t>> row_of;
  const std::size_t g = inputs.front().ca.symbols;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& in = inputs[i];
    if (in.ca.symbols != g)
      fail(ErrorCode::InvalidInputCA, "input " + std::to_string(i) + " uses " +
                                          std::to_string(in.ca.symbols) + " symbols, expected " +
                                          std::to_string(g));
    if (g < 2) fail(ErrorCode::InvalidAlphabet, "alphabet size must be at least 2");
    if (in.ca.cols() == 0) fail(ErrorCode::InvalidInputCA, "input " + std::to_string(i) + " has no columns");
    check_symbols(in.ca);
    const auto report = verify_ca(in.ca, in.graph);
    if (!report.ok)
      fail(ErrorCode::InvalidInputCA, "input " + std::to_string(i) + " fails on " +
                                          std::to_string(report.failing_edges.size()) + " edge(s)");
    row_of.push_back(rows_by_vertex(in.ca, in.graph));
  }
  return row_of;
}

inline ConstructionResult finish(std::string strategy, std::span<const BoundArray> inputs,
                                 Graph graph, CoveringArray ca, std::vector<Tuple> coords) {
  bind_identity(ca, graph);
  const auto check = verify_ca(ca, graph);
  if (!check.ok)
    fail(ErrorCode::ConstructionFailed,
         strategy + " output fails on " + std::to_string(check.failing_edges.size()) + " edge(s)");
  ConstructionResult r;
  r.report.strategy = std::move(strategy);
  for (const auto& in : inputs) r.report.input_sizes.push_back(in.ca.cols());
  r.report.output_size = ca.cols();
  r.report.lower_bound = ca.symbols * ca.symbols;
  r.graph = std::move(graph);
  r.ca = std::move(ca);
  r.coords = std::move(coords);
  return r;
}

inline std::vector<Graph> graphs_of(std::span<const BoundArray> inputs) {
  std::vector<Graph> out;
  for (const auto& in : inputs) out.push_back(in.graph);
  return out;
}

// Row (v1..vk) = rows v_i of each standardized input, the first column
// dropped from inputs listed in `drop_first`.
inline SymbolMatrix concatenate_rows(const ProductGraph& p, const std::vector<CoveringArray>& parts,
                                     const std::vector<std::vector<std::size_t>>& row_of,
                                     const std::vector<char>& drop_first) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) width += parts[i].cols() - (drop_first[i] ? 1 : 0);
  SymbolMatrix m(p.coords.size(), width);
  for (std::size_t v = 0; v < p.coords.size(); ++v) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto row = parts[i].matrix.row(row_of[i][p.coords[v][i]]);
      for (std::size_t c = drop_first[i] ? 1 : 0; c < row.size(); ++c) m.at(v, col++) = row[c];
    }
  }
  return m;
}

inline ConstructionResult concat_minus_k(std::span<const BoundArray> inputs, ProductKind op,
                                         std::string strategy) {
  const auto row_of = check_inputs(inputs, 2);
  const std::size_t g = inputs.front().ca.symbols;
  // Inputs 0..g-1 get constant first columns on symbols 0..g-1, later ones
  // on symbol 0.
  std::vector<CoveringArray> parts;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    parts.push_back(standardize_on_symbol(inputs[i].ca, static_cast<Symbol>(i < g ? i : 0)));
  ProductGraph p = product(op, graphs_of(inputs));
  CoveringArray ca{g, concatenate_rows(p, parts, row_of, std::vector<char>(inputs.size(), 1)), std::nullopt, {}};
  auto r = finish(std::move(strategy), inputs, std::move(p.graph), std::move(ca), std::move(p.coords));
  r.report.notes.push_back("size = sum n_i - k");
  return r;
}

}  // namespace detail

/// CA on the strong product of size sum(n_i) - k.
inline ConstructionResult strong_concat(std::span<const BoundArray> inputs) {
  return detail::concat_minus_k(inputs, ProductKind::Strong, "strong");
}

/// The strong-product array bound to the Cartesian or direct product, whose
/// edges are all strong-product edges.
inline ConstructionResult box_or_direct_concat(std::span<const BoundArray> inputs, ProductKind op) {
  if (op != ProductKind::Cartesian && op != ProductKind::Direct)
    fail(ErrorCode::PreconditionFailed, "box_or_direct_concat takes the cartesian or direct product");
  return detail::concat_minus_k(inputs, op, op == ProductKind::Cartesian ? "box" : "direct-concat");
}

/// CA on the direct product of size min n_i: every vertex takes the row of
/// its coordinate in the smallest input (lowest index on ties), which is
/// valid because that projection is a homomorphism.
inline ConstructionResult direct_min(std::span<const BoundArray> inputs) {
  const auto row_of = detail::check_inputs(inputs, 2);
  std::size_t j = 0;
  for (std::size_t i = 1; i < inputs.size(); ++i)
    if (inputs[i].ca.cols() < inputs[j].ca.cols()) j = i;
  ProductGraph p = product(ProductKind::Direct, detail::graphs_of(inputs));
  const auto& src = inputs[j].ca;
  CoveringArray ca{src.symbols, SymbolMatrix(p.coords.size(), src.cols()), std::nullopt, {}};
  for (std::size_t v = 0; v < p.coords.size(); ++v) {
    const auto row = src.matrix.row(row_of[j][p.coords[v][j]]);
    std::copy(row.begin(), row.end(), ca.matrix.row(v).begin());
  }
  auto r = detail::finish("direct", inputs, std::move(p.graph), std::move(ca), std::move(p.coords));
  r.report.notes.push_back("rows taken from input " + std::to_string(j) + "; size = min n_i");
  return r;
}

/// CA on the lexicographic product of size sum(n_i) - k + 1. All inputs are
/// standardized on symbol 0; the first keeps its constant column, which
/// supplies the pair (0,0) that later blocks may lack.
inline ConstructionResult lex_concat(std::span<const BoundArray> inputs) {
  const auto row_of = detail::check_inputs(inputs, 2);
  const std::size_t g = inputs.front().ca.symbols;
  std::vector<CoveringArray> parts;
  for (const auto& in : inputs) parts.push_back(standardize(in.ca));
  std::vector<char> drop(inputs.size(), 1);
  drop[0] = 0;
  ProductGraph p = product(ProductKind::Lexicographic, detail::graphs_of(inputs));
  CoveringArray ca{g, detail::concatenate_rows(p, parts, row_of, drop), std::nullopt, {}};
  auto r = detail::finish("lex", inputs, std::move(p.graph), std::move(ca), std::move(p.coords));
  r.report.notes.push_back("size = sum n_i - k + 1");
  return r;
}

/// Colouring used when the caller supplies none: DSATUR, improved to an
/// optimal colouring when the graph is small and DSATUR exceeds the clique
/// number.
inline ProperColoring auto_coloring(const Graph& g) {
  ProperColoring c = greedy_coloring(g);
  if (g.vertex_count() <= default_chromatic_limit && c.color_count > max_clique(g, g.vertex_count()))
    c = exact_coloring(g, g.vertex_count());
  return c;
}

namespace detail {

// Renumbers colours to 0..c-1 in increasing order of the original values.
inline std::vector<std::uint32_t> compact_colors(const std::vector<std::uint32_t>& colors) {
  std::map<std::uint32_t, std::uint32_t> rename;
  for (auto c : colors) rename.emplace(c, 0);
  std::uint32_t next = 0;
  for (auto& [from, to] : rename) to = next++;
  std::vector<std::uint32_t> out;
  for (auto c : colors) out.push_back(rename[c]);
  return out;
}

}  // namespace detail

/// Assigns row c of generic_ca(color_count, g) to every vertex of colour c.
inline ConstructionResult coloring_construction(const Graph& graph, std::uint32_t g,
                                                std::optional<ProperColoring> coloring = std::nullopt) {
  if (g < 2) fail(ErrorCode::InvalidAlphabet, "alphabet size must be at least 2");
  if (graph.vertex_count() == 0) fail(ErrorCode::InvalidGraph, "graph has no vertices");
  const bool supplied = coloring.has_value();
  if (coloring) validate_coloring(graph, *coloring);
  else coloring = auto_coloring(graph);
  const auto colors = detail::compact_colors(coloring->colors);
  const std::size_t used = distinct_color_count(colors);
  const CoveringArray rows = generic_ca(used, g);
  CoveringArray ca{g, SymbolMatrix(graph.vertex_count(), rows.cols()), std::nullopt, {}};
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    const auto src = rows.matrix.row(colors[v]);
    std::copy(src.begin(), src.end(), ca.matrix.row(v).begin());
  }
  auto r = detail::finish("coloring", {}, graph, std::move(ca), {});
  r.report.notes.push_back(std::string(supplied ? "supplied" : "automatic") + " colouring with " +
                           std::to_string(used) + " colours");
  r.report.notes.push_back("size = u*g^2 with u = " + std::to_string(r.ca.cols() / (std::size_t{g} * g)));
  return r;
}

namespace detail {

// Row (u,v) of the Cartesian product G1 x G2 is row sigma_{colour(v)}(u) of
// the G1 array.
inline ConstructionResult translate_by_color(const BoundArray& input, const Graph& g2,
                                             const std::vector<std::uint32_t>& colors,
                                             const std::vector<std::vector<Vertex>>& sigma,
                                             std::string strategy) {
  const BoundArray inputs[] = {input};
  const auto row_of = check_inputs(inputs, 1);
  ProductGraph p = product(ProductKind::Cartesian, {input.graph, g2});
  const auto& src = input.ca;
  CoveringArray ca{src.symbols, SymbolMatrix(p.coords.size(), src.cols()), std::nullopt, {}};
  for (std::size_t x = 0; x < p.coords.size(); ++x) {
    const Vertex u = p.coords[x][0], v = p.coords[x][1];
    const auto row = src.matrix.row(row_of[0][sigma.at(colors[v])[u]]);
    std::copy(row.begin(), row.end(), ca.matrix.row(x).begin());
  }
  auto r = finish(std::move(strategy), inputs, std::move(p.graph), std::move(ca), std::move(p.coords));
  r.report.notes.push_back("output size equals the G1 array size n1");
  return r;
}

}  // namespace detail

/// Checks that phi is an automorphism of g with phi(u) adjacent to u for
/// every u; throws InvalidAutomorphism naming the first violation.
inline void check_neighbour_automorphism(const Graph& g, const std::vector<Vertex>& phi) {
  const std::size_t n = g.vertex_count();
  if (phi.size() != n) fail(ErrorCode::InvalidAutomorphism, "map size does not match the graph");
  std::vector<char> hit(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (phi[u] >= n || hit[phi[u]]++) fail(ErrorCode::InvalidAutomorphism, "map is not a bijection");
    if (!g.has_edge(u, phi[u]))
      fail(ErrorCode::InvalidAutomorphism, "phi(" + std::to_string(u) + ") = " + std::to_string(phi[u]) +
                                               " is not a neighbour of " + std::to_string(u));
  }
  for (const auto& e : g.edges())
    if (!g.has_edge(phi[e.u], phi[e.v]))
      fail(ErrorCode::InvalidAutomorphism, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                               "} is not preserved");
}

/// Vertex map k -> k + shift (mod n) on a circulant.
inline std::vector<Vertex> circulant_shift(std::size_t n, std::size_t shift) {
  std::vector<Vertex> phi(n);
  for (std::size_t k = 0; k < n; ++k) phi[k] = static_cast<Vertex>((k + shift) % n);
  return phi;
}

/// CA on G1 x G2 (Cartesian) with the size of the G1 array, for bipartite
/// G2 and a fixed-point-free automorphism phi sending each vertex to a
/// neighbour: colour-0 layers copy G1's rows, colour-1 layers use phi.
inline ConstructionResult cayley_box_2color(const BoundArray& g1, const std::vector<Vertex>& phi,
                                            const Graph& g2) {
  check_neighbour_automorphism(g1.graph, phi);
  const auto two = bipartition(g2);
  if (!two) fail(ErrorCode::NotBipartite, "second factor has an odd cycle");
  std::vector<Vertex> identity(phi.size());
  for (Vertex u = 0; u < identity.size(); ++u) identity[u] = u;
  return detail::translate_by_color(g1, g2, two->colors, {identity, phi}, "cayley2");
}

namespace detail {

inline std::vector<std::uint32_t> coloring_with_at_most(const Graph& g, std::size_t colors,
                                                        std::optional<ProperColoring> supplied) {
  ProperColoring c;
  if (supplied) {
    validate_coloring(g, *supplied);
    c = *supplied;
  } else {
    c = greedy_coloring(g);
    if (c.color_count > colors && g.vertex_count() <= default_chromatic_limit) c = exact_coloring(g);
  }
  auto compact = compact_colors(c.colors);
  if (distinct_color_count(compact) > colors)
    fail(ErrorCode::PreconditionFailed, "no " + std::to_string(colors) + "-colouring of the second factor found (" +
                                            std::to_string(distinct_color_count(compact)) + " colours used)");
  return compact;
}

inline void require_cayley_input(const BoundArray& g1, const FiniteGroup& grp, const ConnectionSet& s) {
  if (!(g1.graph == cayley_graph(grp, s)))
    fail(ErrorCode::PreconditionFailed, "input graph is not Cay(H,S) for the given group and connection set");
}

inline void require(bool condition, const std::string& name) {
  if (!condition) fail(ErrorCode::PreconditionFailed, "condition failed: " + name);
}

}  // namespace detail

/// Cayley graph G1 = Cay(H,S) with S = S^-1, S^S = S and s1 != s2, s1 s2 in S:
/// CA on G1 x G2 for 3-colourable G2, rows translated by u, s1 u, s2^-1 u.
inline ConstructionResult cayley_box_3color(const BoundArray& g1, const FiniteGroup& grp,
                                            const ConnectionSet& s, Witness witness, const Graph& g2,
                                            std::optional<ProperColoring> g2_coloring = std::nullopt) {
  detail::require_cayley_input(g1, grp, s);
  const auto report = check_connection_set(grp, s);
  const auto [s1, s2] = witness;
  detail::require(report.inverse_closed, "S = S^-1");
  detail::require(report.conjugation_closed, "S^S = S");
  detail::require(s.contains(s1) && s.contains(s2), "s1, s2 in S");
  detail::require(s1 != s2, "s1 != s2");
  detail::require(s.contains(grp.mul(s1, s2)), "s1 s2 in S");
  const auto colors = detail::coloring_with_at_most(g2, 3, std::move(g2_coloring));
  std::vector<std::vector<Vertex>> sigma = {left_translation(grp, grp.identity()), left_translation(grp, s1),
                                            left_translation(grp, grp.inverse(s2))};
  auto r = detail::translate_by_color(g1, g2, colors, sigma, "cayley3");
  if (!report.generates) r.report.notes.push_back("S does not generate H; G1 is disconnected");
  return r;
}

/// As cayley_box_3color with s1 s2^-1 also in S: 4-colourable G2, rows
/// translated by u, s1 u, s2 u, s1 s2 u.
inline ConstructionResult cayley_box_4color(const BoundArray& g1, const FiniteGroup& grp,
                                            const ConnectionSet& s, Witness witness, const Graph& g2,
                                            std::optional<ProperColoring> g2_coloring = std::nullopt) {
  detail::require_cayley_input(g1, grp, s);
  const auto report = check_connection_set(grp, s);
  const auto [s1, s2] = witness;
  detail::require(report.inverse_closed, "S = S^-1");
  detail::require(report.conjugation_closed, "S^S = S");
  detail::require(s.contains(s1) && s.contains(s2), "s1, s2 in S");
  detail::require(s1 != s2, "s1 != s2");
  detail::require(s.contains(grp.mul(s1, s2)), "s1 s2 in S");
  detail::require(s.contains(grp.mul(s1, grp.inverse(s2))), "s1 s2^-1 in S");
  const auto colors = detail::coloring_with_at_most(g2, 4, std::move(g2_coloring));
  std::vector<std::vector<Vertex>> sigma = {left_translation(grp, grp.identity()), left_translation(grp, s1),
                                            left_translation(grp, s2), left_translation(grp, grp.mul(s1, s2))};
  auto r = detail::translate_by_color(g1, g2, colors, sigma, "cayley4");
  if (!report.generates) r.report.notes.push_back("S does not generate H; G1 is disconnected");
  return r;
}

}  // namespace graphca
