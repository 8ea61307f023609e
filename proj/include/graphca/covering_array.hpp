#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphca/error.hpp"
#include "graphca/graph.hpp"
#include "graphca/orthogonal_array.hpp"
#include "graphca/symbol_matrix.hpp"

namespace graphca {

/// k x n array over Z_g. When bound, binding[r] is the graph vertex that
/// row r stands for.
struct CoveringArray {
  std::size_t symbols = 0;
  SymbolMatrix matrix;
  std::optional<std::vector<Vertex>> binding;
  std::vector<std::string> labels;  // optional, one per row

  std::size_t rows() const noexcept { return matrix.rows(); }
  std::size_t cols() const noexcept { return matrix.cols(); }

  std::string row_label(std::size_t r) const {
    return labels.empty() ? std::to_string(r) : labels.at(r);
  }
};

/// Binds row i to vertex i and copies the graph's vertex labels.
inline void bind_identity(CoveringArray& ca, const Graph& g) {
  if (ca.rows() != g.vertex_count())
    fail(ErrorCode::NotBound, "array has " + std::to_string(ca.rows()) + " rows but graph has " +
                                  std::to_string(g.vertex_count()) + " vertices");
  std::vector<Vertex> b(ca.rows());
  for (Vertex v = 0; v < b.size(); ++v) b[v] = v;
  ca.binding = std::move(b);
  ca.labels.clear();
  if (g.has_labels()) ca.labels = g.labels();
}

inline CoveringArray from_orthogonal_array(const OrthogonalArray& oa) {
  return CoveringArray{oa.symbols, oa.matrix, std::nullopt, {}};
}

inline void check_symbols(const CoveringArray& ca) {
  if (ca.symbols < 1) fail(ErrorCode::InvalidAlphabet, "alphabet is empty");
  for (std::size_t r = 0; r < ca.rows(); ++r)
    for (Symbol x : ca.matrix.row(r))
      if (x >= ca.symbols)
        fail(ErrorCode::InvalidSymbol, "symbol " + std::to_string(x) + " in row " + std::to_string(r) +
                                           " is outside Z_" + std::to_string(ca.symbols));
}

/// First ordered pair (a,b), in lexicographic order, that never appears as
/// (x_i, y_i); nullopt when every pair is covered.
inline std::optional<std::pair<Symbol, Symbol>> first_missing_pair(std::span<const Symbol> x,
                                                                   std::span<const Symbol> y,
                                                                   std::size_t g) {
  if (x.size() != y.size())
    fail(ErrorCode::LengthMismatch, "rows have lengths " + std::to_string(x.size()) + " and " +
                                        std::to_string(y.size()));
  std::vector<char> seen(g * g, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < g && y[i] < g) seen[x[i] * g + y[i]] = 1;
  for (std::size_t p = 0; p < g * g; ++p)
    if (!seen[p]) return std::pair<Symbol, Symbol>{static_cast<Symbol>(p / g), static_cast<Symbol>(p % g)};
  return std::nullopt;
}

/// Two rows are qualitatively independent when every ordered symbol pair
/// occurs in some column.
inline bool qualitatively_independent(std::span<const Symbol> x, std::span<const Symbol> y,
                                      std::size_t g) {
  return !first_missing_pair(x, y, g).has_value();
}

struct EdgeFailure {
  Edge edge;
  Symbol missing_first = 0;
  Symbol missing_second = 0;
};

struct VerifyReport {
  bool ok = true;
  std::vector<EdgeFailure> failing_edges;
};

/// Row index for each vertex, after checking the binding is a bijection.
inline std::vector<std::size_t> rows_by_vertex(const CoveringArray& ca, const Graph& g) {
  if (!ca.binding) fail(ErrorCode::NotBound, "covering array is not bound to a graph");
  const auto& b = *ca.binding;
  if (b.size() != ca.rows() || ca.rows() != g.vertex_count())
    fail(ErrorCode::NotBound, "binding covers " + std::to_string(b.size()) + " rows, graph has " +
                                  std::to_string(g.vertex_count()) + " vertices");
  std::vector<std::size_t> row_of(g.vertex_count(), ca.rows());
  for (std::size_t r = 0; r < b.size(); ++r) {
    if (b[r] >= g.vertex_count() || row_of[b[r]] != ca.rows())
      fail(ErrorCode::NotBound, "binding is not a bijection onto the vertices");
    row_of[b[r]] = r;
  }
  return row_of;
}

/// Checks every edge's pair of rows for qualitative independence. Each
/// failing edge is reported with its first missing pair, oriented from the
/// lower-numbered vertex.
inline VerifyReport verify_ca(const CoveringArray& ca, const Graph& g) {
  const auto row_of = rows_by_vertex(ca, g);
  VerifyReport report;
  for (const auto& e : g.edges()) {
    auto missing = first_missing_pair(ca.matrix.row(row_of[e.u]), ca.matrix.row(row_of[e.v]), ca.symbols);
    if (missing) report.failing_edges.push_back({e, missing->first, missing->second});
  }
  report.ok = report.failing_edges.empty();
  return report;
}

/// Applies, per selected row, the transposition swapping that row's
/// first-column symbol with `target`. Rows not listed are left alone.
inline CoveringArray standardize_on_symbol(const CoveringArray& ca, Symbol target,
                                           std::span<const std::size_t> rows) {
  if (target >= ca.symbols)
    fail(ErrorCode::InvalidSymbol, "symbol " + std::to_string(target) + " is outside Z_" +
                                       std::to_string(ca.symbols));
  CoveringArray out = ca;
  if (ca.cols() == 0) return out;
  for (std::size_t r : rows) {
    if (r >= ca.rows()) fail(ErrorCode::IndexOutOfRange, "row " + std::to_string(r) + " out of range");
    const Symbol first = out.matrix.at(r, 0);
    if (first == target) continue;
    for (Symbol& x : out.matrix.row(r)) {
      if (x == first) x = target;
      else if (x == target) x = first;
    }
  }
  return out;
}

inline CoveringArray standardize_on_symbol(const CoveringArray& ca, Symbol target) {
  std::vector<std::size_t> all(ca.rows());
  for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
  return standardize_on_symbol(ca, target, all);
}

/// First column becomes all zero.
inline CoveringArray standardize(const CoveringArray& ca) { return standardize_on_symbol(ca, 0); }

/// Smallest u >= 0 with base^u >= x.
inline std::size_t ceil_log(std::size_t base, std::size_t x) {
  std::size_t u = 0;
  for (std::size_t p = 1; p < x; p *= base) ++u;
  return u;
}

/// k pairwise qualitatively independent rows of length u*g^2, where
/// u = ceil(log_s k) (at least 1) and s is the composite OA row count. Row t
/// concatenates OA rows R_{i1} ... R_{iu} for the t-th tuple in lexicographic
/// order; two distinct tuples differ in some block, and that block's OA row
/// pair covers every ordered pair.
inline CoveringArray generic_ca(std::size_t k, std::uint32_t g) {
  if (k < 1) fail(ErrorCode::PreconditionFailed, "generic_ca needs at least one row");
  const OrthogonalArray oa = bush_oa(g);
  const std::size_t s = oa.rows();
  const std::size_t u = std::max<std::size_t>(1, ceil_log(s, k));
  const std::size_t block = std::size_t{g} * g;
  CoveringArray ca{g, SymbolMatrix(k, u * block), std::nullopt, {}};
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t rest = t;
    for (std::size_t pos = u; pos-- > 0;) {
      const std::size_t oa_row = rest % s;
      rest /= s;
      for (std::size_t c = 0; c < block; ++c) ca.matrix.at(t, pos * block + c) = oa.matrix.at(oa_row, c);
    }
  }
  return ca;
}

}  // namespace graphca
