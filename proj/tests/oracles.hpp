#pragma once

// Brute-force reference implementations used to check the library. None of
// them call the library's own algorithms beyond the Graph container.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "graphca/graphca.hpp"

namespace oracle {

using graphca::Graph;
using graphca::Vertex;

inline bool covers_all_pairs(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                             std::size_t g) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t i = 0; i < x.size(); ++i) seen.insert({x[i], y[i]});
  for (std::uint32_t a = 0; a < g; ++a)
    for (std::uint32_t b = 0; b < g; ++b)
      if (!seen.count({a, b})) return false;
  return true;
}

inline std::vector<std::uint32_t> row_of(const graphca::SymbolMatrix& m, std::size_t r) {
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

/// Row i is vertex i; checks every adjacent pair found by scanning all pairs.
inline bool is_covering_array(const graphca::SymbolMatrix& m, std::size_t g, const Graph& graph) {
  if (m.rows() != graph.vertex_count()) return false;
  for (Vertex u = 0; u < graph.vertex_count(); ++u)
    for (Vertex v = u + 1; v < graph.vertex_count(); ++v)
      if (graph.has_edge(u, v) && !covers_all_pairs(row_of(m, u), row_of(m, v), g)) return false;
  return true;
}

inline bool adjacent_or_equal(const Graph& g, Vertex a, Vertex b) { return a == b || g.has_edge(a, b); }

/// Adjacency in each product, written straight from the definitions.
inline bool product_adjacent(graphca::ProductKind op, const std::vector<Graph>& fs, const graphca::Tuple& x,
                             const graphca::Tuple& y) {
  if (x == y) return false;
  const std::size_t k = fs.size();
  switch (op) {
    case graphca::ProductKind::Cartesian: {
      std::size_t diff = 0, where = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (x[i] != y[i]) ++diff, where = i;
      return diff == 1 && fs[where].has_edge(x[where], y[where]);
    }
    case graphca::ProductKind::Direct:
      for (std::size_t i = 0; i < k; ++i)
        if (!fs[i].has_edge(x[i], y[i])) return false;
      return true;
    case graphca::ProductKind::Strong:
      for (std::size_t i = 0; i < k; ++i)
        if (!adjacent_or_equal(fs[i], x[i], y[i])) return false;
      return true;
    case graphca::ProductKind::Lexicographic:
      for (std::size_t i = 0; i < k; ++i)
        if (x[i] != y[i]) return fs[i].has_edge(x[i], y[i]);
      return false;
  }
  return false;
}

/// All tuples in row-major order (last coordinate fastest).
inline std::vector<graphca::Tuple> all_tuples(const std::vector<Graph>& fs) {
  std::vector<graphca::Tuple> out{graphca::Tuple{}};
  for (const auto& f : fs) {
    std::vector<graphca::Tuple> next;
    for (const auto& t : out)
      for (Vertex v = 0; v < f.vertex_count(); ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

inline bool colorable(const Graph& g, std::size_t k, std::vector<std::uint32_t>& c, Vertex v) {
  if (v == g.vertex_count()) return true;
  for (std::uint32_t col = 0; col < k; ++col) {
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u)
      if (g.has_edge(u, v) && c[u] == col) ok = false;
    if (!ok) continue;
    c[v] = col;
    if (colorable(g, k, c, v + 1)) return true;
  }
  return false;
}

inline std::size_t chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  std::vector<std::uint32_t> c(g.vertex_count());
  for (std::size_t k = 1;; ++k)
    if (colorable(g, k, c, 0)) return k;
}

/// Largest clique by subset enumeration (n <= 20).
inline std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (Vertex u = 0; u < n && clique; ++u)
      for (Vertex v = u + 1; v < n && clique; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v)) clique = false;
    if (clique) best = size;
  }
  return best;
}

/// Isomorphism by trying every permutation (n <= 9).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges())
      if (!b.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Smallest prime-power component of g by trial division.
inline std::size_t smallest_prime_power_component(std::size_t g) {
  std::size_t best = g;
  for (std::size_t p = 2; g > 1; ++p) {
    if (g % p) continue;
    std::size_t q = 1;
    while (g % p == 0) g /= p, q *= p;
    best = std::min(best, q);
  }
  return best;
}

inline bool is_prime_power(std::size_t q) {
  if (q < 2) return false;
  std::size_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace oracle
