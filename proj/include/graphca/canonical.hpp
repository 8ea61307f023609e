#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "graphca/error.hpp"
#include "graphca/graph.hpp"

namespace graphca {

inline constexpr std::size_t default_canonical_limit = 16;

/// Isomorphism-invariant code of a small graph: vertex count plus the
/// lexicographically largest adjacency bit string (upper triangle read
/// column by column) over all orderings that respect the colour-refinement
/// cells. Equal codes iff isomorphic.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<char> bits;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical code together with one ordering that realises it:
/// order[p] is the vertex placed at position p.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> order;
};

namespace detail {

// 1-dimensional Weisfeiler-Leman refinement starting from degrees. Colour
// names are assigned by sorting signatures, so they are invariant.
inline std::vector<std::size_t> refine_colors(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> names;
    for (const auto& s : sig) names.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [key, value] : names) value = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = names[sig[v]];
    if (names.size() == classes) break;
    classes = names.size();
  }
  return color;
}

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g,
                                            std::size_t vertex_limit = default_canonical_limit) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_limit)
    fail(ErrorCode::SizeLimitExceeded, "canonical_form: graph has " + std::to_string(n) +
                                           " vertices, limit is " + std::to_string(vertex_limit));
  CanonicalLabeling result;
  result.form = {n, std::vector<char>(n < 2 ? 0 : n * (n - 1) / 2, 0)};
  if (n <= 1) {
    result.order.assign(n, 0);
    return result;
  }

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  const auto color = detail::refine_colors(g);
  // Position p is filled from the cell whose colour is sorted_colors[p].
  std::vector<std::size_t> sorted_colors(color);
  std::sort(sorted_colors.begin(), sorted_colors.end());

  auto twins = [&](Vertex x, Vertex y) {
    for (Vertex z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if (adj[x][z] != adj[y][z]) return false;
    }
    return true;
  };

  std::vector<char>& best = result.form.bits;
  std::size_t valid = 0;
  std::vector<Vertex> order;
  std::vector<char> used(n, 0);

  // Every leaf reached carries a code equal to the current best, and the
  // last leaf reached carries the final one.
  std::function<void(std::size_t)> search = [&](std::size_t p) {
    if (p == n) {
      result.order = order;
      return;
    }
    const std::size_t start = p < 2 ? 0 : p * (p - 1) / 2;
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || color[v] != sorted_colors[p]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); })) continue;
      tried.push_back(v);

      // Segment for position p: bits (i,p) for i<p.
      int cmp = 0;
      std::size_t idx = start;
      std::vector<char> segment(p);
      for (std::size_t i = 0; i < p; ++i) segment[i] = adj[order[i]][v];
      for (std::size_t i = 0; i < p && idx < valid; ++i, ++idx) {
        if (segment[i] != best[idx]) {
          cmp = segment[i] > best[idx] ? 1 : -1;
          break;
        }
      }
      if (cmp < 0) continue;
      if (cmp > 0 || start + p > valid) {
        std::copy(segment.begin(), segment.end(), best.begin() + static_cast<std::ptrdiff_t>(start));
        valid = start + p;
      }
      used[v] = 1;
      order.push_back(v);
      search(p + 1);
      order.pop_back();
      used[v] = 0;
    }
  };
  search(0);
  return result;
}

inline CanonicalForm canonical_form(const Graph& g,
                                    std::size_t vertex_limit = default_canonical_limit) {
  return canonical_labeling(g, vertex_limit).form;
}

inline std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

inline bool is_isomorphic(const Graph& a, const Graph& b,
                          std::size_t vertex_limit = default_canonical_limit) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return canonical_form(a, vertex_limit) == canonical_form(b, vertex_limit);
}

}  // namespace graphca
