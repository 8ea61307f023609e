#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "graphca/error.hpp"
#include "graphca/graph.hpp"

namespace graphca {

inline constexpr std::size_t default_chromatic_limit = 16;
inline constexpr std::size_t default_clique_limit = 20;

namespace detail {

// Per-vertex count of coloured neighbours by colour; saturation is the
// number of distinct colours seen.
class Saturation {
 public:
  explicit Saturation(std::size_t n) : counts_(n, std::vector<std::uint32_t>(n + 1, 0)), size_(n, 0) {}

  void add(Vertex v, std::uint32_t c) {
    if (counts_[v][c]++ == 0) ++size_[v];
  }
  void remove(Vertex v, std::uint32_t c) {
    if (--counts_[v][c] == 0) --size_[v];
  }
  bool blocked(Vertex v, std::uint32_t c) const { return counts_[v][c] != 0; }
  std::size_t size(Vertex v) const { return size_[v]; }

 private:
  std::vector<std::vector<std::uint32_t>> counts_;
  std::vector<std::size_t> size_;
};

inline constexpr std::uint32_t uncolored = ~std::uint32_t{0};

// DSATUR choice: max saturation, then max degree into uncoloured vertices,
// then lowest index.
inline Vertex pick_dsatur_vertex(const Graph& g, const std::vector<std::uint32_t>& colors,
                                 const Saturation& sat) {
  Vertex best = 0;
  bool found = false;
  std::size_t best_sat = 0, best_deg = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (colors[v] != uncolored) continue;
    std::size_t deg = 0;
    for (Vertex w : g.neighbors(v))
      if (colors[w] == uncolored) ++deg;
    const std::size_t s = sat.size(v);
    if (!found || s > best_sat || (s == best_sat && deg > best_deg)) {
      best = v;
      best_sat = s;
      best_deg = deg;
      found = true;
    }
  }
  return best;
}

inline void check_limit(const Graph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit)
    fail(ErrorCode::SizeLimitExceeded, std::string(what) + ": graph has " +
                                           std::to_string(g.vertex_count()) +
                                           " vertices, limit is " + std::to_string(limit));
}

}  // namespace detail

/// DSATUR greedy colouring. Deterministic: ties fall to the lowest vertex
/// index, and each vertex takes the smallest colour free among its
/// neighbours, so at most max_degree+1 colours are used.
inline ProperColoring greedy_coloring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> colors(n, detail::uncolored);
  detail::Saturation sat(n);
  std::uint32_t used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex v = detail::pick_dsatur_vertex(g, colors, sat);
    std::uint32_t c = 0;
    while (sat.blocked(v, c)) ++c;
    colors[v] = c;
    used = std::max(used, c + 1);
    for (Vertex w : g.neighbors(v)) sat.add(w, c);
  }
  return {std::move(colors), used};
}

/// Maximum clique by branch and bound with greedy-colouring bounds.
/// Returns the clique's vertices in increasing order.
inline std::vector<Vertex> max_clique_vertices(const Graph& g,
                                               std::size_t vertex_limit = default_clique_limit) {
  detail::check_limit(g, vertex_limit, "max_clique");
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  std::vector<Vertex> best, current;

  // Orders `candidates` by greedy colour class and writes each vertex's
  // colour number into `bounds`; a branch at position i can add at most
  // bounds[i] more vertices.
  auto color_sort = [&](std::vector<Vertex>& candidates, std::vector<std::size_t>& bounds) {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : candidates) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool conflict = false;
        for (Vertex w : classes[k])
          if (adj[v][w]) {
            conflict = true;
            break;
          }
        if (!conflict) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    candidates.clear();
    bounds.clear();
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (Vertex v : classes[k]) {
        candidates.push_back(v);
        bounds.push_back(k + 1);
      }
  };

  std::function<void(std::vector<Vertex>)> expand = [&](std::vector<Vertex> candidates) {
    std::vector<std::size_t> bounds;
    color_sort(candidates, bounds);
    while (!candidates.empty()) {
      if (current.size() + bounds.back() <= best.size()) return;
      Vertex v = candidates.back();
      candidates.pop_back();
      bounds.pop_back();
      current.push_back(v);
      std::vector<Vertex> next;
      for (Vertex w : candidates)
        if (adj[v][w]) next.push_back(w);
      if (next.empty()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(std::move(next));
      }
      current.pop_back();
    }
  };

  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  expand(all);
  std::sort(best.begin(), best.end());
  return best;
}

inline std::size_t max_clique(const Graph& g, std::size_t vertex_limit = default_clique_limit) {
  return max_clique_vertices(g, vertex_limit).size();
}

/// Optimal colouring by DSATUR branch and bound, seeded with the greedy
/// colouring as the incumbent and the maximum clique as the lower bound.
inline ProperColoring exact_coloring(const Graph& g,
                                     std::size_t vertex_limit = default_chromatic_limit) {
  detail::check_limit(g, vertex_limit, "exact_chromatic_number");
  const std::size_t n = g.vertex_count();
  ProperColoring best = greedy_coloring(g);
  if (n == 0) return best;
  const std::size_t lower = max_clique(g, n);
  if (best.color_count <= lower) return best;

  std::vector<std::uint32_t> colors(n, detail::uncolored);
  detail::Saturation sat(n);
  std::size_t best_count = best.color_count;

  std::function<void(std::size_t, std::uint32_t)> search = [&](std::size_t colored,
                                                               std::uint32_t used) {
    if (used >= best_count) return;
    if (colored == n) {
      best_count = used;
      best = {colors, used};
      return;
    }
    Vertex v = detail::pick_dsatur_vertex(g, colors, sat);
    auto assign = [&](std::uint32_t c, std::uint32_t next_used) {
      colors[v] = c;
      for (Vertex w : g.neighbors(v)) sat.add(w, c);
      search(colored + 1, next_used);
      for (Vertex w : g.neighbors(v)) sat.remove(w, c);
      colors[v] = detail::uncolored;
    };
    for (std::uint32_t c = 0; c < used; ++c) {
      if (sat.blocked(v, c)) continue;
      assign(c, used);
      if (best_count <= lower) return;
    }
    if (used + 1 < best_count) assign(used, used + 1);
  };
  search(0, 0);
  return best;
}

inline std::size_t exact_chromatic_number(const Graph& g,
                                          std::size_t vertex_limit = default_chromatic_limit) {
  return exact_coloring(g, vertex_limit).color_count;
}

}  // namespace graphca
