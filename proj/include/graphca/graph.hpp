#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphca/error.hpp"

namespace graphca {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
/// sorted so edge lookup is a binary search and edge enumeration is
/// lexicographic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
    for (const auto& e : edges) add_edge(e.u, e.v);
  }

  /// Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    if (u == v) fail(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    if (u >= vertex_count() || v >= vertex_count())
      fail(ErrorCode::InvalidGraph, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} out of range for " + std::to_string(vertex_count()) +
                                        " vertices");
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& n : adjacency_) best = std::max(best, n.size());
    return best;
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  /// Edges as (u,v) with u<v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != vertex_count())
      fail(ErrorCode::InvalidGraph, "label count does not match vertex count");
    labels_ = std::move(labels);
  }

  /// Vertex label, or its 0-based index when the graph is unlabelled.
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
  }

  /// Structural equality on the same vertex numbering; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// Vertex colouring; colours are 0..color_count-1.
struct ProperColoring {
  std::vector<std::uint32_t> colors;
  std::size_t color_count = 0;
};

inline bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> colors) {
  if (colors.size() != g.vertex_count()) return false;
  for (const auto& e : g.edges())
    if (colors[e.u] == colors[e.v]) return false;
  return true;
}

inline std::size_t distinct_color_count(std::span<const std::uint32_t> colors) {
  return std::set<std::uint32_t>(colors.begin(), colors.end()).size();
}

/// Checks the colouring is proper and that color_count is honest. Colours
/// need not be contiguous.
inline void validate_coloring(const Graph& g, const ProperColoring& c) {
  if (!is_proper_coloring(g, c.colors))
    fail(ErrorCode::InvalidColoring, "colouring is not proper for the graph");
  if (c.color_count != distinct_color_count(c.colors))
    fail(ErrorCode::InvalidColoring, "color_count does not match the colours used");
}

// Generators. Paths are counted by vertices: path_graph(m) has m vertices.

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t m) {
  if (m == 0) fail(ErrorCode::InvalidGraph, "path needs at least one vertex");
  Graph g(m);
  for (Vertex i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorCode::InvalidGraph, "cycle needs at least three vertices");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return g;
}

inline Graph complete_graph(std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidGraph, "complete graph needs at least one vertex");
  Graph g(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

/// Circulant G(n,S): i ~ j iff (i-j) mod n lies in S.
inline Graph circulant_graph(std::size_t n, std::span<const std::size_t> connection_set) {
  if (n == 0) fail(ErrorCode::InvalidGraph, "circulant needs at least one vertex");
  std::set<std::size_t> s(connection_set.begin(), connection_set.end());
  for (std::size_t x : s) {
    if (x % n == 0 || x >= n)
      fail(ErrorCode::InvalidConnectionSet, "connection set element " + std::to_string(x) +
                                                " is not in Z_" + std::to_string(n) + " \\ {0}");
    if (!s.contains((n - x) % n))
      fail(ErrorCode::InvalidConnectionSet,
           "connection set is not inverse-closed: missing " + std::to_string((n - x) % n));
  }
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t x : s) {
      auto j = static_cast<Vertex>((i + x) % n);
      if (i < j) g.add_edge(i, j);
    }
  return g;
}

struct GraphFamily {
  enum class Kind { Path, Cycle, Complete, Circulant };
  Kind kind = Kind::Path;
  std::size_t n = 1;
  std::vector<std::size_t> connection_set;
};

inline Graph make_graph(const GraphFamily& family) {
  switch (family.kind) {
    case GraphFamily::Kind::Path: return path_graph(family.n);
    case GraphFamily::Kind::Cycle: return cycle_graph(family.n);
    case GraphFamily::Kind::Complete: return complete_graph(family.n);
    case GraphFamily::Kind::Circulant: return circulant_graph(family.n, family.connection_set);
  }
  fail(ErrorCode::InvalidGraph, "unknown graph family");
}

/// BFS reachability from vertex 0. Graphs with at most one vertex count as
/// connected.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == n;
}

/// BFS 2-colouring, or nullopt when an odd cycle exists. Each component is
/// rooted at its lowest vertex with colour 0.
inline std::optional<ProperColoring> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> color(n, unset);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != unset) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == unset) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  ProperColoring out{std::move(color), 0};
  out.color_count = distinct_color_count(out.colors);
  return out;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

}  // namespace graphca
