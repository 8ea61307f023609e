#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "graphca/canonical.hpp"
#include "graphca/error.hpp"
#include "graphca/graph.hpp"
#include "graphca/product.hpp"

namespace graphca {

/// Prime factors with respect to the Cartesian product together with the
/// coordinate map V(source) -> V(G_1) x ... x V(G_k).
struct Factorization {
  std::vector<Graph> factors;
  std::vector<Tuple> coords;
  Graph source;
};

inline constexpr std::size_t oracle_vertex_limit = 12;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Rebuilds the Cartesian product of the factors and checks that the
/// coordinate map is a bijection carrying E(source) exactly onto it.
inline bool certify(const Factorization& f) {
  const std::size_t n = f.source.vertex_count();
  if (f.coords.size() != n || f.factors.empty()) return false;
  std::vector<std::size_t> radices;
  for (const auto& factor : f.factors) radices.push_back(factor.vertex_count());
  const TupleIndexer indexer(radices);
  if (indexer.size() != n) return false;
  std::vector<char> hit(n, 0);
  std::vector<std::size_t> image(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Tuple& t = f.coords[v];
    if (t.size() != radices.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] >= radices[i]) return false;
    image[v] = indexer.index(t);
    if (hit[image[v]]) return false;
    hit[image[v]] = 1;
  }
  if (f.factors.size() == 1) {
    Graph mapped(n);
    for (const auto& e : f.source.edges())
      mapped.add_edge(static_cast<Vertex>(image[e.u]), static_cast<Vertex>(image[e.v]));
    return mapped == f.factors.front();
  }
  const Graph rebuilt = product(ProductKind::Cartesian, f.factors).graph;
  if (rebuilt.edge_count() != f.source.edge_count()) return false;
  for (const auto& e : f.source.edges())
    if (!rebuilt.has_edge(static_cast<Vertex>(image[e.u]), static_cast<Vertex>(image[e.v])))
      return false;
  return true;
}

namespace detail {

// Builds the factorization induced by a grouping of edges. Coordinate i of
// a vertex is the connected component containing it once group-i edges are
// deleted; the component is named by BFS order of the group-i layer through
// vertex 0. Returns nullopt unless the result certifies.
inline std::optional<Factorization> factorization_from_groups(
    const Graph& g, const std::vector<Edge>& edges, const std::vector<std::size_t>& group_of_edge,
    std::size_t group_count) {
  const std::size_t n = g.vertex_count();
  Factorization f;
  f.source = g;
  f.coords.assign(n, Tuple(group_count, 0));

  for (std::size_t grp = 0; grp < group_count; ++grp) {
    DisjointSets others(n);
    std::vector<std::vector<Vertex>> layer_adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (group_of_edge[e] == grp) {
        layer_adj[edges[e].u].push_back(edges[e].v);
        layer_adj[edges[e].v].push_back(edges[e].u);
      } else {
        others.unite(edges[e].u, edges[e].v);
      }
    }

    std::vector<Vertex> layer;
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      layer.push_back(v);
      for (Vertex w : layer_adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }

    std::map<std::size_t, Vertex> label;
    for (Vertex v : layer)
      if (!label.emplace(others.find(v), static_cast<Vertex>(label.size())).second)
        return std::nullopt;
    for (Vertex v = 0; v < n; ++v) {
      auto it = label.find(others.find(v));
      if (it == label.end()) return std::nullopt;
      f.coords[v][grp] = it->second;
    }

    Graph factor(layer.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (group_of_edge[e] != grp) continue;
      Vertex a = f.coords[edges[e].u][grp], b = f.coords[edges[e].v][grp];
      if (a == b) return std::nullopt;
      factor.add_edge(a, b);
    }
    f.factors.push_back(std::move(factor));
  }
  if (!certify(f)) return std::nullopt;
  return f;
}

// Sort key: larger factors first; equal sizes by canonical form when small
// enough, otherwise by edge count then degree sequence.
inline bool factor_precedes(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() > b.vertex_count();
  if (a.vertex_count() <= default_canonical_limit) return canonical_form(a) < canonical_form(b);
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return sorted_degrees(a) < sorted_degrees(b);
}

inline void sort_factors(Factorization& f) {
  std::vector<std::size_t> perm(f.factors.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return factor_precedes(f.factors[x], f.factors[y]);
  });
  std::vector<Graph> factors;
  for (auto p : perm) factors.push_back(f.factors[p]);
  for (auto& t : f.coords) {
    Tuple nt;
    for (auto p : perm) nt.push_back(t[p]);
    t = std::move(nt);
  }
  f.factors = std::move(factors);
}

inline Factorization trivial_factorization(const Graph& g) {
  Factorization f;
  f.source = g;
  f.factors = {g};
  f.coords.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) f.coords[v] = {v};
  return f;
}

inline void require_connected(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorCode::InvalidGraph, "graph has no vertices");
  if (!is_connected(g)) fail(ErrorCode::NotConnected, "graph is not connected");
}

}  // namespace detail

/// Cartesian prime factorization by square-property edge-class refinement.
///
/// Incident edges not lying together in exactly one chordless square are
/// merged, and opposite edges of every chordless square are merged. The
/// resulting classes refine the prime-factor partition; if grouping every
/// class separately does not certify, each prime factor is recovered as the
/// smallest union of classes that splits off as a Cartesian factor. Every
/// returned factorization has passed `certify`.
inline Factorization factorize(const Graph& g) {
  detail::require_connected(g);
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) return detail::trivial_factorization(g);

  const std::vector<Edge> edges = g.edges();
  std::vector<std::vector<std::size_t>> edge_id(n);
  for (Vertex v = 0; v < n; ++v) edge_id[v].assign(g.degree(v), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    edge_id[u][static_cast<std::size_t>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin())] = e;
    edge_id[v][static_cast<std::size_t>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin())] = e;
  }
  auto id_of = [&](Vertex a, Vertex b) {
    const auto& na = g.neighbors(a);
    return edge_id[a][static_cast<std::size_t>(std::lower_bound(na.begin(), na.end(), b) - na.begin())];
  };

  detail::DisjointSets classes(edges.size());
  for (Vertex u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (std::size_t a = 0; a < nu.size(); ++a) {
      for (std::size_t b = a + 1; b < nu.size(); ++b) {
        const Vertex v = nu[a], w = nu[b];
        std::size_t squares = 0;
        if (!g.has_edge(v, w)) {
          const auto& nv = g.neighbors(v);
          for (Vertex x : nv) {
            if (x == u || g.has_edge(u, x) || !g.has_edge(w, x)) continue;
            ++squares;
            classes.unite(id_of(u, v), id_of(w, x));
            classes.unite(id_of(u, w), id_of(v, x));
          }
        }
        if (squares != 1) classes.unite(id_of(u, v), id_of(u, w));
      }
    }
  }

  std::map<std::size_t, std::size_t> class_index;
  std::vector<std::size_t> class_of_edge(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [it, inserted] = class_index.emplace(classes.find(e), class_index.size());
    class_of_edge[e] = it->second;
  }
  const std::size_t m = class_index.size();
  if (m == 1) return detail::trivial_factorization(g);

  if (auto f = detail::factorization_from_groups(g, edges, class_of_edge, m)) {
    if (f->factors.size() == 1) return detail::trivial_factorization(g);
    detail::sort_factors(*f);
    return *f;
  }

  // The class partition is finer than the prime partition. Recover each
  // prime factor as the minimal splitting union of classes.
  constexpr std::size_t max_classes = 24;
  if (m > max_classes)
    fail(ErrorCode::InternalFactorizationError,
         "edge-class refinement left " + std::to_string(m) + " classes; coarsening limit is " +
             std::to_string(max_classes));

  std::vector<std::size_t> group_of_class(m, m);
  std::size_t groups = 0;
  auto splits_off = [&](const std::vector<char>& in_set) {
    std::vector<std::size_t> two(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) two[e] = in_set[class_of_edge[e]] ? 0 : 1;
    return detail::factorization_from_groups(g, edges, two, 2).has_value();
  };
  while (true) {
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < m; ++c)
      if (group_of_class[c] == m) rest.push_back(c);
    if (rest.empty()) break;
    const std::size_t anchor = rest.front();
    rest.erase(rest.begin());

    std::vector<std::size_t> chosen;
    bool found = false;
    // Subsets of `rest` by increasing size, then lexicographically.
    for (std::size_t size = 0; size <= rest.size() && !found; ++size) {
      std::vector<char> pick(rest.size(), 0);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
      do {
        std::vector<char> in_set(m, 0);
        in_set[anchor] = 1;
        for (std::size_t i = 0; i < rest.size(); ++i)
          if (pick[i]) in_set[rest[i]] = 1;
        // The union of all remaining classes always splits off (or is the
        // whole graph); reaching it means no smaller union does.
        if (size == rest.size() || splits_off(in_set)) {
          chosen.clear();
          chosen.push_back(anchor);
          for (std::size_t i = 0; i < rest.size(); ++i)
            if (pick[i]) chosen.push_back(rest[i]);
          found = true;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    for (auto c : chosen) group_of_class[c] = groups;
    ++groups;
  }

  if (groups == 1) return detail::trivial_factorization(g);
  std::vector<std::size_t> group_of_edge(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) group_of_edge[e] = group_of_class[class_of_edge[e]];
  auto f = detail::factorization_from_groups(g, edges, group_of_edge, groups);
  if (!f)
    fail(ErrorCode::InternalFactorizationError,
         "recovered prime edge classes do not reconstruct the input graph");
  detail::sort_factors(*f);
  return *f;
}

namespace detail {

// Connected graphs on n vertices, one per isomorphism class, found by
// enumerating every labelled edge set.
inline const std::vector<Graph>& connected_graph_catalogue(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::map<CanonicalForm, Graph> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
    Graph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) g.add_edge(slots[s].u, slots[s].v);
    if (!is_connected(g)) continue;
    seen.emplace(canonical_form(g), std::move(g));
  }
  std::vector<Graph> out;
  for (auto& [form, g] : seen) out.push_back(std::move(g));
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<std::size_t> degree_multiset_of_product(const Graph& a, const Graph& b) {
  std::vector<std::size_t> d;
  for (Vertex x = 0; x < a.vertex_count(); ++x)
    for (Vertex y = 0; y < b.vertex_count(); ++y) d.push_back(a.degree(x) + b.degree(y));
  std::sort(d.begin(), d.end());
  return d;
}

// Returns prime factors and, per vertex of g, its tuple over them.
inline std::pair<std::vector<Graph>, std::vector<Tuple>> oracle_split(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto target = canonical_labeling(g, oracle_vertex_limit);
  const auto degrees = sorted_degrees(g);
  for (std::size_t b = 2; b * b <= n; ++b) {
    if (n % b != 0) continue;
    const std::size_t a = n / b;
    for (const Graph& h1 : connected_graph_catalogue(a)) {
      for (const Graph& h2 : connected_graph_catalogue(b)) {
        if (h1.edge_count() * b + a * h2.edge_count() != g.edge_count()) continue;
        if (degree_multiset_of_product(h1, h2) != degrees) continue;
        const ProductGraph p = product(ProductKind::Cartesian, {h1, h2});
        const auto candidate = canonical_labeling(p.graph, oracle_vertex_limit);
        if (candidate.form != target.form) continue;

        // g's vertex at canonical position q corresponds to p's vertex at q.
        std::vector<Tuple> pair_coords(n);
        for (std::size_t q = 0; q < n; ++q) pair_coords[target.order[q]] = p.coords[candidate.order[q]];
        auto [f1, c1] = oracle_split(h1);
        auto [f2, c2] = oracle_split(h2);
        std::vector<Graph> factors = f1;
        factors.insert(factors.end(), f2.begin(), f2.end());
        std::vector<Tuple> coords(n);
        for (Vertex v = 0; v < n; ++v) {
          coords[v] = c1[pair_coords[v][0]];
          const Tuple& t2 = c2[pair_coords[v][1]];
          coords[v].insert(coords[v].end(), t2.begin(), t2.end());
        }
        return {std::move(factors), std::move(coords)};
      }
    }
  }
  std::vector<Tuple> identity(n);
  for (Vertex v = 0; v < n; ++v) identity[v] = {v};
  return {{g}, std::move(identity)};
}

}  // namespace detail

/// Exhaustive reference factorization for graphs with at most 12 vertices:
/// for every split |V| = a*b it tries every pair of connected graphs on a
/// and b vertices (one per isomorphism class) and tests the Cartesian
/// product for isomorphism with the input, recursing into the factors.
inline Factorization brute_force_factor_oracle(const Graph& g) {
  if (g.vertex_count() > oracle_vertex_limit)
    fail(ErrorCode::SizeLimitExceeded, "factor oracle: graph has " +
                                           std::to_string(g.vertex_count()) + " vertices, limit is " +
                                           std::to_string(oracle_vertex_limit));
  detail::require_connected(g);
  auto [factors, coords] = detail::oracle_split(g);
  if (factors.size() == 1) return detail::trivial_factorization(g);
  Factorization f{std::move(factors), std::move(coords), g};
  if (!certify(f))
    fail(ErrorCode::InternalFactorizationError, "oracle factorization failed certification");
  detail::sort_factors(f);
  return f;
}

}  // namespace graphca
