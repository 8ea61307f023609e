#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "graphca/error.hpp"
#include "graphca/graph.hpp"

namespace graphca {

enum class ProductKind { Cartesian, Direct, Strong, Lexicographic };

inline std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Direct: return "direct";
    case ProductKind::Strong: return "strong";
    case ProductKind::Lexicographic: return "lexicographic";
  }
  return "unknown";
}

inline ProductKind parse_product_kind(std::string_view name) {
  if (name == "cartesian" || name == "box") return ProductKind::Cartesian;
  if (name == "direct") return ProductKind::Direct;
  if (name == "strong") return ProductKind::Strong;
  if (name == "lexicographic" || name == "lex") return ProductKind::Lexicographic;
  fail(ErrorCode::InvalidFactor, "unknown product kind '" + std::string(name) + "'");
}

using Tuple = std::vector<Vertex>;

/// Row-major mixed-radix numbering of factor tuples: the last coordinate
/// varies fastest.
class TupleIndexer {
 public:
  TupleIndexer() = default;
  explicit TupleIndexer(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
    total_ = 1;
    for (auto r : radices_) total_ *= r;
  }

  std::size_t size() const noexcept { return total_; }
  std::size_t arity() const noexcept { return radices_.size(); }
  const std::vector<std::size_t>& radices() const noexcept { return radices_; }

  std::size_t index(const Tuple& t) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) idx = idx * radices_[i] + t[i];
    return idx;
  }

  Tuple tuple(std::size_t idx) const {
    Tuple t(radices_.size());
    for (std::size_t i = radices_.size(); i-- > 0;) {
      t[i] = static_cast<Vertex>(idx % radices_[i]);
      idx /= radices_[i];
    }
    return t;
  }

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_ = 0;
};

struct ProductGraph {
  Graph graph;
  std::vector<Graph> factors;
  std::vector<Tuple> coords;
  ProductKind op = ProductKind::Cartesian;
};

namespace detail {

// Calls visit(y) for every tuple y in choices[0] x ... x choices[k-1].
inline void for_each_choice(const std::vector<std::vector<Vertex>>& choices,
                            const std::function<void(const Tuple&)>& visit) {
  const std::size_t k = choices.size();
  for (const auto& c : choices)
    if (c.empty()) return;
  Tuple y(k);
  std::vector<std::size_t> pos(k, 0);
  for (std::size_t i = 0; i < k; ++i) y[i] = choices[i][0];
  while (true) {
    visit(y);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) {
        y[i] = choices[i][pos[i]];
        break;
      }
      pos[i] = 0;
      y[i] = choices[i][0];
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace detail

/// k-ary product built from the k-ary adjacency rule of each kind (not by
/// folding binary products; for k>2 the strong product is not the union of
/// the Cartesian and direct edge sets).
inline ProductGraph product(ProductKind op, const std::vector<Graph>& factors) {
  if (factors.size() < 2) fail(ErrorCode::InvalidFactor, "product needs at least two factors");
  std::vector<std::size_t> radices;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].vertex_count() == 0)
      fail(ErrorCode::InvalidFactor, "factor " + std::to_string(i) + " has no vertices");
    radices.push_back(factors[i].vertex_count());
  }
  const TupleIndexer indexer(radices);
  const std::size_t k = factors.size();

  ProductGraph out;
  out.op = op;
  out.factors = factors;
  out.graph = Graph(indexer.size());
  out.coords.reserve(indexer.size());
  for (std::size_t v = 0; v < indexer.size(); ++v) out.coords.push_back(indexer.tuple(v));

  auto all_vertices = [&](std::size_t i) {
    std::vector<Vertex> vs(radices[i]);
    for (Vertex v = 0; v < radices[i]; ++v) vs[v] = v;
    return vs;
  };

  for (std::size_t xi = 0; xi < indexer.size(); ++xi) {
    const Tuple& x = out.coords[xi];
    auto link = [&](const Tuple& y) {
      const std::size_t yi = indexer.index(y);
      if (xi < yi) out.graph.add_edge(static_cast<Vertex>(xi), static_cast<Vertex>(yi));
    };
    std::vector<std::vector<Vertex>> choices(k);
    switch (op) {
      case ProductKind::Cartesian:
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) choices[j] = {x[j]};
          choices[i] = factors[i].neighbors(x[i]);
          detail::for_each_choice(choices, link);
        }
        break;
      case ProductKind::Direct:
        for (std::size_t i = 0; i < k; ++i) choices[i] = factors[i].neighbors(x[i]);
        detail::for_each_choice(choices, link);
        break;
      case ProductKind::Strong:
        for (std::size_t i = 0; i < k; ++i) {
          choices[i] = factors[i].neighbors(x[i]);
          choices[i].push_back(x[i]);
        }
        detail::for_each_choice(choices, [&](const Tuple& y) {
          if (y != x) link(y);
        });
        break;
      case ProductKind::Lexicographic:
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t i = 0; i < j; ++i) choices[i] = {x[i]};
          choices[j] = factors[j].neighbors(x[j]);
          for (std::size_t i = j + 1; i < k; ++i) choices[i] = all_vertices(i);
          detail::for_each_choice(choices, link);
        }
        break;
    }
  }
  return out;
}

/// p_i: product vertex -> coordinate i.
inline std::vector<Vertex> projection(const ProductGraph& p, std::size_t i) {
  if (i >= p.factors.size())
    fail(ErrorCode::IndexOutOfRange, "projection index " + std::to_string(i) + " out of range for " +
                                         std::to_string(p.factors.size()) + " factors");
  std::vector<Vertex> map(p.coords.size());
  for (std::size_t v = 0; v < p.coords.size(); ++v) map[v] = p.coords[v][i];
  return map;
}

/// Every edge maps to an edge.
inline bool is_homomorphism(const Graph& from, const Graph& to, const std::vector<Vertex>& map) {
  for (const auto& e : from.edges())
    if (!to.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

/// Every edge maps to an edge or collapses to a single vertex.
inline bool is_weak_homomorphism(const Graph& from, const Graph& to,
                                 const std::vector<Vertex>& map) {
  for (const auto& e : from.edges())
    if (map[e.u] != map[e.v] && !to.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

}  // namespace graphca
