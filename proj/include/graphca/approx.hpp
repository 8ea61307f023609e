#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphca/covering_array.hpp"
#include "graphca/error.hpp"
#include "graphca/factorization.hpp"
#include "graphca/graph.hpp"
#include "graphca/orthogonal_array.hpp"

namespace graphca {

struct ApproxResult {
  CoveringArray ca;  // bound to the input graph
  std::size_t s = 0;
  std::size_t u = 0;
  std::size_t v1 = 0;
  std::size_t k = 0;
  std::size_t ratio_bound = 0;  // ceil(log_s(V / 2^(k-1)))
  std::size_t achieved_multiplier = 0;
  std::vector<std::string> warnings;
  Factorization factorization;
};

/// Smallest t with s^t * 2^(k-1) >= v.
inline std::size_t approx_ratio_bound(std::size_t s, std::size_t v, std::size_t k) {
  std::size_t t = 0;
  for (std::size_t p = std::size_t{1} << (k - 1); p < v; p *= s) ++t;
  return t;
}

/// Covering array of size u*g^2 with u = ceil(log_s V1): factorize, give
/// the largest factor V1 distinct OA-block rows, and assign the product
/// vertex (u_1..u_k) the row (u_1 + ... + u_k) mod V1. Neighbours differ in
/// one coordinate by less than V1, so their sums differ mod V1.
inline ApproxResult approx_ca(const Graph& graph, std::uint32_t g) {
  if (g < 2) fail(ErrorCode::InvalidAlphabet, "alphabet size must be at least 2");
  if (graph.vertex_count() < 2 || graph.edge_count() == 0)
    fail(ErrorCode::InvalidGraph, "graph needs at least two vertices and one edge");
  if (!is_connected(graph)) fail(ErrorCode::NotConnected, "graph is not connected");

  ApproxResult r;
  r.factorization = factorize(graph);
  const auto& f = r.factorization;
  r.k = f.factors.size();
  for (const auto& factor : f.factors) r.v1 = std::max(r.v1, factor.vertex_count());
  if (r.k == 1) r.warnings.push_back("graph is prime; the array is built on the whole graph");

  r.s = bush_parameter(g);
  const CoveringArray c1 = generic_ca(r.v1, g);
  r.u = c1.cols() / (std::size_t{g} * g);
  r.achieved_multiplier = r.u;
  r.ratio_bound = approx_ratio_bound(r.s, graph.vertex_count(), r.k);

  r.ca = CoveringArray{g, SymbolMatrix(graph.vertex_count(), c1.cols()), std::nullopt, {}};
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::size_t sum = 0;
    for (auto x : f.coords[v]) sum += x;
    const auto src = c1.matrix.row(sum % r.v1);
    std::copy(src.begin(), src.end(), r.ca.matrix.row(v).begin());
  }
  bind_identity(r.ca, graph);
  const auto check = verify_ca(r.ca, graph);
  if (!check.ok)
    fail(ErrorCode::ConstructionFailed,
         "approximation output fails on " + std::to_string(check.failing_edges.size()) + " edge(s)");
  return r;
}

struct RatioCertificate {
  std::size_t multiplier = 0;  // size / g^2
  std::size_t bound = 0;
  bool within_bound = false;
  bool tight = false;  // multiplier 1 meets the g^2 lower bound
  std::vector<std::string> warnings;
};

inline RatioCertificate ratio_certificate(const ApproxResult& res) {
  RatioCertificate c;
  const std::size_t block = res.ca.symbols * res.ca.symbols;
  c.multiplier = block == 0 ? 0 : res.ca.cols() / block;
  c.bound = res.ratio_bound;
  c.within_bound = c.multiplier <= c.bound;
  c.tight = c.multiplier == 1;
  c.warnings = res.warnings;
  if (!c.within_bound)
    c.warnings.push_back("multiplier " + std::to_string(c.multiplier) + " exceeds bound " + std::to_string(c.bound));
  return c;
}

}  // namespace graphca
