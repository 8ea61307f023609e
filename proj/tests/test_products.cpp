#include <gtest/gtest.h>

#include "graphca/graphca.hpp"
#include "oracles.hpp"

using namespace graphca;

namespace {

const ProductKind all_kinds[] = {ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong,
                                 ProductKind::Lexicographic};

std::vector<Graph> small_factors() {
  const Edge star_edges[] = {{0, 1}, {0, 2}, {0, 3}};
  return {complete_graph(2), path_graph(3), cycle_graph(4), empty_graph(2), Graph(4, star_edges), complete_graph(3)};
}

}  // namespace

TEST(Product, Examples) {
  const Graph k2 = complete_graph(2);
  const auto box = product(ProductKind::Cartesian, {k2, k2}).graph;
  EXPECT_EQ(box.edge_count(), 4u);
  EXPECT_TRUE(oracle::isomorphic(box, cycle_graph(4)));
  EXPECT_EQ(product(ProductKind::Strong, {k2, complete_graph(3)}).graph, complete_graph(6));
  const auto direct = product(ProductKind::Direct, {k2, k2}).graph;
  EXPECT_EQ(direct.vertex_count(), 4u);
  EXPECT_EQ(direct.edge_count(), 2u);
  EXPECT_TRUE(oracle::isomorphic(product(ProductKind::Lexicographic, {k2, empty_graph(2)}).graph, cycle_graph(4)));
}

TEST(Product, MatchesDefinitionsForPairsAndTriples) {
  const auto fs = small_factors();
  for (auto op : all_kinds)
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = 0; b < fs.size(); ++b)
        for (std::size_t c = 0; c <= fs.size(); ++c) {
          std::vector<Graph> factors{fs[a], fs[b]};
          if (c < fs.size()) factors.push_back(fs[c]);
          const ProductGraph p = product(op, factors);
          const auto tuples = oracle::all_tuples(factors);
          ASSERT_EQ(p.coords, tuples);
          for (Vertex x = 0; x < tuples.size(); ++x)
            for (Vertex y = x + 1; y < tuples.size(); ++y)
              ASSERT_EQ(p.graph.has_edge(x, y), oracle::product_adjacent(op, factors, tuples[x], tuples[y]))
                  << to_string(op) << " " << x << " " << y;
        }
}

TEST(Product, EdgeCountIdentities) {
  const auto fs = small_factors();
  for (const auto& g : fs)
    for (const auto& h : fs) {
      const std::size_t n1 = g.vertex_count(), n2 = h.vertex_count(), e1 = g.edge_count(), e2 = h.edge_count();
      EXPECT_EQ(product(ProductKind::Cartesian, {g, h}).graph.edge_count(), n1 * e2 + n2 * e1);
      EXPECT_EQ(product(ProductKind::Direct, {g, h}).graph.edge_count(), 2 * e1 * e2);
      EXPECT_EQ(product(ProductKind::Strong, {g, h}).graph.edge_count(), n1 * e2 + n2 * e1 + 2 * e1 * e2);
      EXPECT_EQ(product(ProductKind::Lexicographic, {g, h}).graph.edge_count(), e1 * n2 * n2 + n1 * e2);
    }
}

TEST(Product, AssociativeOnCoordinates) {
  const auto fs = small_factors();
  for (auto op : all_kinds) {
    const Graph& a = fs[1];
    const Graph& b = fs[2];
    const Graph& c = fs[4];
    const Graph left = product(op, {product(op, {a, b}).graph, c}).graph;
    const Graph right = product(op, {a, product(op, {b, c}).graph}).graph;
    const Graph flat = product(op, {a, b, c}).graph;
    // Row-major numbering makes both groupings use the same vertex order.
    EXPECT_EQ(left, flat) << to_string(op);
    EXPECT_EQ(right, flat) << to_string(op);
  }
}

TEST(Product, ProjectionsAreHomomorphisms) {
  const auto fs = small_factors();
  for (const auto& g : fs)
    for (const auto& h : fs) {
      const auto direct = product(ProductKind::Direct, {g, h});
      const auto strong = product(ProductKind::Strong, {g, h});
      const auto lex = product(ProductKind::Lexicographic, {g, h});
      for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_TRUE(is_homomorphism(direct.graph, direct.factors[i], projection(direct, i)));
        EXPECT_TRUE(is_weak_homomorphism(strong.graph, strong.factors[i], projection(strong, i)));
      }
      EXPECT_TRUE(is_weak_homomorphism(lex.graph, lex.factors[0], projection(lex, 0)));
    }
}

TEST(Product, ProjectionOntoSingleVertexIsConstant) {
  const auto p = product(ProductKind::Cartesian, {empty_graph(1), cycle_graph(4)});
  for (auto x : projection(p, 0)) EXPECT_EQ(x, 0u);
  EXPECT_THROW(projection(p, 2), Error);
}

TEST(Product, Errors) {
  try {
    product(ProductKind::Cartesian, {complete_graph(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidFactor);
  }
  EXPECT_THROW(product(ProductKind::Direct, {complete_graph(2), Graph(0)}), Error);
}

TEST(Product, ChromaticNumberOfCartesianIsMax) {
  const std::vector<Graph> fs = {complete_graph(2), complete_graph(3), cycle_graph(5), path_graph(4)};
  for (const auto& g : fs)
    for (const auto& h : fs) {
      const Graph box = product(ProductKind::Cartesian, {g, h}).graph;
      const auto expected = std::max(oracle::chromatic_number(g), oracle::chromatic_number(h));
      EXPECT_EQ(exact_chromatic_number(box, box.vertex_count()), expected);
    }
}

TEST(Product, ParseKind) {
  EXPECT_EQ(parse_product_kind("lex"), ProductKind::Lexicographic);
  EXPECT_EQ(parse_product_kind("box"), ProductKind::Cartesian);
  EXPECT_THROW(parse_product_kind("tensor-ish"), Error);
}
