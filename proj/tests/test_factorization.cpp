#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphca/graphca.hpp"
#include "oracles.hpp"

using namespace graphca;

namespace {

Graph box(std::vector<Graph> fs) { return product(ProductKind::Cartesian, fs).graph; }

// Factors match up to isomorphism, regardless of order.
bool same_multiset(std::vector<Graph> a, std::vector<Graph> b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && is_isomorphic(x, b[j], 64)) used[j] = 1, found = true;
    if (!found) return false;
  }
  return true;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST(Factorize, Examples) {
  const Graph k2 = complete_graph(2), k3 = complete_graph(3);
  const auto c4 = factorize(cycle_graph(4));
  ASSERT_EQ(c4.factors.size(), 2u);
  EXPECT_TRUE(same_multiset(c4.factors, {k2, k2}));

  const auto k2k3 = factorize(box({k2, k3}));
  ASSERT_EQ(k2k3.factors.size(), 2u);
  EXPECT_EQ(k2k3.factors[0].vertex_count(), 3u);  // larger factor first
  EXPECT_TRUE(is_isomorphic(k2k3.factors[0], k3));

  const auto p3c5 = factorize(box({path_graph(3), cycle_graph(5)}));
  ASSERT_EQ(p3c5.factors.size(), 2u);
  EXPECT_TRUE(is_isomorphic(p3c5.factors[0], cycle_graph(5)));
  EXPECT_TRUE(is_isomorphic(p3c5.factors[1], path_graph(3)));

  const auto cube = factorize(box({k2, k2, k2}));
  EXPECT_EQ(cube.factors.size(), 3u);

  const auto single = factorize(Graph(1));
  ASSERT_EQ(single.factors.size(), 1u);
  EXPECT_EQ(single.factors[0].vertex_count(), 1u);
}

TEST(Factorize, PrimesReturnThemselves) {
  const Edge mobius_edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                               {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  for (const Graph& g : {cycle_graph(5), cycle_graph(6), cycle_graph(7), complete_graph(4), petersen(),
                         Graph(8, mobius_edges), path_graph(5)}) {
    const auto f = factorize(g);
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0], g);
    EXPECT_TRUE(certify(f));
  }
}

TEST(Factorize, CoordinatesAreCertified) {
  const auto f = factorize(box({cycle_graph(4), complete_graph(3)}));
  EXPECT_EQ(f.factors.size(), 3u);
  EXPECT_TRUE(certify(f));
  // The rebuilt product under the coordinates has exactly the source edges.
  const auto rebuilt = product(ProductKind::Cartesian, f.factors);
  std::vector<std::size_t> radices;
  for (const auto& x : f.factors) radices.push_back(x.vertex_count());
  const TupleIndexer idx(radices);
  for (const auto& e : f.source.edges())
    EXPECT_TRUE(rebuilt.graph.has_edge(static_cast<Vertex>(idx.index(f.coords[e.u])),
                                       static_cast<Vertex>(idx.index(f.coords[e.v]))));
}

TEST(Factorize, Errors) {
  const Edge two[] = {{0, 1}, {2, 3}};
  try {
    factorize(Graph(4, two));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConnected);
  }
  EXPECT_THROW(brute_force_factor_oracle(cycle_graph(13)), Error);
}

TEST(Factorize, SweepRecoversFactorsAndMatchesOracle) {
  const std::vector<Graph> base = {complete_graph(2), complete_graph(3), path_graph(3), cycle_graph(5),
                                   complete_graph(4)};
  std::size_t checked = 0;
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a; b < base.size(); ++b)
      for (std::size_t c = b; c <= base.size(); ++c) {
        std::vector<Graph> fs{base[a], base[b]};
        if (c < base.size()) fs.push_back(base[c]);
        const Graph g = box(fs);
        if (g.vertex_count() > 60) continue;
        const auto f = factorize(g);
        EXPECT_TRUE(certify(f));
        EXPECT_TRUE(same_multiset(f.factors, fs)) << g.vertex_count() << " vertices";
        if (g.vertex_count() <= oracle_vertex_limit) {
          const auto o = brute_force_factor_oracle(g);
          ASSERT_EQ(o.factors.size(), f.factors.size());
          for (std::size_t i = 0; i < o.factors.size(); ++i)
            EXPECT_EQ(canonical_form(o.factors[i]), canonical_form(f.factors[i]));
        }
        ++checked;
      }
  EXPECT_GT(checked, 20u);
}

TEST(Factorize, OracleSaysSixCycleIsPrime) {
  const auto o = brute_force_factor_oracle(cycle_graph(6));
  EXPECT_EQ(o.factors.size(), 1u);
}

TEST(Factorize, AgreesWithOracleOnAllSmallConnectedGraphs) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : detail::connected_graph_catalogue(n)) {
      const auto f = factorize(g);
      const auto o = brute_force_factor_oracle(g);
      ASSERT_EQ(f.factors.size(), o.factors.size()) << n;
      for (std::size_t i = 0; i < f.factors.size(); ++i)
        EXPECT_EQ(canonical_form(f.factors[i]), canonical_form(o.factors[i]));
    }
}

TEST(Factorize, IndependentOfVertexNumbering) {
  std::mt19937 rng(17);
  const Edge mobius_edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                               {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  const std::vector<std::vector<Graph>> cases = {{Graph(8, mobius_edges), complete_graph(2)},
                                                 {petersen(), complete_graph(3)},
                                                 {cycle_graph(5), cycle_graph(5), complete_graph(2)},
                                                 {cycle_graph(6), path_graph(4)},
                                                 {cycle_graph(8), cycle_graph(8)}};
  for (const auto& fs : cases)
    for (int t = 0; t < 3; ++t) {
      const Graph g = box(fs);
      std::vector<Vertex> perm(g.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h(g.vertex_count());
      for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
      const auto f = factorize(h);
      EXPECT_TRUE(certify(f));
      EXPECT_TRUE(same_multiset(f.factors, fs));
    }
}
