#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "graphca/graphca.hpp"
#include "oracles.hpp"

using namespace graphca;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph h(g.vertex_count());
  for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

}  // namespace

TEST(Generators, CompleteGraph) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(k3.vertex_count(), 3u);
  EXPECT_EQ(k3.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Generators, CirculantMatchesCycle) {
  const std::size_t s[] = {1, 4};
  EXPECT_EQ(circulant_graph(5, s), cycle_graph(5));
  EXPECT_EQ(cycle_graph(4).edge_count(), 4u);
  EXPECT_EQ(path_graph(3).edge_count(), 2u);
}

TEST(Generators, CirculantRejectsBadSets) {
  const std::size_t not_closed[] = {1};
  const std::size_t zero[] = {0, 1, 4};
  EXPECT_THROW(circulant_graph(5, not_closed), Error);
  try {
    circulant_graph(5, zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidConnectionSet);
  }
}

TEST(Graph, RejectsLoopsAndIgnoresDuplicates) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.add_edge(2, 2), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(path_graph(4)));
  const Edge two[] = {{0, 1}, {2, 3}};
  EXPECT_FALSE(is_connected(Graph(4, two)));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Graph, Bipartite) {
  EXPECT_TRUE(is_bipartite(cycle_graph(4)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_TRUE(is_bipartite(product(ProductKind::Cartesian, {complete_graph(2), complete_graph(2)}).graph));
  const auto parts = bipartition(path_graph(4));
  ASSERT_TRUE(parts);
  EXPECT_TRUE(is_proper_coloring(path_graph(4), parts->colors));
}

TEST(Coloring, GreedyExamples) {
  EXPECT_EQ(greedy_coloring(complete_graph(4)).color_count, 4u);
  EXPECT_EQ(greedy_coloring(cycle_graph(5)).color_count, 3u);
  EXPECT_EQ(greedy_coloring(empty_graph(6)).color_count, 1u);
}

TEST(Coloring, GreedyIsDeterministicAndProper) {
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(12, 0.35, rng);
    const auto a = greedy_coloring(g), b = greedy_coloring(g);
    EXPECT_EQ(a.colors, b.colors);
    EXPECT_TRUE(is_proper_coloring(g, a.colors));
    EXPECT_EQ(distinct_color_count(a.colors), a.color_count);
  }
}

TEST(Coloring, ExactExamples) {
  const Graph p3c5 = product(ProductKind::Cartesian, {path_graph(3), cycle_graph(5)}).graph;
  EXPECT_EQ(exact_chromatic_number(p3c5), 3u);
  EXPECT_EQ(exact_chromatic_number(complete_graph(5)), 5u);
  EXPECT_EQ(exact_chromatic_number(cycle_graph(7)), 3u);
  EXPECT_FALSE(oracle::colorable(cycle_graph(7), 2, *std::make_unique<std::vector<std::uint32_t>>(7), 0));
}

TEST(Coloring, ExactMatchesOracleAndSandwich) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_graph(9, 0.45, rng);
    const auto chi = exact_chromatic_number(g);
    EXPECT_EQ(chi, oracle::chromatic_number(g));
    EXPECT_LE(chi, greedy_coloring(g).color_count);
    EXPECT_LE(max_clique(g), chi);
    EXPECT_TRUE(is_proper_coloring(g, exact_coloring(g).colors));
  }
}

TEST(Coloring, SizeLimit) {
  try {
    exact_chromatic_number(cycle_graph(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimitExceeded);
  }
  EXPECT_EQ(exact_chromatic_number(cycle_graph(17), 17), 3u);
}

TEST(Clique, Examples) {
  EXPECT_EQ(max_clique(product(ProductKind::Strong, {complete_graph(2), complete_graph(3)}).graph), 6u);
  EXPECT_EQ(max_clique(cycle_graph(5)), 2u);
  EXPECT_EQ(max_clique(product(ProductKind::Strong, {path_graph(2), path_graph(2)}).graph), 4u);
}

TEST(Clique, MatchesOracle) {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_graph(12, 0.5, rng);
    const auto clique = max_clique_vertices(g);
    EXPECT_EQ(clique.size(), oracle::clique_number(g));
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) EXPECT_TRUE(g.has_edge(clique[i], clique[j]));
  }
}

TEST(Coloring, ValidateRejectsImproper) {
  const ProperColoring bad{{0, 0, 1}, 2};
  EXPECT_THROW(validate_coloring(path_graph(3), bad), Error);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_graph(8, 0.4, rng);
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, perm)));
  }
}

TEST(Canonical, AgreesWithPermutationOracle) {
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    const Graph a = random_graph(7, 0.4, rng), b = random_graph(7, 0.4, rng);
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b));
  }
}

TEST(Canonical, OrderIsRelabellingToForm) {
  const Graph g = product(ProductKind::Cartesian, {path_graph(3), complete_graph(2)}).graph;
  const auto lab = canonical_labeling(g);
  std::vector<Vertex> position(g.vertex_count());
  for (std::size_t p = 0; p < lab.order.size(); ++p) position[lab.order[p]] = static_cast<Vertex>(p);
  EXPECT_EQ(canonical_form(relabel(g, position)), lab.form);
}

TEST(ColFormat, RoundTrip) {
  const Graph g = product(ProductKind::Cartesian, {path_graph(3), cycle_graph(5)}).graph;
  std::stringstream buf;
  write_col(buf, g);
  const std::string text = buf.str();
  EXPECT_EQ(read_col(buf), g);
  std::stringstream again;
  write_col(again, read_col(*std::make_unique<std::stringstream>(text)));
  EXPECT_EQ(again.str(), text);
}

TEST(ColFormat, ParsesCommentsAndReportsLine) {
  std::stringstream ok("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(read_col(ok), complete_graph(3));
  std::stringstream bad("p edge 3 1\ne 1 4\n");
  try {
    read_col(bad, "tri.col");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("tri.col:2"), std::string::npos);
  }
}
