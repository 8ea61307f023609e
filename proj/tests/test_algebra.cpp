#include <gtest/gtest.h>

#include <sstream>

#include "graphca/graphca.hpp"
#include "oracles.hpp"

using namespace graphca;

TEST(Field, PrimeFieldArithmetic) {
  const FiniteField f(5);
  EXPECT_EQ(f.mul(2, 3), 1u);
  EXPECT_EQ(f.add(4, 3), 2u);
  EXPECT_EQ(f.inv(2), 3u);
}

TEST(Field, FourElementField) {
  const FiniteField f(4);
  // Elements encode c0 + c1 x; x = 2, x + 1 = 3.
  EXPECT_EQ(f.reduction_polynomial(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(f.mul(2, 3), 1u);
  EXPECT_EQ(f.mul(2, 2), 3u);
}

TEST(Field, RejectsNonPrimePowers) {
  for (std::uint32_t q : {0u, 1u, 6u, 10u, 12u}) {
    try {
      FiniteField f(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotPrimePower);
    }
  }
}

TEST(Field, AxiomsHoldForSmallOrders) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const FiniteField f(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << q;
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (std::uint32_t c = 0; c < q; c += 3)
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    // The multiplicative group has order q - 1.
    for (std::uint32_t a = 1; a < q; ++a) EXPECT_EQ(f.pow(a, q - 1), 1u);
  }
}

TEST(Field, PrimePowerDetection) {
  for (std::uint64_t q = 0; q < 200; ++q) EXPECT_EQ(as_prime_power(q).has_value(), oracle::is_prime_power(q)) << q;
}

TEST(OrthogonalArrayTest, BinaryArray) {
  const auto oa = oa_prime_power(2);
  EXPECT_EQ(oa.rows(), 3u);
  EXPECT_EQ(oa.matrix.cols(), 4u);
  EXPECT_TRUE(is_orthogonal_array(oa));
  EXPECT_FALSE(rows_orthogonal(oa.matrix, 1, 1, 2));
  // Each row pair covers all four ordered pairs exactly once.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      EXPECT_TRUE(oracle::covers_all_pairs(oracle::row_of(oa.matrix, i), oracle::row_of(oa.matrix, j), 2));
}

TEST(OrthogonalArrayTest, PrimePowerOrders) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const auto oa = oa_prime_power(q);
    EXPECT_EQ(oa.rows(), q + 1);
    EXPECT_EQ(oa.matrix.cols(), std::size_t{q} * q);
    EXPECT_TRUE(is_orthogonal_array(oa));
  }
  EXPECT_THROW(oa_prime_power(6), Error);
}

TEST(OrthogonalArrayTest, CompositeRowCount) {
  EXPECT_EQ(bush_parameter(6), 3u);
  EXPECT_EQ(bush_parameter(12), 4u);
  EXPECT_EQ(bush_parameter(4), 5u);
  EXPECT_EQ(bush_oa(4).matrix, oa_prime_power(4).matrix);
  for (std::uint32_t g = 2; g <= 30; ++g) {
    const auto oa = bush_oa(g);
    EXPECT_EQ(oa.rows(), 1 + std::max<std::size_t>(2, oracle::smallest_prime_power_component(g))) << g;
    EXPECT_TRUE(is_orthogonal_array(oa));
  }
  EXPECT_THROW(bush_oa(1), Error);
}

TEST(Group, BuiltIns) {
  const auto z5 = cyclic_group(5);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) EXPECT_EQ(z5.mul(a, b), (a + b) % 5);

  const auto q8 = quaternion_group();
  EXPECT_EQ(q8.order(), 8u);
  std::size_t involutions = 0;
  for (std::size_t x = 0; x < 8; ++x) involutions += q8.element_order(x) == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_EQ(q8.mul(*q8.find("i"), *q8.find("j")), *q8.find("k"));
  EXPECT_EQ(q8.mul(*q8.find("j"), *q8.find("i")), *q8.find("-k"));

  const auto d8 = dihedral_group(8);
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_FALSE(d8.is_abelian());

  EXPECT_EQ(symmetric_group(3).order(), 6u);
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_EQ(build_group("dihedral:8").order(), 8u);
  EXPECT_EQ(build_group("Q8").order(), 8u);
}

TEST(Group, RejectsBadTables) {
  try {
    FiniteGroup::from_table({{0, 1}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAGroup);
  }
  // Latin square with identity 0 but not associative.
  const std::vector<std::vector<std::size_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(loop), Error);
}

TEST(Group, JsonRoundTrip) {
  const auto d8 = dihedral_group(8);
  const auto back = group_from_json(group_to_json(d8));
  EXPECT_EQ(back.table(), d8.table());
  EXPECT_EQ(back.names(), d8.names());
  const auto set = connection_set_from_json(d8, nlohmann::json::parse(R"({"S": ["b", "b^3", 4]})"));
  EXPECT_EQ(set.size(), 3u);
}

TEST(Cayley, Graphs) {
  const auto z5 = cyclic_group(5);
  EXPECT_EQ(cayley_graph(z5, ConnectionSet(z5, {1, 4})), cycle_graph(5));

  const auto q8 = quaternion_group();
  const ConnectionSet s(q8, {*q8.find("i"), *q8.find("-i"), *q8.find("j"), *q8.find("-j")});
  const Graph g = cayley_graph(q8, s);
  EXPECT_EQ(g.vertex_count(), 8u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 4u);

  const auto z4 = cyclic_group(4);
  const Graph matching = cayley_graph(z4, ConnectionSet(z4, {2}));
  EXPECT_EQ(matching.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));

  EXPECT_THROW(ConnectionSet(z4, {0}), Error);
  EXPECT_THROW(cayley_graph(z5, ConnectionSet(z5, {1})), Error);
}

TEST(Cayley, ConnectionSetChecks) {
  const auto q8 = quaternion_group();
  auto id = [&](const char* n) { return *q8.find(n); };
  const ConnectionSet all(q8, {id("i"), id("-i"), id("j"), id("-j"), id("k"), id("-k")});
  const auto r = check_connection_set(q8, all);
  EXPECT_TRUE(r.inverse_closed);
  EXPECT_TRUE(r.conjugation_closed);
  EXPECT_TRUE(r.generates);
  ASSERT_TRUE(r.pair_s1s2);
  EXPECT_EQ(*r.pair_s1s2, Witness(id("i"), id("j")));

  const ConnectionSet four(q8, {id("-1"), id("i"), id("-i"), id("j"), id("-j")});
  const auto r4 = check_connection_set(q8, four);
  ASSERT_TRUE(r4.pair_s1s2_and_s1s2inv);
  EXPECT_EQ(*r4.pair_s1s2_and_s1s2inv, Witness(id("-1"), id("i")));

  // Reflections of D8 are not closed under conjugation by each other.
  const auto d8 = dihedral_group(8);
  const ConnectionSet refl(d8, {*d8.find("a"), *d8.find("ab")});
  EXPECT_FALSE(check_connection_set(d8, refl).conjugation_closed);
}

TEST(Cayley, EvenCyclesOfSymmetricGroup) {
  const auto s4 = symmetric_group(4);
  const auto set = even_cycle_set(4);
  // Six transpositions and six 4-cycles.
  EXPECT_EQ(set.size(), 12u);
  const auto r = check_connection_set(s4, ConnectionSet(s4, set));
  EXPECT_TRUE(r.inverse_closed);
  EXPECT_TRUE(r.conjugation_closed);
}

TEST(Cayley, LeftTranslationIsNeighbourAutomorphism) {
  const auto q8 = quaternion_group();
  const ConnectionSet s(q8, {*q8.find("i"), *q8.find("-i"), *q8.find("j"), *q8.find("-j")});
  const Graph g = cayley_graph(q8, s);
  EXPECT_NO_THROW(check_neighbour_automorphism(g, left_translation(q8, *q8.find("i"))));
}
