#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace seidel;

namespace {

Graph k1_k2_k2() { return disjoint_union(disjoint_union(Graph(1), complete_graph(2)), complete_graph(2)); }

} // namespace

TEST(SeidelMatrix, Examples) {
  const auto k2 = seidel_matrix(complete_graph(2));
  EXPECT_EQ(k2(0, 0), 0);
  EXPECT_EQ(k2(0, 1), -1);
  EXPECT_EQ(k2(1, 0), -1);

  const auto e3 = seidel_matrix(Graph(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(e3(i, j), i == j ? 0 : 1);

  const auto p3 = seidel_matrix(path_graph(3));
  EXPECT_EQ(p3(0, 1), -1);
  EXPECT_EQ(p3(1, 2), -1);
  EXPECT_EQ(p3(0, 2), 1);
}

TEST(SeidelMatrix, EqualsJMinusIMinus2A) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng() % 15);
    const Graph g = oracle::random_graph(rng, n);
    const auto s = seidel_matrix(g);
    const auto a = adjacency_matrix(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        EXPECT_EQ(s(i, j), (i == j ? 0 : 1) - 2 * a(i, j));
  }
}

TEST(Switch, EmptyGraphToCompleteBipartite) {
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) {
      VertexSet u;
      for (int v = 0; v < p; ++v)
        u.insert(v);
      const Graph h = switch_graph(Graph(p + q), u);
      EXPECT_EQ(recognize_complete_multipartite(h), (MultipartiteSpec{p, q}));
      if (p >= q)
        EXPECT_EQ(h, complete_multipartite({p, q}));
    }
}

TEST(Switch, EmptyAndFullSubsetAreIdentity) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n);
    EXPECT_EQ(switch_graph(g, VertexSet{}), g);
    EXPECT_EQ(switch_graph(g, VertexSet::all(n)), g);
  }
}

TEST(Switch, SingleVertexGivesPaw) {
  // K1 u K2 u K2 on {0}, {1,2}, {3,4}; switching at an endpoint u = 1
  const Graph h = switch_graph(k1_k2_k2(), VertexSet{1});
  EXPECT_TRUE(oracle::isomorphic(h, disjoint_union(Graph(1), paw_graph())));
}

TEST(Switch, OnlyCrossPairsToggle) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, n);
    const VertexSet u = oracle::random_subset(rng, n);
    const Graph h = switch_graph(g, u);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        EXPECT_EQ(h.adjacent(a, b), g.adjacent(a, b) != (u.contains(a) != u.contains(b)));
  }
}

TEST(Switch, CompositionIsSymmetricDifference) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n);
    const VertexSet a = oracle::random_subset(rng, n), b = oracle::random_subset(rng, n);
    EXPECT_EQ(switch_graph(switch_graph(g, a), b), switch_graph(g, a ^ b));
  }
}

TEST(Switch, RejectsOutOfRange) { EXPECT_THROW(switch_graph(Graph(3), VertexSet{3}), argument_error); }

TEST(SignatureConjugation, Examples) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n);
    const VertexSet u = oracle::random_subset(rng, n);
    EXPECT_TRUE(signature_conjugation_check(g, switch_graph(g, u), u));
    EXPECT_TRUE(signature_conjugation_check(g, g, VertexSet{}));
  }
  for (std::uint64_t bits = 0; bits < 8; ++bits)
    EXPECT_FALSE(signature_conjugation_check(complete_graph(3), Graph(3), VertexSet(bits)));
  EXPECT_THROW(signature_conjugation_check(Graph(3), Graph(4), VertexSet{}), argument_error);
}

TEST(IsolateVertex, Examples) {
  Graph g = Graph::from_edges(5, {{1, 2}, {2, 3}});
  EXPECT_EQ(isolate_vertex_form(g, 0), g);

  const Graph kpq = complete_multipartite({3, 2});
  const Graph iso = isolate_vertex_form(kpq, 0);
  EXPECT_EQ(iso.degree(0), 0);

  for (int v = 0; v < 5; ++v) {
    const Graph c = isolate_vertex_form(cycle_graph(5), v);
    EXPECT_EQ(c.degree(v), 0);
    EXPECT_TRUE(oracle::isomorphic(c, disjoint_union(Graph(1), path_graph(4))));
  }
  EXPECT_THROW(isolate_vertex_form(g, 5), argument_error);
}

TEST(Isomorphism, Examples) {
  const Graph p4 = path_graph(4);
  const std::vector<int> rev{3, 2, 1, 0};
  const Graph q4 = relabel(p4, rev);
  auto perm = graph_isomorphism(p4, q4);
  ASSERT_TRUE(perm);
  EXPECT_EQ(relabel(p4, *perm), q4);

  EXPECT_FALSE(graph_isomorphism(complete_multipartite({3, 1}), p4));

  // K_{3,3} minus a perfect matching is a 6-cycle
  Graph m = complete_multipartite({3, 3});
  for (int i = 0; i < 3; ++i)
    m.remove_edge(i, i + 3);
  perm = graph_isomorphism(cycle_graph(6), m);
  ASSERT_TRUE(perm);
  EXPECT_EQ(relabel(cycle_graph(6), *perm), m);

  EXPECT_THROW(graph_isomorphism(Graph(3), Graph(4)), argument_error);
}

TEST(Isomorphism, AgreesWithBruteForce) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n);
    const Graph h = t % 2 ? relabel(g, oracle::random_permutation(rng, n)) : oracle::random_graph(rng, n);
    const auto perm = graph_isomorphism(g, h);
    EXPECT_EQ(perm.has_value(), oracle::isomorphic(g, h));
    if (perm)
      EXPECT_EQ(relabel(g, *perm), h);
  }
}

TEST(Isomorphism, LargeStructuredGraphs) {
  std::mt19937_64 rng(14);
  for (const auto& spec : {MultipartiteSpec{12, 10, 2}, MultipartiteSpec{16, 5, 3}, MultipartiteSpec{21, 13, 2}}) {
    const Graph g = complete_multipartite(spec);
    const Graph h = relabel(g, oracle::random_permutation(rng, g.order()));
    const auto perm = graph_isomorphism(g, h);
    ASSERT_TRUE(perm);
    EXPECT_EQ(relabel(g, *perm), h);
  }
  const Graph c = cycle_graph(40);
  const Graph r = relabel(c, oracle::random_permutation(rng, 40));
  ASSERT_TRUE(graph_isomorphism(c, r));
  EXPECT_FALSE(graph_isomorphism(cycle_graph(40), disjoint_union(cycle_graph(20), cycle_graph(20))));
}

TEST(SwitchingEquivalent, Examples) {
  const Graph k32 = complete_multipartite({3, 2});
  const Graph k41 = complete_multipartite({4, 1});
  auto cert = switching_equivalent(k32, k41);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(verify_certificate(k32, k41, *cert));

  EXPECT_FALSE(switching_equivalent(complete_multipartite({6, 6, 1}), complete_multipartite({9, 2, 2})));
  EXPECT_FALSE(switching_equivalent(complete_multipartite({2, 2, 1}), complete_multipartite({3, 1, 1})));
  EXPECT_TRUE(switching_equivalent(complete_multipartite({4, 4}), complete_multipartite({7, 1})));

  cert = switching_equivalent(complete_graph(2), complete_graph(2));
  ASSERT_TRUE(cert);
  EXPECT_TRUE(cert->subset.empty());
  EXPECT_EQ(cert->perm, (std::vector<int>{0, 1}));

  EXPECT_THROW(switching_equivalent(Graph(2), Graph(3)), argument_error);
}

TEST(SwitchingEquivalent, RandomSwitchAndRelabel) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Graph g = oracle::random_graph(rng, n);
    const Graph h = relabel(switch_graph(g, oracle::random_subset(rng, n)), oracle::random_permutation(rng, n));
    const auto cert = switching_equivalent(g, h);
    ASSERT_TRUE(cert);
    EXPECT_EQ(relabel(switch_graph(g, cert->subset), cert->perm), h);
  }
}

TEST(SwitchingEquivalent, AgreesWithSubsetScanOracle) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n);
    const Graph h = oracle::random_graph(rng, n);
    EXPECT_EQ(switching_equivalent(g, h).has_value(), oracle::switching_equivalent(g, h));
  }
}

TEST(Certificate, VerifyRejectsWrongCertificates) {
  const Graph g = complete_multipartite({3, 2});
  const Graph h = complete_multipartite({4, 1});
  SwitchingCertificate bad{VertexSet{0}, {0, 1, 2, 3, 4}};
  EXPECT_FALSE(verify_certificate(g, h, bad));
  SwitchingCertificate not_perm{VertexSet{3}, {0, 0, 2, 3, 4}};
  EXPECT_FALSE(verify_certificate(g, h, not_perm));
}
