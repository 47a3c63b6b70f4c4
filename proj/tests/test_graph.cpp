#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace seidel;

TEST(VertexSet, Basics) {
  VertexSet s{0, 3, 63};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(63));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.indices(), (std::vector<int>{0, 3, 63}));
  EXPECT_EQ(VertexSet::all(64).size(), 64);
  EXPECT_EQ((VertexSet{1, 2} ^ VertexSet{2, 3}), (VertexSet{1, 3}));
  EXPECT_THROW(s.insert(64), argument_error);
  EXPECT_THROW(s.insert(-1), argument_error);
}

TEST(Graph, RejectsBadEdges) {
  Graph g(4);
  EXPECT_THROW(g.add_edge(1, 1), argument_error);
  EXPECT_THROW(g.add_edge(0, 4), argument_error);
  EXPECT_THROW(Graph(65), capacity_error);
  g.add_edge(0, 1);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 0));
}

TEST(CompleteMultipartite, Examples) {
  const Graph k3 = complete_multipartite({1, 1, 1});
  EXPECT_EQ(k3, complete_graph(3));
  EXPECT_EQ(k3.edge_count(), 3u);

  const Graph c4 = complete_multipartite({2, 2});
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_TRUE(oracle::isomorphic(c4, cycle_graph(4)));

  const Graph k661 = complete_multipartite({6, 6, 1});
  EXPECT_EQ(k661.order(), 13);
  EXPECT_EQ(k661.edge_count(), 48u);
}

TEST(CompleteMultipartite, LargestPartFirstContiguous) {
  const Graph g = complete_multipartite({1, 3, 2});
  // Blocks {0,1,2} {3,4} {5}.
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(3, 4));
  EXPECT_TRUE(g.adjacent(4, 5));
}

TEST(CompleteMultipartite, Capacity) {
  EXPECT_THROW(complete_multipartite({40, 25}), capacity_error);
  EXPECT_NO_THROW(complete_multipartite({40, 24}));
}

TEST(MultipartiteSpec, ParseAndCanonicalForm) {
  EXPECT_EQ(MultipartiteSpec::parse("1,6,6"), (MultipartiteSpec{6, 6, 1}));
  EXPECT_EQ(MultipartiteSpec::parse("6,6,1").to_string(), "6,6,1");
  EXPECT_THROW(MultipartiteSpec({1, 0}), argument_error);
  EXPECT_THROW(MultipartiteSpec({2, 0}), argument_error); // K_{2,0} is not a valid spec
  try {
    MultipartiteSpec::parse("6,,1");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(MultipartiteSpec::parse(""), parse_error);
  EXPECT_THROW(MultipartiteSpec::parse("3,x"), parse_error);
}

TEST(DisjointUnion, Examples) {
  const Graph a = disjoint_union(Graph(1), path_graph(4));
  EXPECT_EQ(a.order(), 5);
  EXPECT_EQ(a.edge_count(), 3u);
  const Graph b = disjoint_union(disjoint_union(Graph(1), complete_graph(2)), complete_graph(2));
  EXPECT_EQ(b.order(), 5);
  EXPECT_EQ(b.edge_count(), 2u);
  const Graph e = disjoint_union(Graph(0), Graph(0));
  EXPECT_EQ(e.order(), 0);
  EXPECT_THROW(disjoint_union(Graph(40), Graph(25)), capacity_error);
  // h's indices are shifted by g's order
  EXPECT_TRUE(a.adjacent(1, 2));
  EXPECT_FALSE(a.adjacent(0, 1));
}

TEST(ComplementAndInduced, Examples) {
  EXPECT_EQ(complement(complete_graph(3)), Graph(3));
  const Graph k221 = complete_multipartite({2, 2, 1});
  EXPECT_EQ(induced_subgraph(k221, VertexSet{0, 1, 2, 3}), complete_multipartite({2, 2}));
  const Graph cliques = disjoint_union(complete_graph(3), complete_graph(2));
  EXPECT_EQ(complement(complete_multipartite({3, 2})), cliques);
  EXPECT_THROW(induced_subgraph(k221, VertexSet{}), argument_error);
  EXPECT_THROW(induced_subgraph(k221, VertexSet{5}), argument_error);
}

TEST(ComplementAndInduced, DenseRelabelPreservesOrder) {
  const Graph p = path_graph(5); // 0-1-2-3-4
  const Graph s = induced_subgraph(p, VertexSet{1, 2, 4});
  EXPECT_EQ(s, Graph::from_edges(3, {{0, 1}}));
}

TEST(Recognize, Examples) {
  EXPECT_EQ(recognize_complete_multipartite(complete_multipartite({6, 6, 1})), (MultipartiteSpec{6, 6, 1}));
  EXPECT_FALSE(recognize_complete_multipartite(path_graph(4)));
  EXPECT_FALSE(recognize_complete_multipartite(cycle_graph(5)));
  EXPECT_EQ(recognize_complete_multipartite(Graph(4)), (MultipartiteSpec{4}));
  EXPECT_FALSE(recognize_complete_multipartite(Graph(0)));
  EXPECT_FALSE(recognize_complete_multipartite(paw_graph()));
}

TEST(Recognize, RoundTripEverySpecUpTo14) {
  for (int n = 1; n <= 14; ++n)
    for (const auto& spec : partitions_of(n))
      EXPECT_EQ(recognize_complete_multipartite(complete_multipartite(spec)), spec) << spec.to_string();
}

TEST(Recognize, RelabeledInputs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto specs = partitions_of(9);
    const auto& spec = specs[rng() % specs.size()];
    const Graph g = relabel(complete_multipartite(spec), oracle::random_permutation(rng, 9));
    EXPECT_EQ(recognize_complete_multipartite(g), spec);
  }
}

TEST(Recognize, AgreesWithComplementCliqueTestOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g, std::uint64_t) {
      // complement a disjoint union of cliques <=> no induced path on three vertices in it
      const Graph c = complement(g);
      bool cliques = true;
      for (int a = 0; a < n && cliques; ++a)
        for (int b = 0; b < n && cliques; ++b)
          for (int d = 0; d < n; ++d)
            if (a != b && b != d && a != d && c.adjacent(a, b) && c.adjacent(b, d) && !c.adjacent(a, d))
              cliques = false;
      EXPECT_EQ(recognize_complete_multipartite(g).has_value(), cliques);
    });
}

TEST(GraphInvariants, ComplementInvolutionAndFullInducedIdentity) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(rng, n);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(induced_subgraph(g, VertexSet::all(n)), g);
    for (int u = 0; u < n; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (int v = 0; v < n; ++v)
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(enumerate_graphs(1).size(), 1u);
  EXPECT_EQ(enumerate_graphs(2).size(), 2u);
  EXPECT_EQ(enumerate_graphs(3).size(), 8u);
  EXPECT_EQ(labeled_graph_count(7), 2097152u);
  EXPECT_THROW(labeled_graph_count(8), capacity_error);
  EXPECT_EQ(labeled_graph_count(8, true), std::uint64_t{1} << 28);
  EXPECT_THROW(labeled_graph_count(12, true), capacity_error);
  EXPECT_THROW(labeled_graph_count(0), argument_error);
}

TEST(Enumeration, DistinctAndOrdered) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    std::uint64_t expected = 0;
    for_each_graph(n, [&](const Graph& g, std::uint64_t mask) {
      EXPECT_EQ(mask, expected++);
      seen.insert(graph6_encode(g));
    });
    EXPECT_EQ(seen.size(), labeled_graph_count(n));
  }
}

TEST(Enumeration, IntervalsCoverStream) {
  std::vector<std::uint64_t> masks;
  for_each_graph(5, [&](const Graph&, std::uint64_t m) { masks.push_back(m); }, 100, 200);
  ASSERT_EQ(masks.size(), 100u);
  EXPECT_EQ(masks.front(), 100u);
  EXPECT_EQ(masks.back(), 199u);
}

TEST(Partitions, Counts) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
  for (int n = 0; n <= 14; ++n)
    EXPECT_EQ(partitions_of(n).size(), n == 0 ? 0 : p[static_cast<std::size_t>(n)]);
  EXPECT_EQ(partitions_of(13, 3).size(), 14u);
}
