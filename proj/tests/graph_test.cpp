#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sprecon/edge_list.hpp"
#include "sprecon/generators.hpp"
#include "sprecon/graph.hpp"

namespace sprecon {
namespace {

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId v = 0; v < n; ++v) b.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return b.build();
}

std::vector<bool> mask(std::size_t n, std::initializer_list<VertexId> on) {
  std::vector<bool> m(n, false);
  for (VertexId v : on) m[v] = true;
  return m;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  GraphBuilder b(n);
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

TEST(Graph, BuilderRejectsBadEdges) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(b.add_edge(0, 3), std::invalid_argument);
  EXPECT_TRUE(b.add_edge(2, 0));
  EXPECT_FALSE(b.add_edge(0, 2));
  Graph g = b.build();
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 1));
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], Edge(0, 2));
}

TEST(Graph, AdjacencySortedAndSymmetric) {
  std::mt19937_64 rng(5);
  Graph g = random_graph(rng, 40, 0.2);
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (VertexId u : nb) EXPECT_TRUE(g.has_edge(u, v));
    degree_sum += g.degree(v);
  }
  EXPECT_EQ(degree_sum, 2 * g.num_edges());
}

TEST(Graph, BfsPath) {
  EXPECT_EQ(bfs_distances(path(5), 0), (std::vector<Distance>{0, 1, 2, 3, 4}));
}

TEST(Graph, BfsSingleVertex) {
  EXPECT_EQ(bfs_distances(Graph(GraphBuilder(1).build()), 0), (std::vector<Distance>{0}));
}

TEST(Graph, BfsCycle) {
  EXPECT_EQ(bfs_distances(cycle(6), 0), (std::vector<Distance>{0, 1, 2, 3, 2, 1}));
}

TEST(Graph, BfsRootOutOfRange) {
  EXPECT_THROW(bfs_distances(path(3), 3), std::invalid_argument);
}

TEST(Graph, BfsUnreachable) {
  GraphBuilder b(3);
  b.add_edge(0, 1);
  auto d = bfs_distances(b.build(), 0);
  EXPECT_EQ(d[2], kUnreachable);
}

TEST(Graph, BfsMatchesFloydWarshall) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(rng, 30, 0.08);
    auto ref = testing::all_pairs(g);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
      auto d = bfs_distances(g, s);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        int want = ref[s][v] == testing::kInf ? kUnreachable : ref[s][v];
        ASSERT_EQ(d[v], want);
      }
    }
  }
}

TEST(Graph, BfsEdgesSpanAtMostOneLayer) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(rng, 50, 0.1);
    auto d = bfs_distances(g, 0);
    for (auto [u, v] : g.edges()) {
      if (d[u] == kUnreachable) {
        EXPECT_EQ(d[v], kUnreachable);
        continue;
      }
      EXPECT_LE(std::abs(d[u] - d[v]), 1);
    }
  }
}

TEST(Graph, ComponentsCycleExamples) {
  Graph c6 = cycle(6);
  auto a = components_masked(c6, mask(6, {1, 2, 3, 4, 5}));
  EXPECT_EQ(a[0], kNoVertex);
  for (VertexId v = 1; v <= 5; ++v) EXPECT_EQ(a[v], 1u);
  auto b = components_masked(c6, mask(6, {2, 3, 4}));
  for (VertexId v : {2u, 3u, 4u}) EXPECT_EQ(b[v], 2u);
  for (VertexId v : {0u, 1u, 5u}) EXPECT_EQ(b[v], kNoVertex);
}

TEST(Graph, ComponentsEmptyMask) {
  auto a = components_masked(cycle(6), std::vector<bool>(6, false));
  for (VertexId v : a) EXPECT_EQ(v, kNoVertex);
}

TEST(Graph, ComponentsMatchUnionFind) {
  std::mt19937_64 rng(99);
  std::bernoulli_distribution keep(0.6);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 1 + rng() % 40;
    Graph g = random_graph(rng, n, 0.06);
    std::vector<bool> alive(n);
    for (std::size_t v = 0; v < n; ++v) alive[v] = keep(rng);
    ASSERT_EQ(components_masked(g, alive), testing::uf_components(g, alive)) << "trial " << t;
  }
}

TEST(Graph, NeighborsOfSet) {
  std::vector<VertexId> s{2};
  EXPECT_EQ(neighbors_of_set(path(5), s), (std::vector<VertexId>{1, 3}));
  std::vector<VertexId> s2{0, 1};
  EXPECT_EQ(neighbors_of_set(cycle(6), s2), (std::vector<VertexId>{2, 5}));
  std::vector<VertexId> all{0, 1, 2, 3, 4, 5};
  EXPECT_TRUE(neighbors_of_set(cycle(6), all).empty());
}

TEST(Graph, NeighborsOfSetMatchesDefinition) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(rng, 25, 0.1);
    std::vector<VertexId> s;
    for (VertexId v = 0; v < 25; ++v) {
      if (rng() % 4 == 0) s.push_back(v);
    }
    std::vector<VertexId> want;
    for (VertexId u = 0; u < 25; ++u) {
      if (std::find(s.begin(), s.end(), u) != s.end()) continue;
      for (VertexId v : s) {
        if (g.has_edge(u, v)) {
          want.push_back(u);
          break;
        }
      }
    }
    ASSERT_EQ(neighbors_of_set(g, s), want);
  }
}

TEST(Graph, DegreeConnectivityEquality) {
  EXPECT_EQ(max_degree(cycle(6)), 2u);
  EXPECT_TRUE(is_connected(cycle(6)));
  GraphBuilder b(3);
  b.add_edge(0, 1);
  EXPECT_FALSE(is_connected(b.build()));
  EXPECT_TRUE(graphs_equal(cycle(5), cycle(5)));
  EXPECT_FALSE(graphs_equal(cycle(5), path(5)));
  EXPECT_FALSE(graphs_equal(path(4), path(5)));
}

TEST(Graph, InducedOnKeepsIdsAndInternalEdges) {
  Graph g = cycle(6);
  Graph h = induced_on(g, mask(6, {0, 1, 2, 5}));
  EXPECT_EQ(h.num_vertices(), 6u);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 5}, {1, 2}}));
}

TEST(EdgeList, ParsesPath) {
  Graph g = read_edge_list("3 2\n0 1\n1 2\n");
  EXPECT_TRUE(graphs_equal(g, path(3)));
}

TEST(EdgeList, SkipsCommentsAndBlankLines) {
  Graph g = read_edge_list("# header comment\n3 2\n\n0 1\n# mid\n2 1\n");
  EXPECT_TRUE(graphs_equal(g, path(3)));
}

std::string parse_error(std::string_view text) {
  try {
    read_edge_list(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(EdgeList, SelfLoopMessage) { EXPECT_EQ(parse_error("2 1\n0 0\n"), "self-loop at line 2"); }

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_NE(parse_error("3 2\n0 1\n0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error("3 2\n0 1\n1 5\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error("3 1\n0 x\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("3 2\n0 1\n").find("line"), std::string::npos);
  EXPECT_NE(parse_error("3 1\n0 1\n1 2\n").find("line 3"), std::string::npos);
  EXPECT_FALSE(parse_error("").empty());
  EXPECT_NE(parse_error("3 2\n0 1\n1 1\n").find("self-loop"), std::string::npos);
  EXPECT_NE(parse_error("3 2\n0 1\n0 1\n").find("duplicate"), std::string::npos);
}

TEST(EdgeList, RoundTripRandomFamilies) {
  SplitMix64 rng(17);
  for (int t = 0; t < 20; ++t) {
    FamilySpec spec;
    spec.family = Family::BoundedDegreeConnected;
    spec.n = 10 + rng.below(200);
    spec.max_degree = 3 + rng.below(3);
    spec.seed = rng.next();
    Graph g = generate(spec).graph;
    std::string text = write_edge_list(g);
    Graph back = read_edge_list(text);
    EXPECT_TRUE(graphs_equal(g, back));
    EXPECT_EQ(write_edge_list(back), text);
  }
}

}  // namespace
}  // namespace sprecon
