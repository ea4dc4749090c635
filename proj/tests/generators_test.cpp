#include <gtest/gtest.h>

#include "sprecon/generators.hpp"
#include "sprecon/layering.hpp"

namespace sprecon {
namespace {

FamilySpec spec_of(Family f, std::size_t n, std::size_t delta, std::uint64_t seed) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.max_degree = delta;
  s.seed = seed;
  return s;
}

bool contains(const std::vector<std::string>& report, const std::string& word) {
  for (const auto& r : report) {
    if (r.find(word) != std::string::npos) return true;
  }
  return false;
}

TEST(SplitMix64, ReferenceStream) {
  SplitMix64 a(0);
  EXPECT_EQ(a.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(a.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(a.next(), 0x06c45d188009454fULL);
  SplitMix64 b(1234567);
  EXPECT_EQ(b.next(), 0x599ed017fb08fc85ULL);
  EXPECT_EQ(b.next(), 0x2c73f08458540fa5ULL);
  EXPECT_EQ(b.next(), 0x883ebce5a3f27c77ULL);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 r(9);
  std::vector<int> hits(7, 0);
  for (int t = 0; t < 7000; ++t) {
    auto x = r.below(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(r.below(1), 0u);
}

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::RandomTree, Family::KTree, Family::RingOfCliques, Family::Cycle,
                   Family::Caterpillar, Family::BoundedDegreeConnected}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_EQ(parse_family("KTree"), Family::KTree);
  EXPECT_THROW(parse_family("grid"), std::invalid_argument);
}

TEST(Generate, RandomTreeDegreeTwoIsPath) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = generate(spec_of(Family::RandomTree, 5, 2, seed)).graph;
    EXPECT_EQ(g.num_edges(), 4u);
    EXPECT_EQ(max_degree(g), 2u);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(Generate, CycleSix) {
  Graph g = generate(spec_of(Family::Cycle, 6, 2, 0)).graph;
  std::vector<Edge> want{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  EXPECT_EQ(g.edges(), want);
  EXPECT_EQ(tree_length(g, build_layering_tree(g, build_layering(g, 0))), 2);
}

TEST(Generate, KTreeIsChordal) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    FamilySpec s = spec_of(Family::KTree, 20 + seed * 13, 6, seed);
    GeneratedGraph gen = generate(s);
    EXPECT_TRUE(is_chordal(gen.graph));
    EXPECT_EQ(gen.treelength_bound, 1);
    EXPECT_EQ(gen.graph.num_edges(), 3 + (s.n - 3) * 2);
  }
}

TEST(Generate, Deterministic) {
  for (Family f : {Family::RandomTree, Family::KTree, Family::Caterpillar,
                   Family::BoundedDegreeConnected}) {
    FamilySpec s = spec_of(f, 300, 8, 42);
    EXPECT_EQ(generate(s).graph, generate(s).graph);
    FamilySpec t = s;
    t.seed = 43;
    EXPECT_NE(generate(s).graph, generate(t).graph);
  }
}

TEST(Generate, Infeasible) {
  EXPECT_THROW(generate(spec_of(Family::RandomTree, 5, 1, 0)), std::invalid_argument);
  EXPECT_THROW(generate(spec_of(Family::RandomTree, 0, 3, 0)), std::invalid_argument);
  EXPECT_THROW(generate(spec_of(Family::Cycle, 2, 2, 0)), std::invalid_argument);
  EXPECT_THROW(generate(spec_of(Family::Cycle, 6, 1, 0)), std::invalid_argument);
  EXPECT_THROW(generate(spec_of(Family::KTree, 20, 2, 0)), std::invalid_argument);
  FamilySpec ring = spec_of(Family::RingOfCliques, 10, 3, 0);
  EXPECT_THROW(generate(ring), std::invalid_argument);  // 10 is not a multiple of 3
  ring.n = 6;
  EXPECT_THROW(generate(ring), std::invalid_argument);  // needs at least 3 cliques
}

TEST(VerifyInvariants, CleanOnGeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t n = 9 + seed * 7;
    std::vector<FamilySpec> specs{
        spec_of(Family::RandomTree, n, 3 + seed % 3, seed),
        spec_of(Family::KTree, n, 8, seed),
        spec_of(Family::Cycle, n, 2, seed),
        spec_of(Family::Caterpillar, n, 3 + seed % 2, seed),
        spec_of(Family::BoundedDegreeConnected, n, 3 + seed % 3, seed)};
    FamilySpec ring = spec_of(Family::RingOfCliques, 3 * (3 + seed % 5), 3, seed);
    specs.push_back(ring);
    FamilySpec ring4 = spec_of(Family::RingOfCliques, 4 * (3 + seed % 5), 4, seed);
    ring4.clique_size = 4;
    specs.push_back(ring4);
    for (const auto& s : specs) {
      Graph g = generate(s).graph;
      auto report = verify_family_invariants(g, s);
      EXPECT_TRUE(report.empty()) << family_name(s.family) << " n=" << s.n << ": " << report.front();
      EXPECT_LE(max_degree(g), s.max_degree);
      EXPECT_TRUE(is_connected(g));
    }
  }
}

TEST(VerifyInvariants, ChordlessSquareIsNotAKTree) {
  std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  Graph g = make_graph(4, c4);
  EXPECT_FALSE(is_chordal(g));
  auto report = verify_family_invariants(g, spec_of(Family::KTree, 4, 8, 0));
  EXPECT_TRUE(contains(report, "chordal"));
}

TEST(VerifyInvariants, DegreeCap) {
  std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  Graph g = make_graph(5, star);
  auto report = verify_family_invariants(g, spec_of(Family::RandomTree, 5, 3, 0));
  EXPECT_TRUE(contains(report, "degree"));
}

TEST(Chordal, SmallCases) {
  std::vector<Edge> diamond{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_TRUE(is_chordal(make_graph(4, diamond)));
  std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  EXPECT_FALSE(is_chordal(make_graph(5, c5)));
  EXPECT_TRUE(is_chordal(generate(spec_of(Family::RandomTree, 50, 3, 1)).graph));
}

TEST(Chordal, KTreeLengthAtMostThree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate(spec_of(Family::KTree, 30 + seed * 20, 8, seed)).graph;
    EXPECT_LE(tree_length(g, build_layering_tree(g, build_layering(g, 0))), 3);
  }
}

}  // namespace
}  // namespace sprecon
