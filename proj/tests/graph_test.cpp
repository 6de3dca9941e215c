#include "interlace/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "interlace/error.hpp"

namespace interlace {
namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

SimpleGraph G(std::size_t n, Edges e) { return SimpleGraph::from_edges(n, e); }

TEST(Graph, NeighborhoodSetExamples) {
  EXPECT_EQ(neighborhood_set(SimpleGraph::complete(2), 0b1), 0b10U);
  EXPECT_EQ(neighborhood_set(SimpleGraph::path(3), 0b101), 0U);
  EXPECT_EQ(neighborhood_set(SimpleGraph::complete(4), 0), 0U);
  EXPECT_THROW(neighborhood_set(SimpleGraph::complete(2), 0b100), ContractError);
}

TEST(Graph, PivotExamples) {
  const SimpleGraph k3 = SimpleGraph::complete(3);
  EXPECT_EQ(pivot(k3, 1, 2), k3);
  const SimpleGraph p3 = SimpleGraph::path(3);
  EXPECT_EQ(pivot(p3, 0, 1), p3);
  EXPECT_EQ(pivot(SimpleGraph::path(4), 1, 2), G(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

TEST(Graph, PivotErrors) {
  EXPECT_THROW(pivot(SimpleGraph::path(3), 0, 2), ContractError);
  SimpleGraph looped(3, true);
  looped.add_edge(0, 1);
  looped.add_edge(2, 2);
  EXPECT_THROW(pivot(looped, 0, 1), ContractError);
  EXPECT_NO_THROW(pivot_unlooped_edge(looped, 0, 1));
  looped.add_edge(1, 1);
  EXPECT_THROW(pivot_unlooped_edge(looped, 0, 1), ContractError);
}

TEST(Graph, PivotKeepsOtherLoops) {
  SimpleGraph g(4, true);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 2);
  g.add_edge(3, 3);
  const SimpleGraph p = pivot_unlooped_edge(g, 0, 1);
  EXPECT_TRUE(p.has_loop(2));
  EXPECT_TRUE(p.has_loop(3));
  EXPECT_TRUE(p.has_edge(2, 3));
}

TEST(Graph, LocalComplementExamples) {
  EXPECT_EQ(local_complement(SimpleGraph::complete(3), 0), G(3, {{0, 1}, {0, 2}}));
  EXPECT_EQ(local_complement(SimpleGraph::empty(4), 2), SimpleGraph::empty(4));
  EXPECT_EQ(local_complement(SimpleGraph::path(3), 1), SimpleGraph::complete(3));
  EXPECT_THROW(local_complement(SimpleGraph::path(3), 3), ContractError);
}

TEST(Graph, LocalComplementAtLoopedVertexTogglesNeighborLoops) {
  SimpleGraph g(3, true);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 1);
  const SimpleGraph h = local_complement(g, 0);
  EXPECT_FALSE(h.has_loop(1));
  EXPECT_TRUE(h.has_loop(2));
  EXPECT_TRUE(h.has_edge(1, 2));
  EXPECT_TRUE(h.has_loop(0));
  EXPECT_EQ(h.neighbors(0), g.neighbors(0));
  EXPECT_EQ(local_complement(h, 0), g);
}

TEST(Graph, InducedSubgraphAndAdjacency) {
  EXPECT_EQ(adjacency_matrix(SimpleGraph::complete(3), 0), GF2Matrix(0, 0));
  EXPECT_EQ(adjacency_matrix(SimpleGraph::complete(2)), GF2Matrix::from_rows({{0, 1}, {1, 0}}));
  const GF2Matrix k3 = adjacency_matrix(SimpleGraph::complete(3));
  EXPECT_EQ(k3, GF2Matrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(rank(k3), 2U);
  EXPECT_EQ(induced_subgraph(SimpleGraph::path(4), 0b1110), SimpleGraph::path(3));

  SimpleGraph looped(2, true);
  looped.add_edge(1, 1);
  EXPECT_EQ(adjacency_matrix(looped), GF2Matrix::from_rows({{0, 0}, {0, 1}}));
}

TEST(Graph, EvenSubgraphExamples) {
  EXPECT_TRUE(is_even_subgraph(SimpleGraph::path(5), 0));
  EXPECT_TRUE(is_even_subgraph(SimpleGraph::complete(3), 0b111));
  EXPECT_FALSE(is_even_subgraph(SimpleGraph::complete(2), 0b11));
}

TEST(Graph, DeleteVertexExamples) {
  EXPECT_EQ(delete_vertex(SimpleGraph::complete(2), 0), SimpleGraph::complete(1));
  EXPECT_EQ(delete_vertex(SimpleGraph::empty(4), 2), SimpleGraph::empty(3));
  EXPECT_EQ(delete_vertex(SimpleGraph::complete(3), 1), SimpleGraph::complete(2));
  EXPECT_EQ(delete_vertex(SimpleGraph::path(4), 1), G(3, {{1, 2}}));
}

TEST(Graph, CanonicalKey) {
  EXPECT_EQ(canonical_key(SimpleGraph::empty(0)), canonical_key(SimpleGraph()));
  EXPECT_EQ(canonical_key(G(3, {{0, 2}})), canonical_key(G(3, {{2, 0}})));
  EXPECT_NE(canonical_key(SimpleGraph::complete(2)), canonical_key(SimpleGraph::empty(2)));
  EXPECT_NE(canonical_key(SimpleGraph::empty(2)), canonical_key(SimpleGraph::empty(3)));
}

TEST(Graph, CapAndLoopGuards) {
  EXPECT_THROW(SimpleGraph(64), CapacityError);
  EXPECT_NO_THROW(SimpleGraph(63));
  SimpleGraph g(2);
  EXPECT_THROW(g.add_edge(1, 1), ContractError);
  EXPECT_THROW(g.add_edge(0, 2), ContractError);
}

TEST(Graph, EdgesSortedAndCounted) {
  SimpleGraph g(4, true);
  g.add_edge(3, 1);
  g.add_edge(2, 2);
  g.add_edge(0, 3);
  EXPECT_EQ(g.edges(), (Edges{{0, 3}, {1, 3}, {2, 2}}));
  EXPECT_EQ(g.edge_count(), 3U);
}

// Exhaustive structural identities for every labeled graph on up to 6 vertices.
class AllGraphs : public ::testing::TestWithParam<std::size_t> {};

TEST_P(AllGraphs, LocalComplementIsInvolution) {
  const std::size_t n = GetParam();
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << pair_count(n)); ++idx) {
    const SimpleGraph g = graph_from_index(n, idx);
    for (std::size_t v = 0; v < n; ++v) ASSERT_EQ(local_complement(local_complement(g, v), v), g);
  }
}

TEST_P(AllGraphs, PivotIdentities) {
  const std::size_t n = GetParam();
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << pair_count(n)); ++idx) {
    const SimpleGraph g = graph_from_index(n, idx);
    for (auto [v, w] : g.edges()) {
      const SimpleGraph p = pivot(g, v, w);
      ASSERT_TRUE(p.has_edge(v, w));
      ASSERT_EQ(pivot(p, v, w), g);
      ASSERT_EQ(pivot(g, w, v), p);
      const SimpleGraph vwv = local_complement(local_complement(local_complement(g, v), w), v);
      ASSERT_EQ(swap_labels(vwv, v, w), p);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(UpToSix, AllGraphs, ::testing::Range<std::size_t>(0, 7));

TEST(Graph, TripleLocalComplementIsPivotOnlyUpToSwap) {
  // G*0*1*0 on the path 0-1-2 is the path 1-0-2, the pivot with 0 and 1 exchanged.
  const SimpleGraph p3 = SimpleGraph::path(3);
  const SimpleGraph vwv = local_complement(local_complement(local_complement(p3, 0), 1), 0);
  EXPECT_EQ(vwv, G(3, {{0, 1}, {0, 2}}));
  EXPECT_NE(vwv, pivot(p3, 0, 1));
  EXPECT_EQ(swap_labels(vwv, 0, 1), pivot(p3, 0, 1));
}

TEST(Graph, NeighborhoodSetIsLinear) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const SimpleGraph g = random_graph(1 + rng() % 40, 0.4, rng);
    const VertexSet p = rng() & g.all();
    const VertexSet q = rng() & g.all();
    EXPECT_EQ(neighborhood_set(g, p ^ q), neighborhood_set(g, p) ^ neighborhood_set(g, q));
  }
}

TEST(Graph, RandomGraphIsDeterministic) {
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(random_graph(12, 0.5, a, 0.2), random_graph(12, 0.5, b, 0.2));
}

}  // namespace
}  // namespace interlace
