#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "corona/graph.hpp"
#include "corona/matrix.hpp"
#include "corona/rcg.hpp"
#include "gtest/gtest.h"

namespace corona {
namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::uint64_t ipow64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

TEST(GraphTest, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), invalid_argument);
}

TEST(GraphTest, NormalizesEdgeOrder) {
  Graph g(4, {{3, 1}, {2, 0}, {0, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(CoronaProductTest, SmallExamples) {
  const Graph k1k1 = corona_product(complete_graph(1), complete_graph(1));
  EXPECT_EQ(k1k1, path_graph(2));

  const Graph k2k2 = corona_product(complete_graph(2), complete_graph(2));
  EXPECT_EQ(k2k2.vertex_count(), 6u);
  EXPECT_EQ(k2k2.edge_count(), 7u);
  // two triangles {0,2,3} and {1,4,5} joined by the edge 0-1
  EXPECT_EQ(k2k2.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}}));

  const Graph k3k3 = corona_product(complete_graph(3), complete_graph(3));
  EXPECT_EQ(k3k3.vertex_count(), 12u);
  EXPECT_EQ(k3k3.edge_count(), 21u);
}

TEST(CoronaProductTest, RejectsEmptyFactors) {
  EXPECT_THROW(corona_product(complete_graph(2), Graph(0, {})), invalid_argument);
  EXPECT_THROW(corona_product(Graph(0, {}), complete_graph(2)), invalid_argument);
}

TEST(CoronaProductTest, CountsAndLayoutOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = random_graph(rng, 1 + rng() % 8, 0.4);
    const Graph b = random_graph(rng, 1 + rng() % 6, 0.5);
    const Graph c = corona_product(a, b);
    const std::size_t n1 = a.vertex_count(), n2 = b.vertex_count();
    ASSERT_EQ(c.vertex_count(), n1 + n1 * n2);
    ASSERT_EQ(c.edge_count(), a.edge_count() + n1 * b.edge_count() + n1 * n2);
    for (Vertex i = 0; i < n1; ++i) {
      for (Vertex k = 0; k < n2; ++k) ASSERT_TRUE(c.has_edge(i, n1 + i * n2 + k));
      ASSERT_EQ(c.degree(i), a.degree(i) + n2);
    }
    for (auto [u, v] : a.edges()) ASSERT_TRUE(c.has_edge(u, v));
  }
}

TEST(BuildRcgTest, Examples) {
  const auto k2 = build_rcg(RcgParams(2, 0));
  EXPECT_EQ(k2.graph, complete_graph(2));
  EXPECT_EQ(k2.birth, (std::vector<std::uint32_t>{0, 0}));

  const auto c21 = build_rcg(RcgParams(2, 1));
  EXPECT_EQ(c21.graph.vertex_count(), 6u);
  EXPECT_EQ(c21.graph.edge_count(), 7u);
  EXPECT_EQ(c21.birth, (std::vector<std::uint32_t>{0, 0, 1, 1, 1, 1}));

  const auto c42 = build_rcg(RcgParams(4, 2));
  EXPECT_EQ(c42.graph.vertex_count(), 100u);
  EXPECT_EQ(c42.graph.edge_count(), 246u);
}

TEST(BuildRcgTest, RejectsSmallQ) {
  EXPECT_THROW(RcgParams(1, 0), invalid_argument);
  EXPECT_THROW(RcgParams(0, 3), invalid_argument);
}

TEST(BuildRcgTest, OrderSizeAndBirthClassesOnGrid) {
  for (std::uint32_t q = 2; q <= 5; ++q) {
    for (std::uint32_t g = 0; g <= 3; ++g) {
      const auto cg = build_rcg(RcgParams(q, g));
      const std::uint64_t n = q * ipow64(q + 1, g);
      const std::uint64_t m = q * (ipow64(q + 1, g + 1) - 2) / 2;
      EXPECT_EQ(cg.graph.vertex_count(), n) << q << "," << g;
      EXPECT_EQ(cg.graph.edge_count(), m) << q << "," << g;
      EXPECT_TRUE(cg.graph.connected());

      std::vector<std::uint64_t> per_birth(g + 1, 0);
      for (auto b : cg.birth) ++per_birth.at(b);
      EXPECT_EQ(per_birth[0], q);
      for (std::uint32_t b = 1; b <= g; ++b) EXPECT_EQ(per_birth[b], q * q * ipow64(q + 1, b - 1));
    }
  }
}

TEST(BuildRcgTest, NextGenerationIsCoronaWithClique) {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    for (std::uint32_t g = 1; g <= 3; ++g) {
      const auto prev = build_rcg(RcgParams(q, g - 1));
      const auto cur = build_rcg(RcgParams(q, g));
      EXPECT_EQ(corona_product(prev.graph, complete_graph(q)), cur.graph);

      // induced subgraph on the older vertices is the previous generation
      std::vector<Edge> older;
      for (auto [u, v] : cur.graph.edges())
        if (cur.birth[u] < g && cur.birth[v] < g) older.emplace_back(u, v);
      EXPECT_EQ(Graph(prev.graph.vertex_count(), older), prev.graph);
    }
  }
}

TEST(BuildRcgTest, VertexBudget) {
  try {
    build_rcg(RcgParams(2, 5), BuildOptions{100});
    FAIL() << "expected resource_limit_error";
  } catch (const resource_limit_error& e) {
    EXPECT_EQ(e.required(), 486u);
    EXPECT_EQ(e.budget(), 100u);
  }
  EXPECT_THROW(build_rcg(RcgParams(3, 40)), resource_limit_error);
  EXPECT_NO_THROW(build_rcg(RcgParams(2, 5), BuildOptions{486}));
}

TEST(BirthGenerationTest, Examples) {
  EXPECT_EQ(birth_generation(0, RcgParams(2, 3)), 0u);
  EXPECT_EQ(birth_generation(5, RcgParams(2, 1)), 1u);
  EXPECT_EQ(birth_generation(17, RcgParams(2, 2)), 2u);
  EXPECT_THROW(birth_generation(6, RcgParams(2, 1)), invalid_argument);
}

TEST(BirthGenerationTest, MatchesConstructionMetadata) {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    const RcgParams p(q, 3);
    const auto cg = build_rcg(p);
    for (Vertex v = 0; v < cg.graph.vertex_count(); ++v) ASSERT_EQ(birth_generation(v, p), cg.birth[v]);
  }
}

TEST(MatrixOfTest, K2Laplacian) {
  const auto l = matrix_of(complete_graph(2), MatrixKind::laplacian);
  EXPECT_EQ(l(0, 0), 1);
  EXPECT_EQ(l(0, 1), -1);
  EXPECT_EQ(l(1, 0), -1);
  EXPECT_EQ(l(1, 1), 1);
}

TEST(MatrixOfTest, C21AdjacencyHasFourteenOnes) {
  const auto a = matrix_of(build_rcg(RcgParams(2, 1)).graph, MatrixKind::adjacency);
  int ones = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) ones += a(i, j) == 1;
  EXPECT_EQ(ones, 14);
  EXPECT_TRUE(a.symmetric());
}

TEST(MatrixOfTest, LaplacianIsDegreeMinusAdjacencyWithZeroRowSums) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 1 + rng() % 12, 0.3);
    const auto a = matrix_of(g, MatrixKind::adjacency);
    const auto d = matrix_of(g, MatrixKind::degree);
    const auto l = matrix_of(g, MatrixKind::laplacian);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      std::int64_t row = 0;
      for (std::size_t j = 0; j < g.vertex_count(); ++j) {
        ASSERT_EQ(l(i, j), d(i, j) - a(i, j));
        row += l(i, j);
      }
      ASSERT_EQ(row, 0);
    }
  }
}

TEST(MatrixOfTest, RefusesHugeDenseMatrices) {
  const Graph big(kDenseMatrixVertexLimit + 1, {});
  EXPECT_THROW(matrix_of(big, MatrixKind::adjacency), resource_limit_error);
}

}  // namespace
}  // namespace corona
