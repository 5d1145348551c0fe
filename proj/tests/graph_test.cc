// Copyright 2026 The pathadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <queue>
#include <random>

#include "oracles.h"
#include "pathadd/error.h"
#include "pathadd/graph.h"
#include "pathadd/random_instances.h"

namespace {

using namespace pathadd;

Graph RandomGraph(int n, int percent, Rng& rng) {
  Graph g;
  for (VertexId v = 0; v < n; ++v) g.AddVertex(v);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (rng.Uniform(0, 99) < percent) g.AddEdge(a, b);
  return g;
}

// Distances by Floyd-Warshall.
std::vector<std::vector<int>> AllDistances(const Graph& g) {
  int n = static_cast<int>(g.NumVertices());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.Edges()) d[e.a][e.b] = d[e.b][e.a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

TEST(Graph, EdgesAreNormalizedAndDeduplicated) {
  Graph g;
  g.AddVertex(3);
  g.AddVertex(1);
  EXPECT_TRUE(g.AddEdge(3, 1));
  EXPECT_FALSE(g.AddEdge(1, 3));
  EXPECT_EQ(g.NumEdges(), 1u);
  EXPECT_EQ(g.Edges().front(), Edge(1, 3));
  EXPECT_EQ(g.Edges().front().a, 1);
}

TEST(Graph, RejectsSelfLoopsAndUnknownVertices) {
  Graph g = PathGraph(3);
  try {
    g.AddEdge(1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    g.AddEdge(0, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVertex);
  }
}

TEST(Graph, FamiliesHaveTextbookSizes) {
  EXPECT_EQ(CompleteGraph(6).NumEdges(), 15u);
  EXPECT_EQ(CompleteBipartite(3, 4).NumEdges(), 12u);
  EXPECT_EQ(GridGraph(3, 4).NumEdges(), 17u);
  EXPECT_EQ(PetersenGraph().NumEdges(), 15u);
  for (VertexId v : PetersenGraph().Vertices()) EXPECT_EQ(PetersenGraph().Degree(v), 3);
}

TEST(Graph, ShortestPathMatchesFloydWarshall) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = RandomGraph(9, 30, rng);
    auto dist = AllDistances(g);
    for (VertexId u = 0; u < 9; ++u) {
      for (VertexId v = u + 1; v < 9; ++v) {
        if (dist[u][v] >= (1 << 20)) {
          EXPECT_THROW(ShortestPath(g, u, v), Error);
          continue;
        }
        VertexPath p = ShortestPath(g, u, v);
        ASSERT_EQ(static_cast<int>(p.size()) - 1, dist[u][v]);
        EXPECT_EQ(p.front(), u);
        EXPECT_EQ(p.back(), v);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.HasEdge(p[i], p[i + 1]));
      }
    }
  }
}

TEST(Graph, ContractAndSubdivideCounts) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = RandomGraph(8, 45, rng);
    for (const Edge& e : g.Edges()) {
      int common = 0;
      for (VertexId w : g.Neighbors(e.a)) common += g.HasEdge(e.b, w);
      Graph c = ContractEdge(g, e);
      EXPECT_EQ(c.NumVertices(), g.NumVertices() - 1);
      EXPECT_EQ(c.NumEdges(), g.NumEdges() - 1 - common);
      VertexId w = -1;
      Graph s = SubdivideEdge(g, e, &w);
      EXPECT_EQ(s.NumEdges(), g.NumEdges() + 1);
      EXPECT_TRUE(s.HasEdge(e.a, w) && s.HasEdge(w, e.b) && !s.HasEdge(e));
    }
  }
}

TEST(Graph, ComponentsPartitionTheVertices) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = RandomGraph(10, 12, rng);
    auto dist = AllDistances(g);
    auto comps = ConnectedComponents(g);
    std::size_t total = 0;
    for (const auto& c : comps) {
      total += c.size();
      for (VertexId a : c)
        for (VertexId b : c) EXPECT_LT(dist[a][b], 1 << 20);
    }
    EXPECT_EQ(total, g.NumVertices());
    EXPECT_EQ(IsConnected(g), comps.size() == 1);
  }
}

TEST(Graph, IsomorphismAgreesWithCanonicalForms) {
  auto graphs = oracle::AllGraphs(5);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      EXPECT_EQ(AreIsomorphic(oracle::ToGraph(graphs[i]), oracle::ToGraph(graphs[j])), i == j);
    }
  }
}

// Wagner: planar iff neither K_5 nor K_3,3 is a minor. Also the number of
// planar classes per order (OEIS A005470).
TEST(Planarity, AgreesWithWagnerOnAllSmallGraphs) {
  oracle::MinorOracle minors;
  const oracle::SmallGraph k5 = oracle::FromGraph(CompleteGraph(5));
  const oracle::SmallGraph k33 = oracle::FromGraph(CompleteBipartite(3, 3));
  const std::size_t planar_counts[] = {1, 1, 2, 4, 11, 33, 142, 822};
  for (int n = 1; n <= 7; ++n) {
    std::size_t planar = 0;
    for (const auto& g : oracle::AllGraphs(n)) {
      bool wagner = !minors.IsMinor(k5, g) && !minors.IsMinor(k33, g);
      ASSERT_EQ(IsPlanar(oracle::ToGraph(g)), wagner);
      planar += wagner;
    }
    EXPECT_EQ(planar, planar_counts[n]) << n;
  }
}

TEST(Minor, AgreesWithExhaustiveSearchOnSixVertices) {
  oracle::MinorOracle minors;
  std::vector<Graph> patterns = {CompleteGraph(3), CompleteGraph(4), CycleGraph(4),
                                 CompleteBipartite(2, 3), PathGraph(4)};
  for (const auto& g : oracle::AllGraphs(6)) {
    for (const Graph& h : patterns) {
      ASSERT_EQ(ContainsMinor(oracle::ToGraph(g), h), minors.IsMinor(oracle::FromGraph(h), g));
    }
  }
}

TEST(Minor, PetersenHasK5ButNotK6) {
  EXPECT_TRUE(ContainsMinor(PetersenGraph(), CompleteGraph(5)));
  EXPECT_FALSE(ContainsMinor(PetersenGraph(), CompleteGraph(6)));
}

}  // namespace
