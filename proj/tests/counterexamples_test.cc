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

#include "pathadd/counterexamples.h"
#include "pathadd/error.h"
#include "pathadd/random_instances.h"
#include "pathadd/validators.h"

namespace {

using namespace pathadd;

// 2k-cycle, two poles on every cycle vertex, and all distance-2 chords.
Graph WheelOracle(int k) {
  int m = 2 * k;
  Graph g;
  for (VertexId v = 0; v < m + 2; ++v) g.AddVertex(v);
  auto add = [&](VertexId a, VertexId b) {
    if (!g.HasEdge(Edge(a, b))) g.AddEdge(a, b);
  };
  for (int i = 0; i < m; ++i) {
    add(i, (i + 1) % m);
    add(i, (i + 2) % m);
    add(i, m);
    add(i, m + 1);
  }
  return g;
}

TEST(ExtendedWheel, MatchesDefinition) {
  for (int k = 2; k <= 6; ++k) {
    ExtendedWheel xw = MakeExtendedWheel(k);
    EXPECT_EQ(xw.graph, WheelOracle(k)) << k;
    EXPECT_EQ(xw.embedding.graph, xw.graph);
    EXPECT_FALSE(xw.graph.HasEdge(Edge(xw.p, xw.q)));
    EXPECT_EQ(static_cast<int>(xw.cycle.size()), 2 * k);
  }
}

TEST(ExtendedWheel, EdgeCensus) {
  for (int k = 3; k <= 6; ++k) EXPECT_EQ(MakeExtendedWheel(k).graph.NumEdges(), 8u * k);
  // Distance-2 chords of a 4-cycle coincide pairwise.
  EXPECT_EQ(MakeExtendedWheel(2).graph.NumEdges(), 14u);
}

TEST(ExtendedWheel, DrawingIsOnePlanarWithCleanCycle) {
  for (int k = 2; k <= 6; ++k) {
    ExtendedWheel xw = MakeExtendedWheel(k);
    EXPECT_NO_THROW(ValidateEmbedding(xw.embedding));
    EXPECT_TRUE(CheckKPlanar(xw.embedding, 1).verdict) << k;
    auto partners = CrossingPartners(xw.embedding);
    for (int i = 0; i < 2 * k; ++i) {
      Edge e(xw.cycle[i], xw.cycle[(i + 1) % (2 * k)]);
      EXPECT_TRUE(!partners.count(e) || partners.at(e).empty()) << k << " " << i;
    }
  }
}

TEST(ExtendedWheel, RejectsSmallK) {
  EXPECT_THROW(MakeExtendedWheel(1), Error);
}

TEST(K2q, SizesAndBipartition) {
  for (int q = 1; q <= 13; ++q) {
    Graph g = K2q(q);
    EXPECT_EQ(g.NumVertices(), 2u + q);
    EXPECT_EQ(g.NumEdges(), 2u * q);
    EXPECT_TRUE(AreIsomorphic(g, CompleteBipartite(2, q)));
  }
}

TEST(K2q, AllOutsideDrawingDoublesUpOnTheQuadrangle) {
  GeometricEmbedding emb = K2qAllOutside(13);
  EXPECT_TRUE(AreIsomorphic(emb.graph, CompleteBipartite(2, 13)));
  EXPECT_NO_THROW(ValidateEmbedding(emb));
  EXPECT_FALSE(CheckKPlanar(emb, 1).verdict);
  auto partners = CrossingPartners(emb);
  int doubled = 0;
  for (const auto& [e, set] : partners) {
    if (set.size() >= 2 && (e.a <= 3 && e.b <= 3)) ++doubled;
  }
  EXPECT_GE(doubled, 1);
}

TEST(Dodecahedron, FacesAndCrossedVersion) {
  Graph d = Dodecahedron();
  EXPECT_EQ(d.NumVertices(), 20u);
  EXPECT_EQ(d.NumEdges(), 30u);
  EXPECT_TRUE(IsPlanar(d));
  for (VertexId v : d.Vertices()) EXPECT_EQ(d.Degree(v), 3);
  auto faces = DodecahedronFaces();
  ASSERT_EQ(faces.size(), 12u);
  std::map<VertexId, int> incidence;
  for (const auto& f : faces) {
    ASSERT_EQ(f.size(), 5u);
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(d.HasEdge(Edge(f[i], f[(i + 1) % 5])));
    for (VertexId v : f) ++incidence[v];
  }
  for (const auto& [v, c] : incidence) EXPECT_EQ(c, 3);

  Graph x = CrossedDodecahedron();
  EXPECT_EQ(x.NumEdges(), 90u);
  EXPECT_FALSE(IsPlanar(x));
  for (const auto& f : faces) {
    Graph face = InducedSubgraph(x, std::set<VertexId>(f.begin(), f.end()));
    EXPECT_EQ(face.NumEdges(), 10u);
  }
}

ErrorCode BinucciCode(const BinucciConfig& c) {
  try {
    MakeBinucciGraph(c);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kResource;
}

TEST(Binucci, CountsFollowTheConfiguration) {
  BinucciConfig c = BinucciConfig::Default();
  BinucciGraph b = MakeBinucciGraph(c);
  std::size_t per_blob = 21 + c.attach_first.size() + c.attach_second.size();
  EXPECT_EQ(b.graph.NumVertices(), 10u + 7u * c.bold.size());
  EXPECT_EQ(b.graph.NumEdges(), per_blob * c.bold.size() + c.thin.size());
  EXPECT_EQ(b.graph.NumVertices(), 80u);
  EXPECT_EQ(b.graph.NumEdges(), 252u);
  ASSERT_EQ(b.blobs.size(), c.bold.size());
  for (const BinucciBlob& blob : b.blobs) {
    Graph k7 = InducedSubgraph(b.graph, std::set<VertexId>(blob.vertices.begin(), blob.vertices.end()));
    EXPECT_EQ(k7.NumEdges(), 21u);
    VertexId s = b.skeleton[blob.pair.first - 1], t = b.skeleton[blob.pair.second - 1];
    for (int i : c.attach_first) EXPECT_TRUE(b.graph.HasEdge(Edge(s, blob.vertices[i])));
    for (int i : c.attach_second) EXPECT_TRUE(b.graph.HasEdge(Edge(t, blob.vertices[i])));
  }
  ASSERT_EQ(b.removed_targets.size(), c.removed.size());
  for (const Edge& e : b.removed_targets) EXPECT_FALSE(b.graph.HasEdge(e));
  EXPECT_TRUE(IsConnected(b.graph));
}

TEST(Binucci, InvalidConfigurations) {
  BinucciConfig bad_pair = BinucciConfig::Default();
  bad_pair.bold.push_back({3, 3});
  EXPECT_EQ(BinucciCode(bad_pair), ErrorCode::kInvalidConfiguration);
  BinucciConfig out_of_range = BinucciConfig::Default();
  out_of_range.thin.push_back({0, 11});
  EXPECT_EQ(BinucciCode(out_of_range), ErrorCode::kInvalidConfiguration);
  BinucciConfig dup = BinucciConfig::Default();
  dup.thin.push_back(dup.bold.front());
  EXPECT_EQ(BinucciCode(dup), ErrorCode::kInvalidConfiguration);
  BinucciConfig attach = BinucciConfig::Default();
  attach.attach_first.push_back(7);
  EXPECT_EQ(BinucciCode(attach), ErrorCode::kInvalidConfiguration);
  BinucciConfig both = BinucciConfig::Default();
  both.attach_second.push_back(both.attach_first.front());
  EXPECT_EQ(BinucciCode(both), ErrorCode::kInvalidConfiguration);
}

// Drawn on a convex position so nothing crosses.
GeometricEmbedding ConvexDrawing(const Graph& g) {
  GeometricEmbedding emb;
  emb.graph = g;
  int i = 0;
  for (VertexId v : g.Vertices()) {
    emb.coords[v] = Point{Rational(i), Rational(i * i)};
    ++i;
  }
  return emb;
}

TEST(Scp, TreesAndCyclesHaveNoSeparatingCycle) {
  EXPECT_FALSE(ScpCheck(Planarize(ConvexDrawing(PathGraph(6)))).has_value());
  EXPECT_FALSE(ScpCheck(Planarize(ConvexDrawing(CycleGraph(5)))).has_value());
}

// Without crossings, removing a cycle is vertex deletion.
TEST(Scp, CrossingFreeRemovalIsVertexDeletion) {
  Rng rng(60);
  for (int trial = 0; trial < 20; ++trial) {
    GeometricEmbedding emb = RandomStackedTriangulation(rng.Uniform(5, 12), rng);
    Planarization pl = Planarize(emb);
    auto found = ScpCheck(pl);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->cycle.size(), 3u);
    EXPECT_EQ(found->dummies, 0);
    std::set<VertexId> rest;
    for (VertexId v : emb.graph.Vertices()) rest.insert(v);
    for (VertexId v : found->cycle) rest.erase(v);
    auto expected = ConnectedComponents(InducedSubgraph(emb.graph, rest));
    auto got = RemoveCycle(pl, found->cycle);
    EXPECT_EQ(std::set(got.begin(), got.end()), std::set(expected.begin(), expected.end()));
  }
}

TEST(Scp, ExtendedWheelCycleSeparatesPoles) {
  for (int k = 2; k <= 5; ++k) {
    ExtendedWheel xw = MakeExtendedWheel(k);
    Planarization pl = Planarize(xw.embedding);
    ScpOptions opt;
    opt.separate = std::make_pair(std::set<VertexId>{xw.p}, std::set<VertexId>{xw.q});
    auto found = ScpCheck(pl, opt);
    ASSERT_TRUE(found.has_value()) << k;
    std::set<VertexId> cycle(found->cycle.begin(), found->cycle.end());
    EXPECT_EQ(cycle, std::set<VertexId>(xw.cycle.begin(), xw.cycle.end()));
    EXPECT_EQ(found->dummies, 0);
  }
}

TEST(Scp, BudgetIsCycleTimesCap) {
  for (int k = 2; k <= 5; ++k) {
    ExtendedWheel xw = MakeExtendedWheel(k);
    BudgetReport r = TraversalBudgetDemo(xw.embedding, xw.p, xw.q, 1);
    EXPECT_EQ(r.cycle_length, 2 * k);
    EXPECT_EQ(r.cap, 1);
    EXPECT_EQ(r.budget, 2 * k);
    EXPECT_EQ(r.demand, 2 * k + 1);
  }
  ExtendedWheel xw = MakeExtendedWheel(3);
  BudgetReport two = TraversalBudgetDemo(xw.embedding, xw.p, xw.q, 2);
  EXPECT_EQ(two.budget, 12);
  EXPECT_EQ(two.demand, two.budget + 1);
}

TEST(Scp, BarRingWitness) {
  BarRingWitness w = MakeBarRingWitness();
  EXPECT_NO_THROW(CheckWellFormed(w.rep));
  EXPECT_TRUE(CheckBarVisibility(w.rep, w.graph, 1).verdict);
  EXPECT_EQ(w.graph, GraphOfSights(w.rep));
  BudgetReport r = TraversalBudgetDemo(w.rep, w.u, w.v, 2);
  EXPECT_EQ(r.cycle_length, 5);
  EXPECT_EQ(r.budget, 10);
  EXPECT_EQ(r.demand, 11);
}

TEST(Scp, NoSeparatingCycleIsAnError) {
  GeometricEmbedding path = ConvexDrawing(PathGraph(4));
  try {
    TraversalBudgetDemo(path, 0, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSeparatingCycle);
  }
}

}  // namespace
