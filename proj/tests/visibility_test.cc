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

#include <algorithm>

#include "oracles.h"
#include "pathadd/error.h"
#include "pathadd/random_instances.h"
#include "pathadd/visibility.h"

namespace {

using namespace pathadd;

// Pairs seeing each other through at most k bars, checked at the midpoint of
// every elementary x-interval.
std::set<Edge> OracleVisibilities(const BarRepresentation& rep, int k) {
  std::vector<Rational> xs;
  for (const auto& [id, b] : rep.bars) {
    xs.push_back(b.x_lo);
    xs.push_back(b.x_hi);
  }
  std::sort(xs.begin(), xs.end());
  std::set<Edge> out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] == xs[i + 1]) continue;
    Rational m = (xs[i] + xs[i + 1]) / 2;
    for (const auto& [a, ba] : rep.bars) {
      for (const auto& [b, bb] : rep.bars) {
        if (a >= b || ba.y == bb.y) continue;
        if (m < ba.x_lo || m > ba.x_hi || m < bb.x_lo || m > bb.x_hi) continue;
        Rational lo = std::min(ba.y, bb.y), hi = std::max(ba.y, bb.y);
        int between = 0;
        for (const auto& [c, bc] : rep.bars) {
          if (bc.y > lo && bc.y < hi && m >= bc.x_lo && m <= bc.x_hi) ++between;
        }
        if (between <= k) out.insert(Edge(a, b));
      }
    }
  }
  return out;
}

bool HasNote(const ValidationReport& r, const std::string& note) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const Witness& w) { return w.note.rfind(note, 0) == 0; });
}

TEST(BarVisibility, EpsilonVisibilitiesMatchOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    BarRepresentation rep = RandomBarRepresentation(rng.Uniform(2, 12), rng);
    for (int k = 0; k <= 2; ++k) {
      EXPECT_EQ(EpsilonVisibilities(rep, k), OracleVisibilities(rep, k)) << trial << " k=" << k;
    }
  }
}

TEST(BarVisibility, RandomInstancesAreStrong) {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    BarRepresentation rep = RandomBarRepresentation(rng.Uniform(2, 12), rng);
    EXPECT_NO_THROW(CheckWellFormed(rep));
    Graph g = GraphOfSights(rep);
    EXPECT_TRUE(CheckBarVisibility(rep, g, 1, std::nullopt, true).verdict);
    for (const Sight& s : rep.sights) EXPECT_LE(TraversedBars(rep, s).size(), 1u);
  }
}

TEST(BarVisibility, PlanarizationSatisfiesEuler) {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    BarRepresentation rep = RandomBarRepresentation(rng.Uniform(1, 12), rng);
    VisibilityPlanarization vp = PlanarizeVisibility(rep);
    int n = vp.planar.graph.NumVertices(), m = vp.planar.graph.NumEdges();
    EXPECT_EQ(n - m + vp.NumFaces(), 1 + vp.components) << trial;
    EXPECT_EQ(vp.faces.size(), vp.closed.size());
    // Each bar is one closed face, split once more by every sight through it.
    long traversals = 0;
    for (const Sight& s : rep.sights) traversals += TraversedBars(rep, s).size();
    EXPECT_EQ(std::count(vp.closed.begin(), vp.closed.end(), true),
              static_cast<long>(rep.bars.size()) + traversals);
    for (VertexId x : vp.planar.graph.Vertices()) EXPECT_TRUE(vp.bar_of.count(x));
  }
}

ErrorCode MalformedCode(const BarRepresentation& rep) {
  try {
    CheckWellFormed(rep);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kResource;
}

TEST(BarVisibility, MalformedRepresentations) {
  BarRepresentation ok;
  ok.bars[0] = {0, 0, 4};
  ok.bars[1] = {2, 1, 5};
  ok.sights.push_back({0, 1, 2});
  EXPECT_EQ(MalformedCode(ok), ErrorCode::kResource);

  BarRepresentation empty = ok;
  empty.bars[0].x_hi = 0;
  EXPECT_EQ(MalformedCode(empty), ErrorCode::kMalformedRepresentation);

  BarRepresentation overlap = ok;
  overlap.bars[2] = {0, 3, 6};
  EXPECT_EQ(MalformedCode(overlap), ErrorCode::kMalformedRepresentation);

  BarRepresentation outside = ok;
  outside.sights[0].x = Rational(9, 2);
  EXPECT_EQ(MalformedCode(outside), ErrorCode::kMalformedRepresentation);

  BarRepresentation flat = ok;
  flat.bars[2] = {0, 6, 8};
  flat.sights.push_back({0, 2, 3});
  EXPECT_EQ(MalformedCode(flat), ErrorCode::kMalformedRepresentation);

  BarRepresentation twice = ok;
  twice.sights.push_back({0, 1, 2});
  EXPECT_EQ(MalformedCode(twice), ErrorCode::kMalformedRepresentation);
}

TEST(BarVisibility, ValidatorWitnesses) {
  BarRepresentation rep;
  rep.bars[0] = {0, 0, 4};
  rep.bars[1] = {1, 0, 4};
  rep.bars[2] = {2, 0, 4};
  rep.bars[3] = {3, 0, 4};
  rep.sights.push_back({0, 3, 2});
  Graph g = GraphOfSights(rep);
  ValidationReport r = CheckBarVisibility(rep, g, 1);
  EXPECT_FALSE(r.verdict);
  EXPECT_TRUE(HasNote(r, "too many traversals"));
  EXPECT_TRUE(CheckBarVisibility(rep, g, 2).verdict);

  Graph more = g;
  more.AddEdge(0, 1);
  EXPECT_TRUE(HasNote(CheckBarVisibility(rep, more, 2), "unrealized edge"));
  EXPECT_TRUE(HasNote(CheckBarVisibility(rep, g, 2, std::nullopt, true),
                      "visibility not in graph"));
  EXPECT_TRUE(HasNote(CheckBarVisibility(rep, Graph::FromEdges({0, 1, 2, 3}, {}), 2), "sight not in graph"));
}

class BarPath : public ::testing::TestWithParam<bool> {};

TEST_P(BarPath, AddsAValidPath) {
  const bool strong = GetParam();
  Rng rng(strong ? 31 : 30);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.Uniform(2, 12);
    BarRepresentation rep = RandomBarRepresentation(n, rng);
    Graph g = GraphOfSights(rep);
    VertexId u = rng.Uniform(0, n - 1), v = rng.Uniform(0, n - 2);
    if (v >= u) ++v;
    int t = std::max(n - 2, 1) + rng.Uniform(0, 2);
    BarPathResult res = AddPathBar1(rep, g, u, v, t, strong);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_NO_THROW(CheckWellFormed(res.rep));
    EXPECT_EQ(res.graph, ApplyPathAddition(g, res.spec));
    EXPECT_EQ(static_cast<int>(res.spec.internal.size()), t);
    EXPECT_TRUE(CheckBarVisibility(res.rep, res.graph, 1, std::nullopt, strong).verdict);
    for (const auto& [x, bar] : rep.bars) {
      EXPECT_EQ(res.rep.bars.at(x).y, bar.y);
    }
    if (!strong) EXPECT_TRUE(res.spec.supplementary.empty());
  }
}

INSTANTIATE_TEST_SUITE_P(WeakAndStrong, BarPath, ::testing::Bool(),
                         [](const ::testing::TestParamInfo<bool>& info) {
                           return std::string(info.param ? "strong" : "weak");
                         });

TEST(BarPath, Preconditions) {
  Rng rng(32);
  BarRepresentation rep = RandomBarRepresentation(6, rng);
  Graph g = GraphOfSights(rep);
  auto code = [&](const Graph& h, VertexId u, VertexId v, int t) {
    try {
      AddPathBar1(rep, h, u, v, t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kResource;
  };
  EXPECT_EQ(code(g, 0, 1, 3), ErrorCode::kPrecondition);
  EXPECT_EQ(code(g, 0, 0, 4), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code(g, 0, 9, 4), ErrorCode::kUnknownVertex);
  Graph extra = g;
  extra.AddVertex(6);
  EXPECT_EQ(code(extra, 0, 1, 5), ErrorCode::kMalformedRepresentation);
  Graph missing = Graph::FromEdges(g.Vertices(), {});
  if (g.NumEdges() > 0) EXPECT_EQ(code(missing, 0, 1, 4), ErrorCode::kPrecondition);
}

Graph AlignedGraph(const AlignedBarRepresentation& rep) {
  Graph g;
  for (const auto& [v, bar] : rep.bars) g.AddVertex(v);
  for (const AlignedSight& s : rep.sights) {
    if (!g.HasEdge(Edge(s.a, s.b))) g.AddEdge(s.a, s.b);
  }
  return g;
}

TEST(AlignedVisibility, RandomInstancesAndPaths) {
  Rng rng(40);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.Uniform(2, 12);
    AlignedBarRepresentation rep = RandomAlignedRepresentation(n, rng);
    Graph g = AlignedGraph(rep);
    ASSERT_TRUE(CheckAlignedVisibility(rep, g).verdict);
    for (const AlignedSight& s : rep.sights) EXPECT_LE(TraversedBars(rep, s).size(), 1u);
    VertexId u = rng.Uniform(0, n - 1), v = rng.Uniform(0, n - 2);
    if (v >= u) ++v;
    int t = std::max(n - 2, 1) + rng.Uniform(0, 2);
    AlignedPathResult res = AddPathAligned(rep, g, u, v, t);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_EQ(res.graph, ApplyPathAddition(g, res.spec));
    EXPECT_EQ(static_cast<int>(res.spec.internal.size()), t);
    EXPECT_TRUE(CheckAlignedVisibility(res.rep, res.graph).verdict);
    EXPECT_EQ(AlignedGraph(res.rep), res.graph);
  }
}

TEST(AlignedVisibility, SightThroughTwoBarsFails) {
  AlignedBarRepresentation rep;
  for (VertexId v = 0; v < 4; ++v) rep.bars[v] = {Rational(v), Rational(4)};
  rep.sights.push_back({0, 3, Rational(1)});
  Graph g = AlignedGraph(rep);
  EXPECT_EQ(TraversedBars(rep, rep.sights[0]).size(), 2u);
  EXPECT_FALSE(CheckAlignedVisibility(rep, g).verdict);
}

std::map<VertexId, std::pair<Rational, Rational>> Plain(const IntervalRepresentation& rep) {
  std::map<VertexId, std::pair<Rational, Rational>> out;
  for (const auto& [v, iv] : rep.intervals) out[v] = {iv.lo, iv.hi};
  return out;
}

TEST(IntervalRepresentation, IntersectionGraphMatchesOracle) {
  Rng rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    IntervalRepresentation rep = RandomIntervalRepresentation(rng.Uniform(1, 14), rng);
    Graph g = IntersectionGraph(rep);
    std::vector<Edge> list = g.Edges();
    std::set<Edge> edges(list.begin(), list.end());
    EXPECT_EQ(edges, oracle::BruteIntersections(Plain(rep)));
    EXPECT_TRUE(CheckInterval(rep, g).verdict);
  }
}

TEST(IntervalRepresentation, TouchingEndpointsIntersect) {
  IntervalRepresentation rep;
  rep.intervals[0] = {0, 1};
  rep.intervals[1] = {1, 2};
  rep.intervals[2] = {Rational(5, 2), 3};
  Graph g = IntersectionGraph(rep);
  EXPECT_TRUE(g.HasEdge(Edge(0, 1)));
  EXPECT_FALSE(g.HasEdge(Edge(1, 2)));
  Graph wrong = g;
  wrong.AddEdge(1, 2);
  EXPECT_FALSE(CheckInterval(rep, wrong).verdict);
}

TEST(IntervalRepresentation, PathAdditionStaysStrong) {
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.Uniform(2, 14);
    IntervalRepresentation rep = RandomIntervalRepresentation(n, rng);
    Graph g = IntersectionGraph(rep);
    VertexId u = rng.Uniform(0, n - 1), v = rng.Uniform(0, n - 2);
    if (v >= u) ++v;
    int t = std::max(n - 2, 1) + rng.Uniform(0, 2);
    IntervalPathResult res = AddPathInterval(rep, g, u, v, t);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_EQ(res.graph, ApplyPathAddition(g, res.spec));
    EXPECT_EQ(static_cast<int>(res.spec.internal.size()), t);
    EXPECT_TRUE(CheckInterval(res.rep, res.graph).verdict);
    EXPECT_EQ(IntersectionGraph(res.rep), res.graph);
    for (const auto& [x, iv] : rep.intervals) {
      EXPECT_EQ(res.rep.intervals.at(x).lo, iv.lo);
      EXPECT_EQ(res.rep.intervals.at(x).hi, iv.hi);
    }
  }
}

}  // namespace
