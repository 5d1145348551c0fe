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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.h"
#include "pathadd/counterexamples.h"
#include "pathadd/embedding.h"
#include "pathadd/error.h"
#include "pathadd/graph.h"
#include "pathadd/path_addition.h"
#include "pathadd/random_instances.h"
#include "pathadd/table1.h"
#include "pathadd/validators.h"
#include "pathadd/visibility.h"

namespace {

using namespace pathadd;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Keeps the first reason only.
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> run;
};

std::pair<VertexId, VertexId> RandomPair(int n, Rng& rng) {
  VertexId u = rng.Uniform(0, n - 1), v = rng.Uniform(0, n - 2);
  if (v >= u) ++v;
  return {u, v};
}

ValidationReport CheckMode(RoutingMode mode, const GeometricEmbedding& emb) {
  switch (mode) {
    case RoutingMode::kRac: return CheckRac(emb);
    case RoutingMode::kFanFree: return CheckFanCrossingFree(emb);
    case RoutingMode::kQuasi: return CheckQuasiPlanar(emb, 3);
  }
  return {};
}

// 30 triangulations, 5 pairs each, t = n - 2.
Outcome RoutingHarness(RoutingMode mode, int crossings, std::uint64_t seed) {
  Outcome out;
  Rng rng(seed);
  int ok = 0, total = 0;
  for (int inst = 0; inst < 30; ++inst) {
    int n = rng.Uniform(6, 20);
    GeometricEmbedding emb = RandomStackedTriangulation(n, rng);
    if (crossings > 0) emb = AddRandomCrossings(emb, rng.Uniform(1, crossings), rng);
    for (int pair = 0; pair < 5; ++pair) {
      auto [u, v] = RandomPair(n, rng);
      ++total;
      try {
        RoutingResult res = RoutePathEmbedded(emb, u, v, mode, n - 2);
        if (CheckMode(mode, res.embedding).verdict &&
            res.embedding.graph == ApplyPathAddition(emb.graph, res.spec)) {
          ++ok;
        } else {
          out.Fail("instance " + std::to_string(inst) + " pair " + std::to_string(pair) +
                   " failed validation");
        }
      } catch (const Error& e) {
        out.Fail("instance " + std::to_string(inst) + ": " + e.what());
      }
    }
  }
  out.detail = std::string(RoutingModeName(mode)) + " " + std::to_string(ok) + "/" +
               std::to_string(total) + (out.detail.empty() ? "" : " (" + out.detail + ")");
  return out;
}

Outcome Criterion1() { return RoutingHarness(RoutingMode::kRac, 0, 1); }

Outcome Criterion2() {
  Outcome quasi = RoutingHarness(RoutingMode::kQuasi, 3, 2);
  Outcome fan = RoutingHarness(RoutingMode::kFanFree, 3, 3);
  Outcome out;
  out.pass = quasi.pass && fan.pass;
  // Seeded corridor: the merge would make three edges cross pairwise.
  Rng rng(0);
  int n = rng.Uniform(6, 14);
  GeometricEmbedding emb = AddRandomCrossings(RandomStackedTriangulation(n, rng), 3, rng);
  RoutingResult res = RoutePathEmbedded(emb, 2, 6, RoutingMode::kQuasi, n - 2);
  bool fired = res.subdivisions > 0 && CheckQuasiPlanar(res.embedding, 3).verdict;
  if (!fired) out.pass = false;
  out.detail = quasi.detail + ", " + fan.detail + ", corridor subdivisions " +
               std::to_string(res.subdivisions);
  return out;
}

Outcome Criterion3() {
  Outcome out;
  Rng rng(3);
  int ok = 0;
  for (int inst = 0; inst < 30; ++inst) {
    int n = rng.Uniform(2, 12);
    BarRepresentation rep = RandomBarRepresentation(n, rng);
    Graph g = GraphOfSights(rep);
    auto [u, v] = RandomPair(n, rng);
    try {
      BarPathResult res = AddPathBar1(rep, g, u, v, std::max(n - 2, 1));
      bool good = CheckBarVisibility(res.rep, res.graph, 1).verdict &&
                  res.graph == ApplyPathAddition(g, res.spec);
      std::set<std::pair<VertexId, VertexId>> old;
      for (const Sight& s : rep.sights) old.insert({s.a, s.b});
      for (const Sight& s : res.rep.sights) {
        if (!old.count({s.a, s.b}) && TraversedBars(res.rep, s).size() > 1) good = false;
      }
      if (good) {
        ++ok;
      } else {
        out.Fail("instance " + std::to_string(inst) + " failed validation");
      }
    } catch (const Error& e) {
      out.Fail("instance " + std::to_string(inst) + ": " + e.what());
    }
  }
  out.detail = std::to_string(ok) + "/30" + (out.pass ? "" : " (" + out.detail + ")");
  return out;
}

Outcome Criterion4() {
  Outcome out;
  Rng rng(4);
  int ok = 0;
  for (int inst = 0; inst < 30; ++inst) {
    int n = rng.Uniform(2, 14);
    IntervalRepresentation rep = RandomIntervalRepresentation(n, rng);
    Graph g = IntersectionGraph(rep);
    auto [u, v] = RandomPair(n, rng);
    try {
      IntervalPathResult res = AddPathInterval(rep, g, u, v, std::max(n - 2, 1));
      if (CheckInterval(res.rep, res.graph).verdict &&
          IntersectionGraph(res.rep) == res.graph &&
          res.graph == ApplyPathAddition(g, res.spec)) {
        ++ok;
      } else {
        out.Fail("instance " + std::to_string(inst) + " failed validation");
      }
    } catch (const Error& e) {
      out.Fail("instance " + std::to_string(inst) + ": " + e.what());
    }
  }
  out.detail = std::to_string(ok) + "/30" + (out.pass ? "" : " (" + out.detail + ")");
  return out;
}

Outcome Criterion5() {
  Outcome out;
  for (int k = 4; k <= 5; ++k) {
    CliqueMinorResult res = BuildCliqueMinor(CompleteGraph(3), k);
    Graph g = CompleteGraph(3);
    for (const PathAdditionSpec& spec : res.transcript) {
      if (spec.Length() < static_cast<int>(g.NumVertices()) - 1) {
        out.Fail("K_" + std::to_string(k) + ": short path");
      }
      g = ApplyPathAddition(g, spec);
    }
    if (!(g == res.graph)) out.Fail("K_" + std::to_string(k) + ": replay differs");
    if (!ContainsMinor(res.graph, CompleteGraph(k))) {
      out.Fail("K_" + std::to_string(k) + " minor not found");
    }
    if (out.pass) {
      if (!out.detail.empty()) out.detail += ", ";
      out.detail += "K_" + std::to_string(k) + " after " +
                    std::to_string(res.transcript.size()) + " additions (" +
                    std::to_string(res.graph.NumVertices()) + " vertices)";
    }
  }
  return out;
}

Outcome Criterion6() {
  Outcome out;
  std::string summary;
  for (int k = 2; k <= 5; ++k) {
    std::string tag = "k=" + std::to_string(k);
    ExtendedWheel xw = MakeExtendedWheel(k);
    if (xw.graph.NumEdges() != static_cast<std::size_t>(8 * k)) {
      out.Fail(tag + ": |E| = " + std::to_string(xw.graph.NumEdges()) + ", expected " +
               std::to_string(8 * k));
    }
    if (!CheckKPlanar(xw.embedding, 1).verdict) out.Fail(tag + ": drawing not 1-planar");
    BudgetReport r = TraversalBudgetDemo(xw.embedding, xw.p, xw.q, 1);
    std::set<VertexId> found(r.cycle.cycle.begin(), r.cycle.cycle.end());
    if (found != std::set<VertexId>(xw.cycle.begin(), xw.cycle.end())) {
      out.Fail(tag + ": separating cycle is not the rim");
    }
    if (r.budget != 2 * k || r.demand != 2 * k + 1) out.Fail(tag + ": wrong budget");
    if (!summary.empty()) summary += ", ";
    summary += tag + " |E|=" + std::to_string(xw.graph.NumEdges()) + " budget " +
               std::to_string(r.budget) + " demand " + std::to_string(r.demand);
  }
  out.detail = out.pass ? summary : out.detail + " [" + summary + "]";
  return out;
}

Outcome Criterion7() {
  Outcome out;
  GeometricEmbedding emb = K2qAllOutside(13);
  ValidationReport report = CheckKPlanar(emb, 1);
  if (report.verdict) out.Fail("drawing passes 1-planarity");
  auto partners = CrossingPartners(emb);
  // The quadrangle u1 v1 u2 v2 on ids 0..3.
  std::size_t worst = 0;
  Edge witness;
  for (const auto& [e, crossed] : partners) {
    if (e.a <= 3 && e.b <= 3 && crossed.size() > worst) {
      worst = crossed.size();
      witness = e;
    }
  }
  if (worst < 2) out.Fail("no quadrangle edge crossed twice");
  if (out.pass) {
    out.detail = "edge (" + std::to_string(witness.a) + "," + std::to_string(witness.b) +
                 ") crossed " + std::to_string(worst) + " times";
  }
  return out;
}

// Path-addition with t = |G| - 2 + {0,1,2} and random edges from the path
// interior.
PathAdditionSpec RandomSpec(const Graph& g, Rng& rng) {
  std::vector<VertexId> vs = g.Vertices();
  int n = static_cast<int>(vs.size());
  auto [a, b] = RandomPair(n, rng);
  int t = n - 2 + rng.Uniform(0, 2);
  PathAdditionSpec spec = PathAdditionSpec::ForPath(vs[a], vs[b], FreshIds(g, t));
  std::set<Edge> path(spec.path_edges.begin(), spec.path_edges.end());
  int extra = rng.Uniform(0, 3);
  for (int i = 0; i < extra && t > 0; ++i) {
    VertexId x = spec.internal[rng.Uniform(0, t - 1)];
    VertexId y = rng.Coin() ? vs[rng.Uniform(0, n - 1)] : spec.internal[rng.Uniform(0, t - 1)];
    if (x != y && !path.count(Edge(x, y))) spec.supplementary.insert(Edge(x, y));
  }
  return spec;
}

Outcome Criterion8() {
  Outcome out;
  Rng rng(8);
  long graphs = 0, additions = 0;
  std::string counts;
  for (int n = 1; n <= 8; ++n) {
    int nonplanar = 0;
    for (const oracle::SmallGraph& sg : oracle::AllGraphs(n)) {
      Graph g = oracle::ToGraph(sg);
      if (IsPlanar(g)) continue;
      ++nonplanar;
      for (int i = 0; i < 3; ++i) {
        g = ApplyPathAddition(g, RandomSpec(g, rng));
        ++additions;
        if (IsPlanar(g)) out.Fail("planar after a path-addition on n=" + std::to_string(n));
      }
    }
    graphs += nonplanar;
    if (nonplanar > 0) counts += " n=" + std::to_string(n) + ":" + std::to_string(nonplanar);
  }
  if (out.pass) {
    out.detail = std::to_string(graphs) + " non-planar graphs (" + counts.substr(1) + "), " +
                 std::to_string(additions) + " additions, 0 exceptions";
  }
  return out;
}

// Random rational drawing in general position.
GeometricEmbedding RandomDrawing(Rng& rng) {
  while (true) {
    GeometricEmbedding emb;
    int n = rng.Uniform(4, 10);
    for (VertexId v = 0; v < n; ++v) {
      emb.graph.AddVertex(v);
      emb.coords[v] = Point{Rational(rng.Uniform(0, 900)) / rng.Uniform(1, 9),
                            Rational(rng.Uniform(0, 900)) / rng.Uniform(1, 9)};
    }
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (rng.Uniform(0, 99) < 40) emb.graph.AddEdge(a, b);
    bool degenerate = false;
    oracle::BruteCrossings(emb, &degenerate);
    if (!degenerate) return emb;
  }
}

Outcome Criterion9() {
  Outcome out;
  std::vector<oracle::SmallGraph> patterns;
  for (int n = 1; n <= 5; ++n) {
    for (const oracle::SmallGraph& h : oracle::AllGraphs(n)) {
      if (h.Edges() > 0) patterns.push_back(h);
    }
  }
  oracle::MinorOracle minors;
  long pairs = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const oracle::SmallGraph& g : oracle::AllGraphs(n)) {
      Graph host = oracle::ToGraph(g);
      for (const oracle::SmallGraph& h : patterns) {
        if (h.n > g.n) continue;
        ++pairs;
        if (ContainsMinor(host, oracle::ToGraph(h)) != minors.IsMinor(h, g)) {
          out.Fail("minor disagreement on a " + std::to_string(n) + "-vertex host");
        }
      }
    }
  }
  Rng rng(9);
  int drawings = 0;
  for (; drawings < 200; ++drawings) {
    GeometricEmbedding emb = RandomDrawing(rng);
    bool degenerate = false;
    std::set<oracle::OracleCrossing> expected = oracle::BruteCrossings(emb, &degenerate);
    std::set<oracle::OracleCrossing> got;
    for (const Crossing& c : ComputeCrossings(emb)) got.insert({c.edge_a, c.edge_b, c.point});
    if (got != expected) out.Fail("crossing disagreement on drawing " + std::to_string(drawings));
  }
  if (out.pass) {
    out.detail = std::to_string(pairs) + " minor pairs, " + std::to_string(drawings) +
                 " drawings agree";
  }
  return out;
}

Outcome Criterion10() {
  Outcome out;
  int scale = ParseScale("small");
  std::string first = Table1ToJson(RunTable1Report(42, scale)).dump(2);
  Table1Report again = RunTable1Report(42, scale);
  std::string second = Table1ToJson(again).dump(2);
  if (first != second) out.Fail("reports differ");
  if (again.rows.size() != 13) out.Fail(std::to_string(again.rows.size()) + " rows");
  const std::set<std::string> kinds = {"constructive demo", "budget argument",
                                       "out-of-scope note"};
  for (const ClosureRow& row : again.rows) {
    if (!kinds.count(row.evidence_kind)) out.Fail(row.name + ": evidence kind " + row.evidence_kind);
  }
  if (out.pass) {
    out.detail = "13 rows, " + std::to_string(first.size()) + " identical bytes";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "RAC closure demo", 10, Criterion1},
      {2, "quasi-planar and fan-crossing free closure demos", 0, Criterion2},
      {3, "bar 1-visibility closure", 5, Criterion3},
      {4, "interval closure", 0, Criterion4},
      {5, "clique minor ladder", 30, Criterion5},
      {6, "extended wheel budget", 5, Criterion6},
      {7, "K_{2,13} all-outside drawing", 1, Criterion7},
      {8, "non-planarity preserved", 0, Criterion8},
      {9, "oracle equivalence", 0, Criterion9},
      {10, "table1 determinism", 0, Criterion10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.Fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      out.Fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds));
    }
    if (!out.pass) ++failures;
    std::printf("%s criterion %d: %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.number,
                c.title, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
