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

#include "pathadd/table1.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "pathadd/counterexamples.h"
#include "pathadd/error.h"
#include "pathadd/geometry.h"
#include "pathadd/random_instances.h"

namespace pathadd {

int ParseScale(const std::string& text) {
  if (text == "small") return 1;
  if (text == "medium") return 2;
  if (text == "large") return 4;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0 || value < 1 || value > 8) {
    throw Error(ErrorCode::kInvalidArgument,
                "scale must be small, medium, large or an integer in 1..8");
  }
  return value;
}

GeometricEmbedding SubdivideDrawnEdge(const GeometricEmbedding& emb, const Edge& e,
                                      VertexId* fresh) {
  if (!emb.graph.HasEdge(e)) throw Error(ErrorCode::kMissingEdge, "edge not in drawing");
  if (emb.bends.count(e)) throw Error(ErrorCode::kInvalidArgument, "edge is not straight");
  const Point& a = emb.coords.at(e.a);
  const Point& b = emb.coords.at(e.b);
  Rational first = 1;
  for (const Crossing& c : ComputeCrossings(emb)) {
    if (c.edge_a == e || c.edge_b == e) first = std::min(first, SegmentParameter(c.point, a, b));
  }
  GeometricEmbedding out = emb;
  VertexId w = out.graph.AddFreshVertex();
  out.graph.RemoveEdge(e);
  out.graph.AddEdge(e.a, w);
  out.graph.AddEdge(w, e.b);
  out.coords[w] = a + Rational(first / 2) * (b - a);
  if (fresh) *fresh = w;
  return out;
}

namespace {

using Validator = std::function<ValidationReport(const GeometricEmbedding&)>;

// Per-row generator so rows do not depend on each other's draws.
Rng RowRng(std::uint64_t seed, int row) {
  return Rng(seed * 1000003ULL + static_cast<std::uint64_t>(row));
}

class ArtifactSink {
 public:
  ArtifactSink(std::string dir, ClosureRow* row) : dir_(std::move(dir)), row_(row) {}
  void Write(const std::string& name, const Json& j) {
    if (dir_.empty()) return;
    WriteJsonFile(dir_ + "/" + name, j);
    row_->artifacts.push_back(name);
  }

 private:
  std::string dir_;
  ClosureRow* row_;
};

std::string Slug(const std::string& name) {
  std::string out;
  for (char ch : name) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

ClosureRow MakeRow(const std::string& name, const char* pa, const char* sub,
                   const char* con) {
  ClosureRow row;
  row.name = name;
  row.expected_path_addition = pa;
  row.expected_subdivision = sub;
  row.expected_contraction = con;
  row.subdivision_check = "not checked";
  return row;
}

// Subdivides one edge of each sampled drawing and re-runs the validator.
std::string SampleSubdivision(const std::vector<GeometricEmbedding>& drawings,
                              const Validator& check) {
  int kept = 0, total = 0;
  for (const GeometricEmbedding& emb : drawings) {
    if (!check(emb).verdict) continue;
    // Prefer a crossed edge, the interesting case.
    std::vector<Edge> straight;
    for (const Edge& e : emb.graph.Edges()) {
      if (!emb.bends.count(e)) straight.push_back(e);
    }
    if (straight.empty()) continue;
    Edge pick = straight.front();
    auto partners = CrossingPartners(emb);
    for (const Edge& e : straight) {
      if (partners.count(e)) {
        pick = e;
        break;
      }
    }
    ++total;
    if (check(SubdivideDrawnEdge(emb, pick)).verdict) ++kept;
  }
  std::string tally = std::to_string(kept) + "/" + std::to_string(total) + " sampled";
  return kept == total ? "+ (" + tally + ")" : "failed (" + tally + ")";
}

}  // namespace

namespace {

std::pair<VertexId, VertexId> DistinctPair(const std::vector<VertexId>& ids, Rng& rng) {
  int n = static_cast<int>(ids.size());
  int a = rng.Uniform(0, n - 1);
  int b = rng.Uniform(0, n - 2);
  if (b >= a) ++b;
  return {ids[a], ids[b]};
}

void Tally(ClosureRow& row, int trials, int successes, Json failures) {
  row.evidence["trials"] = trials;
  row.evidence["successes"] = successes;
  row.evidence["failures"] = std::move(failures);
  row.verdict = successes == trials ? "+" : "failed";
}

void RoutingRow(ClosureRow& row, RoutingMode mode, const Validator& check,
                bool crossings, int trials, Rng rng, ArtifactSink sink) {
  row.evidence_kind = "constructive demo";
  row.evidence["demo"] = std::string("route_path_embedded mode=") + std::string(RoutingModeName(mode));
  int successes = 0, subdivisions = 0;
  Json failures = Json::array();
  std::vector<GeometricEmbedding> outputs;
  for (int i = 0; i < trials; ++i) {
    int n = rng.Uniform(6, 14);
    GeometricEmbedding in = RandomStackedTriangulation(n, rng);
    if (crossings) in = AddRandomCrossings(in, rng.Uniform(1, 3), rng);
    auto [u, v] = DistinctPair(in.graph.Vertices(), rng);
    try {
      RoutingResult res = RoutePathEmbedded(in, u, v, mode, n - 2);
      bool ok = check(res.embedding).verdict &&
                res.embedding.graph == ApplyPathAddition(in.graph, res.spec);
      if (ok) {
        ++successes;
        subdivisions += res.subdivisions;
        outputs.push_back(res.embedding);
      } else {
        failures.push_back("trial " + std::to_string(i) + ": output rejected");
      }
      if (i == 0) {
        sink.Write(Slug(row.name) + "_input.json", EmbeddingToJson(in));
        sink.Write(Slug(row.name) + "_output.json", EmbeddingToJson(res.embedding));
        sink.Write(Slug(row.name) + "_spec.json", SpecToJson(res.spec));
      }
    } catch (const Error& e) {
      failures.push_back("trial " + std::to_string(i) + ": " + e.what());
    }
  }
  Tally(row, trials, successes, std::move(failures));
  if (mode == RoutingMode::kQuasi) row.evidence["subdivision_vertices"] = subdivisions;
  row.subdivision_check = SampleSubdivision(outputs, check);
}

void BarRow(ClosureRow& row, int trials, Rng rng, ArtifactSink sink) {
  row.evidence_kind = "constructive demo";
  row.evidence["demo"] = "add_path_bar1";
  int successes = 0;
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    int n = rng.Uniform(4, 12);
    BarRepresentation rep = RandomBarRepresentation(n, rng);
    Graph g = GraphOfSights(rep);
    for (const auto& [id, bar] : rep.bars) g.AddVertex(id);
    auto [u, v] = DistinctPair(g.Vertices(), rng);
    try {
      BarPathResult res = AddPathBar1(rep, g, u, v, n - 2);
      if (CheckBarVisibility(res.rep, res.graph, 1).verdict) {
        ++successes;
      } else {
        failures.push_back("trial " + std::to_string(i) + ": output rejected");
      }
      if (i == 0) {
        sink.Write("bar_1_visibility_input.json", BarToJson(rep));
        sink.Write("bar_1_visibility_output.json", BarToJson(res.rep));
        sink.Write("bar_1_visibility_spec.json", SpecToJson(res.spec));
      }
    } catch (const Error& e) {
      failures.push_back("trial " + std::to_string(i) + ": " + e.what());
    }
  }
  Tally(row, trials, successes, std::move(failures));
}

void AlignedRow(ClosureRow& row, int trials, Rng rng, ArtifactSink sink) {
  row.evidence_kind = "constructive demo";
  row.evidence["demo"] = "add_path_aligned";
  int successes = 0;
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    int n = rng.Uniform(4, 12);
    AlignedBarRepresentation rep = RandomAlignedRepresentation(n, rng);
    Graph g;
    for (const auto& [id, bar] : rep.bars) g.AddVertex(id);
    for (const AlignedSight& s : rep.sights) g.AddEdge(s.a, s.b);
    auto [u, v] = DistinctPair(g.Vertices(), rng);
    try {
      AlignedPathResult res = AddPathAligned(rep, g, u, v, n - 2);
      if (CheckAlignedVisibility(res.rep, res.graph).verdict) {
        ++successes;
      } else {
        failures.push_back("trial " + std::to_string(i) + ": output rejected");
      }
      if (i == 0) {
        sink.Write("ab1v_input.json", AlignedToJson(rep));
        sink.Write("ab1v_output.json", AlignedToJson(res.rep));
        sink.Write("ab1v_spec.json", SpecToJson(res.spec));
      }
    } catch (const Error& e) {
      failures.push_back("trial " + std::to_string(i) + ": " + e.what());
    }
  }
  Tally(row, trials, successes, std::move(failures));
}

}  // namespace

namespace {

// Replays a clique-minor ladder from K_3 and checks every path is long
// enough for the graph it was added to.
Json LadderEvidence(int k, bool* lengths_ok, Graph* final_graph) {
  CliqueMinorResult res = BuildCliqueMinor(CompleteGraph(3), k);
  Graph g = CompleteGraph(3);
  Json steps = Json::array();
  *lengths_ok = true;
  for (const PathAdditionSpec& spec : res.transcript) {
    int need = static_cast<int>(g.NumVertices()) - 1;
    if (spec.Length() < need) *lengths_ok = false;
    steps.push_back(Json::array({spec.u, spec.v, spec.Length(), need}));
    g = ApplyPathAddition(g, spec);
  }
  Json out;
  out["demo"] = "build_clique_minor from K_3";
  out["k"] = k;
  out["steps"] = steps;
  out["branch_vertices"] = res.branch_vertices;
  out["vertices"] = res.graph.NumVertices();
  out["edges"] = res.graph.NumEdges();
  out["replay_matches"] = (g == res.graph);
  *final_graph = res.graph;
  return out;
}

void PlanarLadderRow(ClosureRow& row, ArtifactSink sink) {
  row.evidence_kind = "constructive demo";
  bool lengths_ok = false;
  Graph g;
  row.evidence = LadderEvidence(5, &lengths_ok, &g);
  bool planar = IsPlanar(g);
  row.evidence["is_planar"] = planar;
  row.verdict = (!planar && lengths_ok) ? "-" : "failed";
  sink.Write(Slug(row.name) + "_ladder.json", GraphToJson(g));
}

void OuterplanarLadderRow(ClosureRow& row, ArtifactSink sink) {
  row.evidence_kind = "constructive demo";
  bool lengths_ok = false;
  Graph g;
  row.evidence = LadderEvidence(4, &lengths_ok, &g);
  bool k4 = ContainsMinor(g, CompleteGraph(4));
  row.evidence["contains_k4_minor"] = k4;
  row.verdict = (k4 && lengths_ok) ? "-" : "failed";
  sink.Write(Slug(row.name) + "_ladder.json", GraphToJson(g));
}

void XwBudgetRow(ClosureRow& row, ArtifactSink sink) {
  row.evidence_kind = "budget argument";
  ExtendedWheel xw = MakeExtendedWheel(3);
  bool one_planar = CheckKPlanar(xw.embedding, 1).verdict;
  row.evidence["family"] = "extended wheel, k=3";
  row.evidence["drawing_1_planar"] = one_planar;
  try {
    BudgetReport b = TraversalBudgetDemo(xw.embedding, xw.p, xw.q, 1);
    row.evidence["budget"] = BudgetToJson(b);
    row.verdict = (one_planar && b.demand == b.budget + 1) ? "-" : "failed";
  } catch (const Error& e) {
    row.evidence["error"] = e.what();
    row.verdict = "failed";
  }
  sink.Write("xw_3_drawing.json", EmbeddingToJson(xw.embedding));
}

void BarBudgetRow(ClosureRow& row, ArtifactSink sink) {
  row.evidence_kind = "budget argument";
  BarRingWitness w = MakeBarRingWitness();
  bool valid = CheckBarVisibility(w.rep, w.graph, 1, 2).verdict;
  row.evidence["family"] = "bar ring witness, j=2";
  row.evidence["representation_valid"] = valid;
  try {
    BudgetReport b = TraversalBudgetDemo(w.rep, w.u, w.v, 2);
    row.evidence["budget"] = BudgetToJson(b);
    row.verdict = (valid && b.demand == b.budget + 1) ? "-" : "failed";
  } catch (const Error& e) {
    row.evidence["error"] = e.what();
    row.verdict = "failed";
  }
  sink.Write("bar_ring_witness.json", BarToJson(w.rep));
}

// Adds a path with max(|G|-2, 1) fresh internal vertices between u and v.
Graph AddLongPath(const Graph& g, VertexId u, VertexId v) {
  int t = std::max(static_cast<int>(g.NumVertices()) - 2, 1);
  return ApplyPathAddition(g, PathAdditionSpec::ForPath(u, v, FreshIds(g, t)));
}

void ProseRow(ClosureRow& row, const std::string& note, const Graph& generated,
              const std::string& generator) {
  row.evidence_kind = "out-of-scope note";
  row.verdict = "not checked";
  row.evidence["note"] = note;
  row.evidence["generator"] = generator;
  row.evidence["vertices"] = generated.NumVertices();
  row.evidence["edges"] = generated.NumEdges();
}

}  // namespace

Table1Report RunTable1Report(std::uint64_t seed, int scale, const std::string& artifact_dir) {
  if (scale < 1 || scale > 8) throw Error(ErrorCode::kInvalidArgument, "scale outside 1..8");
  const int trials = 5 * scale;
  Table1Report report;
  report.seed = seed;
  report.scale = scale;
  auto& rows = report.rows;
  auto sink = [&](ClosureRow& row) { return ArtifactSink(artifact_dir, &row); };

  rows.push_back(MakeRow("planar", "-", "+", "+"));
  PlanarLadderRow(rows.back(), sink(rows.back()));
  {
    Rng rng = RowRng(seed, 0);
    std::vector<GeometricEmbedding> drawings;
    for (int i = 0; i < trials; ++i) drawings.push_back(RandomStackedTriangulation(rng.Uniform(4, 12), rng));
    rows.back().subdivision_check = SampleSubdivision(
        drawings, [](const GeometricEmbedding& e) { return CheckKPlanar(e, 0); });
  }

  rows.push_back(MakeRow("k-planar", "-", "+", "-"));
  XwBudgetRow(rows.back(), sink(rows.back()));
  {
    Rng rng = RowRng(seed, 1);
    std::vector<GeometricEmbedding> drawings;
    for (int i = 0; i < trials; ++i) {
      drawings.push_back(AddRandomCrossings(RandomStackedTriangulation(rng.Uniform(6, 12), rng),
                                            rng.Uniform(1, 3), rng));
    }
    rows.back().subdivision_check = SampleSubdivision(
        drawings, [](const GeometricEmbedding& e) { return CheckKPlanar(e, 1); });
  }

  rows.push_back(MakeRow("right angle crossing (RAC)", "+", "+", "-"));
  RoutingRow(rows.back(), RoutingMode::kRac, CheckRac, false, trials, RowRng(seed, 2),
             sink(rows.back()));

  rows.push_back(MakeRow("fan-planar", "-", "+", "-"));
  {
    BinucciGraph b = MakeBinucciGraph(BinucciConfig::Default());
    ProseRow(rows.back(),
             "non-fan-planarity of the K_7 blob construction with paths replacing the "
             "removed edges is argued in prose only",
             b.graph, "binucci default configuration");
    Json targets = Json::array();
    for (const Edge& e : b.removed_targets) targets.push_back(Json::array({e.a, e.b}));
    rows.back().evidence["path_targets"] = targets;
    rows.back().evidence["blobs"] = b.blobs.size();
  }

  rows.push_back(MakeRow("fan-crossing free", "+", "+", "-"));
  RoutingRow(rows.back(), RoutingMode::kFanFree, CheckFanCrossingFree, true, trials,
             RowRng(seed, 4), sink(rows.back()));

  rows.push_back(MakeRow("quasi-planar", "+", "+", "-"));
  RoutingRow(rows.back(), RoutingMode::kQuasi,
             [](const GeometricEmbedding& e) { return CheckQuasiPlanar(e, 3); }, true, trials,
             RowRng(seed, 5), sink(rows.back()));

  rows.push_back(MakeRow("bar 1-visibility", "+", "+", "-"));
  BarRow(rows.back(), trials, RowRng(seed, 6), sink(rows.back()));

  rows.push_back(MakeRow("bar (1,j)-visibility", "-", "+", "-"));
  BarBudgetRow(rows.back(), sink(rows.back()));

  rows.push_back(MakeRow("outerplanar", "-", "-", "-"));
  OuterplanarLadderRow(rows.back(), sink(rows.back()));

  // Outer 1-planar graphs are planar, so the planar ladder applies.
  rows.push_back(MakeRow("outer 1-planar", "-", "-", "-"));
  PlanarLadderRow(rows.back(), sink(rows.back()));
  rows.back().evidence["via"] = "subclass of planar";

  rows.push_back(MakeRow("outer fan-planar", "-", "-", "-"));
  {
    Graph g = CompleteGraph(5);
    for (VertexId x = 1; x < 5; ++x) g = AddLongPath(g, 0, x);
    ProseRow(rows.back(),
             "no circle drawing of K_5 plus paths from one vertex is argued in prose only",
             g, "K_5 plus a path from vertex 0 to every other vertex");
  }

  rows.push_back(MakeRow("outer fan-crossing free", "-", "-", "-"));
  {
    Graph g = CompleteGraph(4);
    for (VertexId a = 0; a < 4; ++a) {
      for (VertexId b = a + 1; b < 4; ++b) g = AddLongPath(g, a, b);
    }
    ProseRow(rows.back(), "violation after adding a path per pair is argued in prose only", g,
             "K_4 plus a path for every pair");
  }

  rows.push_back(MakeRow("aligned bar 1-visibility (AB1V)", "+", "-", "-"));
  AlignedRow(rows.back(), trials, RowRng(seed, 12), sink(rows.back()));
  return report;
}

Json Table1ToJson(const Table1Report& report) {
  Json out;
  out["seed"] = report.seed;
  out["scale"] = report.scale;
  out["scope"] = "closure evidence on sampled instances and given drawings";
  Json rows = Json::object();
  for (const ClosureRow& row : report.rows) {
    Json r;
    r["path_addition"] = {{"expected", row.expected_path_addition},
                          {"verdict", row.verdict},
                          {"evidence_kind", row.evidence_kind},
                          {"evidence", row.evidence}};
    r["subdivision"] = {{"expected", row.expected_subdivision},
                        {"check", row.subdivision_check}};
    r["contraction"] = {{"expected", row.expected_contraction}, {"check", "not checked"}};
    r["artifacts"] = row.artifacts;
    rows[row.name] = r;
  }
  out["rows"] = rows;
  return out;
}

}  // namespace pathadd
