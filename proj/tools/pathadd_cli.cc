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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pathadd/counterexamples.h"
#include "pathadd/error.h"
#include "pathadd/export.h"
#include "pathadd/io.h"
#include "pathadd/path_addition.h"
#include "pathadd/random_instances.h"
#include "pathadd/table1.h"
#include "pathadd/validators.h"
#include "pathadd/visibility.h"

namespace {

using namespace pathadd;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void EmitJson(const Json& j, const std::string& path) { Emit(j.dump(2) + "\n", path); }

Json Load(const std::string& path) {
  try {
    return ReadJsonFile(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Graph GraphOfAligned(const AlignedBarRepresentation& rep) {
  Graph g;
  for (const auto& [id, bar] : rep.bars) g.AddVertex(id);
  for (const AlignedSight& s : rep.sights) g.AddEdge(s.a, s.b);
  return g;
}

Graph GraphOfBars(const BarRepresentation& rep) {
  Graph g = GraphOfSights(rep);
  for (const auto& [id, bar] : rep.bars) g.AddVertex(id);
  return g;
}

// The graph stored next to a representation, or the one it realizes.
template <typename Derive>
Graph GraphOr(const Json& doc, Derive derive) {
  if (doc.contains("graph")) return GraphFromJson(doc.at("graph"));
  return derive();
}

}  // namespace

namespace {

struct GenerateArgs {
  std::string family;
  int k = 3;
  int q = 13;
  int n = 10;
  std::uint64_t seed = 1;
  bool drawing = false;
  std::string out;
};

int RunGenerate(const GenerateArgs& a) {
  Json doc;
  if (a.family == "xw") {
    doc = EmbeddingToJson(MakeExtendedWheel(a.k).embedding);
  } else if (a.family == "k2q") {
    doc = a.drawing ? EmbeddingToJson(K2qAllOutside(a.q)) : GraphToJson(K2q(a.q));
  } else if (a.family == "dodeca") {
    doc = GraphToJson(CrossedDodecahedron());
  } else if (a.family == "binucci") {
    BinucciGraph b = MakeBinucciGraph(BinucciConfig::Default());
    doc = GraphToJson(b.graph);
    Json blobs = Json::array();
    for (const BinucciBlob& blob : b.blobs) {
      blobs.push_back({{"skeleton_pair", Json::array({blob.pair.first, blob.pair.second})},
                       {"vertices", blob.vertices}});
    }
    Json targets = Json::array();
    for (const Edge& e : b.removed_targets) targets.push_back(Json::array({e.a, e.b}));
    doc["manifest"] = {{"skeleton", b.skeleton}, {"blobs", blobs}, {"path_targets", targets}};
  } else {
    Rng rng(a.seed);
    if (a.family == "triangulation") {
      doc = EmbeddingToJson(RandomStackedTriangulation(a.n, rng));
    } else if (a.family == "bar") {
      doc = BarToJson(RandomBarRepresentation(a.n, rng));
    } else if (a.family == "aligned") {
      doc = AlignedToJson(RandomAlignedRepresentation(a.n, rng));
    } else if (a.family == "interval") {
      doc = IntervalToJson(RandomIntervalRepresentation(a.n, rng));
    } else {
      throw UsageError("unknown family " + a.family);
    }
  }
  EmitJson(doc, a.out);
  return kOk;
}

struct ValidateArgs {
  std::string cls;
  int k = 1;
  int j = 0;
  bool strong = false;
  std::string in;
};

int RunValidate(const ValidateArgs& a) {
  Json doc = Load(a.in);
  ValidationReport report;
  const std::string& c = a.cls;
  if (c == "kplanar" || c == "quasi" || c == "fanfree" || c == "fanplanar" || c == "rac") {
    GeometricEmbedding emb = EmbeddingFromJson(doc);
    if (c == "kplanar") report = CheckKPlanar(emb, a.k);
    if (c == "quasi") report = CheckQuasiPlanar(emb, a.k < 3 ? 3 : a.k);
    if (c == "fanfree") report = CheckFanCrossingFree(emb);
    if (c == "fanplanar") report = CheckFanPlanar(emb, a.strong);
    if (c == "rac") report = CheckRac(emb);
  } else if (c == "bar") {
    BarRepresentation rep = BarFromJson(doc);
    Graph g = GraphOr(doc, [&] { return GraphOfBars(rep); });
    std::optional<int> j;
    if (a.j > 0) j = a.j;
    report = CheckBarVisibility(rep, g, a.k, j, a.strong);
  } else if (c == "ab1v") {
    AlignedBarRepresentation rep = AlignedFromJson(doc);
    report = CheckAlignedVisibility(rep, GraphOr(doc, [&] { return GraphOfAligned(rep); }));
  } else if (c == "interval") {
    IntervalRepresentation rep = IntervalFromJson(doc);
    report = CheckInterval(rep, GraphOr(doc, [&] { return IntersectionGraph(rep); }));
  } else {
    throw UsageError("unknown class " + c);
  }
  EmitJson(ReportToJson(report), "");
  return report.verdict ? kOk : kFailed;
}

struct AddPathArgs {
  std::string mode;
  std::string in;
  VertexId u = -1;
  VertexId v = -1;
  int t = -1;
  bool strong = false;
  std::string out;
  std::string spec;
};

int RunAddPath(const AddPathArgs& a) {
  Json doc = Load(a.in);
  Json result;
  PathAdditionSpec spec;
  auto default_t = [&](const Graph& g) {
    return a.t >= 0 ? a.t : static_cast<int>(g.NumVertices()) - 2;
  };
  if (a.mode == "rac" || a.mode == "fanfree" || a.mode == "quasi") {
    GeometricEmbedding emb = EmbeddingFromJson(doc);
    RoutingResult res =
        RoutePathEmbedded(emb, a.u, a.v, ParseRoutingMode(a.mode), default_t(emb.graph));
    result = EmbeddingToJson(res.embedding);
    spec = res.spec;
  } else if (a.mode == "bar1") {
    BarRepresentation rep = BarFromJson(doc);
    Graph g = GraphOr(doc, [&] { return GraphOfBars(rep); });
    BarPathResult res = AddPathBar1(rep, g, a.u, a.v, default_t(g), a.strong);
    result = BarToJson(res.rep);
    result["graph"] = GraphToJson(res.graph);
    spec = res.spec;
  } else if (a.mode == "ab1v") {
    AlignedBarRepresentation rep = AlignedFromJson(doc);
    Graph g = GraphOr(doc, [&] { return GraphOfAligned(rep); });
    AlignedPathResult res = AddPathAligned(rep, g, a.u, a.v, default_t(g));
    result = AlignedToJson(res.rep);
    result["graph"] = GraphToJson(res.graph);
    spec = res.spec;
  } else if (a.mode == "interval") {
    IntervalRepresentation rep = IntervalFromJson(doc);
    Graph g = GraphOr(doc, [&] { return IntersectionGraph(rep); });
    IntervalPathResult res = AddPathInterval(rep, g, a.u, a.v, default_t(g));
    result = IntervalToJson(res.rep);
    result["graph"] = GraphToJson(res.graph);
    spec = res.spec;
  } else if (a.mode == "abstract") {
    Graph g = doc.contains("vertices") ? GraphFromJson(doc) : GraphFromJson(doc.at("graph"));
    int t = default_t(g);
    if (t < 0) t = 0;
    spec = PathAdditionSpec::ForPath(a.u, a.v, FreshIds(g, t));
    result = GraphToJson(ApplyPathAddition(g, spec));
  } else {
    throw UsageError("unknown mode " + a.mode);
  }
  EmitJson(result, a.out);
  if (!a.spec.empty()) EmitJson(SpecToJson(spec), a.spec);
  return kOk;
}

struct DemoArgs {
  std::string family;
  int k = 3;
  int j = 2;
};

int RunDemo(const DemoArgs& a) {
  BudgetReport report;
  if (a.family == "xw") {
    ExtendedWheel xw = MakeExtendedWheel(a.k);
    report = TraversalBudgetDemo(xw.embedding, xw.p, xw.q, 1);
  } else if (a.family == "bar-ring") {
    BarRingWitness w = MakeBarRingWitness();
    report = TraversalBudgetDemo(w.rep, w.u, w.v, a.j);
  } else {
    throw UsageError("unknown demo family " + a.family);
  }
  EmitJson(BudgetToJson(report), "");
  return kOk;
}

struct ExportArgs {
  std::string format;
  std::string in;
  std::string out;
};

int RunExport(const ExportArgs& a) {
  Json doc = Load(a.in);
  const std::string kind = DocumentKind(doc);
  if (a.format == "json") {
    // Round trip through the typed readers, which also validates the input.
    Json canon;
    if (kind == "graph") canon = GraphToJson(GraphFromJson(doc));
    if (kind == "embedding") canon = EmbeddingToJson(EmbeddingFromJson(doc));
    if (kind == "bar") canon = BarToJson(BarFromJson(doc));
    if (kind == "aligned") canon = AlignedToJson(AlignedFromJson(doc));
    if (kind == "interval") canon = IntervalToJson(IntervalFromJson(doc));
    if (doc.contains("graph") && kind != "graph") canon["graph"] = doc["graph"];
    EmitJson(canon, a.out);
  } else if (a.format == "dot") {
    if (kind == "embedding") {
      Emit(EmbeddingToDot(EmbeddingFromJson(doc)), a.out);
    } else if (kind == "graph") {
      Emit(GraphToDot(GraphFromJson(doc)), a.out);
    } else if (kind == "bar") {
      BarRepresentation rep = BarFromJson(doc);
      Emit(GraphToDot(GraphOr(doc, [&] { return GraphOfBars(rep); })), a.out);
    } else if (kind == "aligned") {
      AlignedBarRepresentation rep = AlignedFromJson(doc);
      Emit(GraphToDot(GraphOr(doc, [&] { return GraphOfAligned(rep); })), a.out);
    } else {
      IntervalRepresentation rep = IntervalFromJson(doc);
      Emit(GraphToDot(GraphOr(doc, [&] { return IntersectionGraph(rep); })), a.out);
    }
  } else if (a.format == "svg") {
    if (kind == "embedding") Emit(EmbeddingToSvg(EmbeddingFromJson(doc)), a.out);
    else if (kind == "bar") Emit(BarToSvg(BarFromJson(doc)), a.out);
    else if (kind == "aligned") Emit(AlignedToSvg(AlignedFromJson(doc)), a.out);
    else if (kind == "interval") Emit(IntervalToSvg(IntervalFromJson(doc)), a.out);
    else throw UsageError("svg export needs a drawing or representation");
  } else {
    throw UsageError("unknown format " + a.format);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-addition toolkit: generators, validators, path additions, reports"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a graph, drawing or representation");
  generate->add_option("--family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"xw", "k2q", "dodeca", "binucci", "triangulation", "bar",
                             "aligned", "interval"}));
  generate->add_option("--k", gen.k, "Extended wheel parameter");
  generate->add_option("--q", gen.q, "K_{2,q} parameter");
  generate->add_option("--n", gen.n, "Size of random instances");
  generate->add_option("--seed", gen.seed, "Seed of random instances");
  generate->add_flag("--drawing", gen.drawing, "For k2q: emit the all-outside drawing");
  generate->add_option("--out", gen.out, "Output file (default stdout)");

  ValidateArgs val;
  auto* validate = app.add_subcommand("validate", "Check a drawing or representation");
  validate->add_option("--class", val.cls, "Class to check")
      ->required()
      ->check(CLI::IsMember(
          {"kplanar", "quasi", "fanfree", "fanplanar", "rac", "bar", "ab1v", "interval"}));
  validate->add_option("--k", val.k, "k for kplanar, quasi and bar k-visibility");
  validate->add_option("--j", val.j, "Per-bar traversal cap for bar (k,j)-visibility");
  validate->add_flag("--strong", val.strong,
                     "Strong bar semantics, or strict fan-planarity");
  validate->add_option("--in", val.in, "Input JSON")->required();

  AddPathArgs add;
  auto* add_path = app.add_subcommand("add-path", "Add a path between two vertices");
  add_path->add_option("--mode", add.mode, "Construction")
      ->required()
      ->check(CLI::IsMember({"rac", "fanfree", "quasi", "bar1", "ab1v", "interval",
                             "abstract"}));
  add_path->add_option("--in", add.in, "Input JSON")->required();
  add_path->add_option("--u", add.u, "First end vertex")->required();
  add_path->add_option("--v", add.v, "Second end vertex")->required();
  add_path->add_option("--t", add.t, "Internal vertices (default |V|-2)");
  add_path->add_flag("--strong", add.strong, "bar1: keep the representation strong");
  add_path->add_option("--out", add.out, "Output file (default stdout)");
  add_path->add_option("--spec", add.spec, "Write the path-addition spec here");

  DemoArgs demo_args;
  auto* demo = app.add_subcommand("demo", "Print a traversal budget report");
  demo->add_option("--family", demo_args.family, "Witness family")
      ->required()
      ->check(CLI::IsMember({"xw", "bar-ring"}));
  demo->add_option("--k", demo_args.k, "Extended wheel parameter");
  demo->add_option("--j", demo_args.j, "Per-bar traversal cap");

  std::uint64_t seed = 42;
  std::string scale = "small", table_out, artifacts;
  auto* table1 = app.add_subcommand("table1", "Reproduce the closure table");
  table1->add_option("--seed", seed, "Seed");
  table1->add_option("--scale", scale, "small, medium, large or 1..8");
  table1->add_option("--out", table_out, "Output file (default stdout)");
  table1->add_option("--artifacts", artifacts, "Directory for replayable artifacts");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Convert to dot, svg or canonical json");
  export_cmd->add_option("--format", exp.format, "Output format")
      ->required()
      ->check(CLI::IsMember({"dot", "svg", "json"}));
  export_cmd->add_option("--in", exp.in, "Input JSON")->required();
  export_cmd->add_option("--out", exp.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return RunGenerate(gen);
    if (*validate) return RunValidate(val);
    if (*add_path) return RunAddPath(add);
    if (*demo) return RunDemo(demo_args);
    if (*table1) {
      Table1Report report = RunTable1Report(seed, ParseScale(scale), artifacts);
      EmitJson(Table1ToJson(report), table_out);
      return kOk;
    }
    if (*export_cmd) return RunExport(exp);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool usage = e.code() == ErrorCode::kParse || e.code() == ErrorCode::kInvalidArgument;
    return usage ? kUsage : kFailed;
  }
  return kUsage;
}
