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

#include "pathadd/io.h"

#include <fstream>
#include <algorithm>

#include "pathadd/error.h"

namespace pathadd {
namespace {

Error ParseError(const std::string& what) { return Error(ErrorCode::kParse, what); }

Json Num(const Rational& r) { return FormatRational(r); }

Rational ReadRational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return ParseRational(j.get<std::string>());
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError("expected a rational, got " + j.dump());
}

VertexId ReadId(const Json& j) {
  if (j.is_number_integer()) return j.get<VertexId>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == s.size() && used > 0) return static_cast<VertexId>(value);
  }
  throw ParseError("expected a vertex id, got " + j.dump());
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Json EdgePair(const Edge& e) { return Json::array({e.a, e.b}); }

Edge ReadEdge(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edge must be a pair");
  return Edge(ReadId(j[0]), ReadId(j[1]));
}

Point ReadPoint(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("point must be a pair");
  return Point{ReadRational(j[0]), ReadRational(j[1])};
}

Json PointJson(const Point& p) { return Json::array({Num(p.x), Num(p.y)}); }

}  // namespace

Json GraphToJson(const Graph& g) {
  Json out;
  out["vertices"] = g.Vertices();
  Json edges = Json::array();
  for (const Edge& e : g.Edges()) edges.push_back(EdgePair(e));
  out["edges"] = edges;
  return out;
}

Graph GraphFromJson(const Json& j) {
  Graph g;
  const Json& vertices = Field(j, "vertices");
  if (!vertices.is_array()) throw ParseError("'vertices' must be an array");
  for (const Json& v : vertices) g.AddVertex(ReadId(v));
  const Json& edges = Field(j, "edges");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");
  for (const Json& e : edges) {
    Edge edge = ReadEdge(e);
    if (edge.a == edge.b) throw ParseError("self-loop on " + std::to_string(edge.a));
    if (!g.HasVertex(edge.a) || !g.HasVertex(edge.b)) {
      throw ParseError("edge " + e.dump() + " uses an unlisted vertex");
    }
    g.AddEdge(edge);
  }
  return g;
}

Json EmbeddingToJson(const GeometricEmbedding& emb) {
  Json out = GraphToJson(emb.graph);
  Json coords = Json::object();
  for (const auto& [v, p] : emb.coords) coords[std::to_string(v)] = PointJson(p);
  out["coords"] = coords;
  if (!emb.bends.empty()) {
    Json bends = Json::array();
    for (const auto& [e, pts] : emb.bends) {
      Json poly = Json::array();
      for (const Point& p : pts) poly.push_back(PointJson(p));
      bends.push_back(Json::array({e.a, e.b, poly}));
    }
    out["bends"] = bends;
  }
  return out;
}

GeometricEmbedding EmbeddingFromJson(const Json& j) {
  GeometricEmbedding emb;
  emb.graph = GraphFromJson(j);
  const Json& coords = Field(j, "coords");
  if (!coords.is_object()) throw ParseError("'coords' must be an object");
  for (const auto& [key, value] : coords.items()) {
    VertexId v = ReadId(Json(key));
    if (!emb.graph.HasVertex(v)) throw ParseError("coordinates for unknown vertex " + key);
    emb.coords[v] = ReadPoint(value);
  }
  for (VertexId v : emb.graph.Vertices()) {
    if (!emb.coords.count(v)) throw ParseError("vertex " + std::to_string(v) + " has no coordinates");
  }
  if (j.contains("bends")) {
    for (const Json& b : j.at("bends")) {
      if (!b.is_array() || b.size() != 3) throw ParseError("bend entry must be [a, b, points]");
      VertexId a = ReadId(b[0]), c = ReadId(b[1]);
      Edge e(a, c);
      if (!emb.graph.HasEdge(e)) throw ParseError("bends on a missing edge");
      std::vector<Point> pts;
      for (const Json& p : b[2]) pts.push_back(ReadPoint(p));
      // Stored from the smaller endpoint.
      if (a > c) std::reverse(pts.begin(), pts.end());
      emb.bends[e] = pts;
    }
  }
  return emb;
}

Json BarToJson(const BarRepresentation& rep) {
  Json bars = Json::object();
  for (const auto& [v, bar] : rep.bars) {
    Json b;
    b["y"] = Num(bar.y);
    b["x_lo"] = Num(bar.x_lo);
    b["x_hi"] = Num(bar.x_hi);
    bars[std::to_string(v)] = b;
  }
  Json sights = Json::array();
  std::vector<Sight> sorted = rep.sights;
  std::sort(sorted.begin(), sorted.end());
  for (const Sight& s : sorted) {
    sights.push_back(Json::array({std::to_string(s.a), std::to_string(s.b), Num(s.x)}));
  }
  Json out;
  out["bars"] = bars;
  out["sights"] = sights;
  return out;
}

BarRepresentation BarFromJson(const Json& j) {
  BarRepresentation rep;
  for (const auto& [key, value] : Field(j, "bars").items()) {
    rep.bars[ReadId(Json(key))] = Bar{ReadRational(Field(value, "y")),
                                      ReadRational(Field(value, "x_lo")),
                                      ReadRational(Field(value, "x_hi"))};
  }
  for (const Json& s : Field(j, "sights")) {
    if (!s.is_array() || s.size() != 3) throw ParseError("sight must be [a, b, x]");
    rep.sights.push_back(Sight{ReadId(s[0]), ReadId(s[1]), ReadRational(s[2])});
  }
  return rep;
}

Json AlignedToJson(const AlignedBarRepresentation& rep) {
  Json bars = Json::object();
  for (const auto& [v, bar] : rep.bars) {
    Json b;
    b["x"] = Num(bar.x);
    b["height"] = Num(bar.height);
    bars[std::to_string(v)] = b;
  }
  Json sights = Json::array();
  for (const AlignedSight& s : rep.sights) {
    sights.push_back(Json::array({std::to_string(s.a), std::to_string(s.b), Num(s.y)}));
  }
  Json out;
  out["aligned_bars"] = bars;
  out["sights"] = sights;
  return out;
}

AlignedBarRepresentation AlignedFromJson(const Json& j) {
  AlignedBarRepresentation rep;
  for (const auto& [key, value] : Field(j, "aligned_bars").items()) {
    rep.bars[ReadId(Json(key))] =
        AlignedBar{ReadRational(Field(value, "x")), ReadRational(Field(value, "height"))};
  }
  for (const Json& s : Field(j, "sights")) {
    if (!s.is_array() || s.size() != 3) throw ParseError("sight must be [a, b, y]");
    rep.sights.push_back(AlignedSight{ReadId(s[0]), ReadId(s[1]), ReadRational(s[2])});
  }
  return rep;
}

Json IntervalToJson(const IntervalRepresentation& rep) {
  Json intervals = Json::object();
  for (const auto& [v, iv] : rep.intervals) {
    intervals[std::to_string(v)] = Json::array({Num(iv.lo), Num(iv.hi)});
  }
  Json out;
  out["intervals"] = intervals;
  return out;
}

IntervalRepresentation IntervalFromJson(const Json& j) {
  IntervalRepresentation rep;
  for (const auto& [key, value] : Field(j, "intervals").items()) {
    if (!value.is_array() || value.size() != 2) throw ParseError("interval must be [lo, hi]");
    rep.intervals[ReadId(Json(key))] = Interval{ReadRational(value[0]), ReadRational(value[1])};
  }
  return rep;
}

Json SpecToJson(const PathAdditionSpec& spec) {
  Json out;
  out["u"] = spec.u;
  out["v"] = spec.v;
  out["internal"] = spec.internal;
  Json path = Json::array();
  for (const Edge& e : spec.path_edges) path.push_back(EdgePair(e));
  out["path_edges"] = path;
  Json extra = Json::array();
  for (const Edge& e : spec.supplementary) extra.push_back(EdgePair(e));
  out["supplementary"] = extra;
  return out;
}

PathAdditionSpec SpecFromJson(const Json& j) {
  std::vector<VertexId> internal;
  for (const Json& x : Field(j, "internal")) internal.push_back(ReadId(x));
  PathAdditionSpec spec =
      PathAdditionSpec::ForPath(ReadId(Field(j, "u")), ReadId(Field(j, "v")), internal);
  if (j.contains("supplementary")) {
    for (const Json& e : j.at("supplementary")) spec.supplementary.insert(ReadEdge(e));
  }
  return spec;
}

Json ReportToJson(const ValidationReport& report) {
  Json out;
  out["verdict"] = report.verdict;
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    Json item;
    Json edges = Json::array();
    for (const Edge& e : w.edges) edges.push_back(EdgePair(e));
    item["edges"] = edges;
    if (w.apex >= 0) item["apex"] = w.apex;
    item["note"] = w.note;
    witnesses.push_back(item);
  }
  out["witnesses"] = witnesses;
  return out;
}

Json BudgetToJson(const BudgetReport& report) {
  Json out;
  out["cycle_length"] = report.cycle_length;
  out["cap"] = report.cap;
  out["budget"] = report.budget;
  out["demand"] = report.demand;
  out["cycle"] = report.cycle.cycle;
  out["original_hits"] = report.cycle.original_hits;
  Json comps = Json::array();
  for (const auto& c : report.cycle.components) comps.push_back(std::vector<VertexId>(c.begin(), c.end()));
  out["components"] = comps;
  out["scope"] = "checked on the given drawing only";
  return out;
}

std::string DocumentKind(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.contains("aligned_bars")) return "aligned";
  if (j.contains("bars")) return "bar";
  if (j.contains("intervals")) return "interval";
  if (j.contains("coords")) return "embedding";
  if (j.contains("vertices")) return "graph";
  throw ParseError("unrecognized document");
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace pathadd
