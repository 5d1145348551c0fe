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

#include "pathadd/path_addition.h"

#include <algorithm>
#include <string>

#include "pathadd/error.h"

namespace pathadd {

PathAdditionSpec PathAdditionSpec::ForPath(VertexId u, VertexId v,
                                           std::vector<VertexId> internal) {
  PathAdditionSpec spec;
  spec.u = u;
  spec.v = v;
  spec.internal = std::move(internal);
  VertexId prev = u;
  for (VertexId w : spec.internal) {
    spec.path_edges.emplace_back(prev, w);
    prev = w;
  }
  spec.path_edges.emplace_back(prev, v);
  return spec;
}

std::vector<VertexId> FreshIds(const Graph& g, int t) {
  std::vector<VertexId> ids;
  VertexId next = g.NumVertices() == 0 ? 0 : g.Vertices().back() + 1;
  for (int i = 0; i < t; ++i) ids.push_back(next + i);
  return ids;
}

Graph ApplyPathAddition(const Graph& g, const PathAdditionSpec& spec,
                        bool closure) {
  if (!g.HasVertex(spec.u) || !g.HasVertex(spec.v)) {
    throw Error(ErrorCode::kUnknownVertex, "path endpoints must be host vertices");
  }
  if (spec.u == spec.v) {
    throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  }
  std::set<VertexId> w(spec.internal.begin(), spec.internal.end());
  if (w.size() != spec.internal.size()) {
    throw Error(ErrorCode::kStaleVertex, "internal vertices repeat");
  }
  for (VertexId x : spec.internal) {
    if (g.HasVertex(x)) {
      throw Error(ErrorCode::kStaleVertex,
                  "internal vertex " + std::to_string(x) + " already in graph");
    }
  }
  if (closure && spec.Length() < static_cast<int>(g.NumVertices()) - 1) {
    throw Error(ErrorCode::kShortPath,
                "path length " + std::to_string(spec.Length()) + " below |G|-1 = " +
                    std::to_string(g.NumVertices() - 1));
  }
  PathAdditionSpec expected = PathAdditionSpec::ForPath(spec.u, spec.v, spec.internal);
  if (spec.path_edges != expected.path_edges) {
    throw Error(ErrorCode::kInvalidArgument, "path edges do not match the path");
  }
  for (const Edge& f : spec.supplementary) {
    if (!w.count(f.a) && !w.count(f.b)) {
      throw Error(ErrorCode::kBadSupplementary,
                  "supplementary edge (" + std::to_string(f.a) + "," +
                      std::to_string(f.b) + ") avoids the new vertices");
    }
  }
  Graph out = g;
  for (VertexId x : spec.internal) out.AddVertex(x);
  for (const Edge& e : spec.path_edges) {
    if (!out.AddEdge(e)) {
      throw Error(ErrorCode::kInvalidArgument, "path edge already present");
    }
  }
  for (const Edge& f : spec.supplementary) {
    if (!out.HasVertex(f.a) || !out.HasVertex(f.b)) {
      throw Error(ErrorCode::kUnknownVertex, "supplementary edge endpoint unknown");
    }
    out.AddEdge(f);
  }
  return out;
}

std::string_view RoutingModeName(RoutingMode mode) {
  switch (mode) {
    case RoutingMode::kRac: return "rac";
    case RoutingMode::kFanFree: return "fanfree";
    case RoutingMode::kQuasi: return "quasi";
  }
  return "?";
}

RoutingMode ParseRoutingMode(std::string_view name) {
  if (name == "rac") return RoutingMode::kRac;
  if (name == "fanfree" || name == "fan_free") return RoutingMode::kFanFree;
  if (name == "quasi") return RoutingMode::kQuasi;
  throw Error(ErrorCode::kInvalidArgument, "unknown routing mode " + std::string(name));
}

namespace {

void AddTranscriptPath(CliqueMinorResult& r, VertexId a, VertexId b) {
  int n = static_cast<int>(r.graph.NumVertices());
  int t = std::max(n - 2, 1);
  PathAdditionSpec spec = PathAdditionSpec::ForPath(a, b, FreshIds(r.graph, t));
  r.graph = ApplyPathAddition(r.graph, spec);
  r.transcript.push_back(std::move(spec));
}

}  // namespace

CliqueMinorResult BuildCliqueMinor(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (g.NumVertices() == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph");
  CliqueMinorResult r;
  r.graph = g;
  if (k > 1 && g.NumVertices() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need two vertices to add a path");
  }
  while (static_cast<int>(r.graph.NumVertices()) < k) {
    std::vector<VertexId> vs = r.graph.Vertices();
    AddTranscriptPath(r, vs[0], vs[1]);
  }
  std::vector<VertexId> vs = r.graph.Vertices();
  r.branch_vertices.assign(vs.begin(), vs.begin() + k);
  // Fresh internal vertices keep the connecting paths internally disjoint.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      VertexId a = r.branch_vertices[i];
      VertexId b = r.branch_vertices[j];
      if (!r.graph.HasEdge(a, b)) AddTranscriptPath(r, a, b);
    }
  }
  return r;
}

}  // namespace pathadd
