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

#ifndef PATHADD_PATH_ADDITION_H_
#define PATHADD_PATH_ADDITION_H_

#include <set>
#include <string>
#include <vector>

#include "pathadd/embedding.h"
#include "pathadd/graph.h"

namespace pathadd {

// A path P = (u, w_1, ..., w_t, v) with fresh internal vertices W plus
// supplementary edges F, each touching W.
struct PathAdditionSpec {
  VertexId u = -1;
  VertexId v = -1;
  std::vector<VertexId> internal;
  std::vector<Edge> path_edges;
  std::set<Edge> supplementary;

  // Path edges derived from u, internal and v.
  static PathAdditionSpec ForPath(VertexId u, VertexId v,
                                  std::vector<VertexId> internal);
  // Number of edges on P.
  int Length() const { return static_cast<int>(internal.size()) + 1; }
  friend bool operator==(const PathAdditionSpec&, const PathAdditionSpec&) = default;
};

// Fresh internal ids for a path of t internal vertices.
std::vector<VertexId> FreshIds(const Graph& g, int t);

// G + P + F. With `closure`, the path must have length >= |G|-1.
Graph ApplyPathAddition(const Graph& g, const PathAdditionSpec& spec,
                        bool closure = true);

enum class RoutingMode { kRac, kFanFree, kQuasi };

std::string_view RoutingModeName(RoutingMode mode);
RoutingMode ParseRoutingMode(std::string_view name);

struct RoutingResult {
  GeometricEmbedding embedding;
  PathAdditionSpec spec;
  // Internal vertices the route needed before padding to t.
  int demand = 0;
  // Vertices kept to split an edge between two mutually crossing edges.
  int subdivisions = 0;
};

// Routes a new u-v path with t internal vertices along a shortest path of
// the drawing, preserving the class selected by `mode`. Straight-line input.
RoutingResult RoutePathEmbedded(const GeometricEmbedding& emb, VertexId u,
                                VertexId v, RoutingMode mode, int t);

// Demand of the routing without building it.
int RoutingDemand(const GeometricEmbedding& emb, VertexId u, VertexId v,
                  RoutingMode mode);

struct CliqueMinorResult {
  Graph graph;
  std::vector<PathAdditionSpec> transcript;
  std::vector<VertexId> branch_vertices;
};

// Grows `g` by closure-respecting path-additions until it holds a subdivision
// of K_k on `branch_vertices`.
CliqueMinorResult BuildCliqueMinor(const Graph& g, int k);

}  // namespace pathadd

#endif  // PATHADD_PATH_ADDITION_H_
