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

#ifndef PATHADD_GRAPH_H_
#define PATHADD_GRAPH_H_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace pathadd {

using VertexId = int;

// Unordered vertex pair, stored with the smaller id first.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool Has(VertexId v) const { return a == v || b == v; }
  VertexId Other(VertexId v) const { return v == a ? b : a; }
  bool SharesEndpoint(const Edge& o) const {
    return Has(o.a) || Has(o.b);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Sequence of distinct vertices; consecutive entries are adjacent in the
// graph the path was computed on.
using VertexPath = std::vector<VertexId>;

// Simple undirected graph over opaque integer ids.
class Graph {
 public:
  Graph() = default;

  static Graph FromEdges(const std::vector<VertexId>& vertices,
                         const std::vector<std::pair<VertexId, VertexId>>& edges);

  void AddVertex(VertexId v);
  // Adds the smallest id not yet in use and returns it.
  VertexId AddFreshVertex();
  // Returns false when the edge already exists. Self-loops and unknown
  // endpoints are errors.
  bool AddEdge(VertexId a, VertexId b);
  bool AddEdge(const Edge& e) { return AddEdge(e.a, e.b); }
  void RemoveEdge(const Edge& e);
  void RemoveVertex(VertexId v);

  bool HasVertex(VertexId v) const { return adj_.count(v) > 0; }
  bool HasEdge(VertexId a, VertexId b) const;
  bool HasEdge(const Edge& e) const { return HasEdge(e.a, e.b); }

  const std::set<VertexId>& Neighbors(VertexId v) const;
  int Degree(VertexId v) const {
    return static_cast<int>(Neighbors(v).size());
  }

  std::vector<VertexId> Vertices() const;
  std::vector<Edge> Edges() const;
  std::size_t NumVertices() const { return adj_.size(); }
  std::size_t NumEdges() const { return num_edges_; }

  VertexId SmallestUnusedId() const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.adj_ == y.adj_;
  }

 private:
  std::map<VertexId, std::set<VertexId>> adj_;
  std::size_t num_edges_ = 0;
};

// Standard families used throughout the tests and generators.
Graph CompleteGraph(int n);
Graph CycleGraph(int n);
Graph PathGraph(int n);
Graph CompleteBipartite(int p, int q);
Graph GridGraph(int rows, int cols);
Graph PetersenGraph();

// Merges the endpoints of `e` into the smaller id; parallel edges collapse.
Graph ContractEdge(const Graph& g, const Edge& e);

// Replaces `e = (a,b)` by a path a-w-b through a fresh vertex w (smallest
// unused id), reported through `fresh` when non-null.
Graph SubdivideEdge(const Graph& g, const Edge& e, VertexId* fresh = nullptr);

// Breadth-first shortest path; ties are broken towards smaller ids.
VertexPath ShortestPath(const Graph& g, VertexId u, VertexId v);

bool IsConnected(const Graph& g);
std::vector<std::set<VertexId>> ConnectedComponents(const Graph& g);

Graph InducedSubgraph(const Graph& g, const std::set<VertexId>& keep);

// Relabels vertices to 0..n-1 in ascending id order.
Graph Normalized(const Graph& g);

// Backtracking isomorphism test with degree refinement; intended for small
// graphs.
bool AreIsomorphic(const Graph& g, const Graph& h);

// True iff g has a planar embedding.
bool IsPlanar(const Graph& g);

struct MinorOptions {
  // Hard cap on host vertices after degree reductions.
  int max_host_vertices = 14;
};

// True iff h can be obtained from g by edge deletions, edge contractions and
// removal of isolated vertices.
bool ContainsMinor(const Graph& g, const Graph& h,
                   const MinorOptions& options = {});

}  // namespace pathadd

#endif  // PATHADD_GRAPH_H_
