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

#include "pathadd/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "pathadd/error.h"

namespace pathadd {

namespace {

const std::set<VertexId> kNoNeighbors;

std::string EdgeText(const Edge& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

}  // namespace

Graph Graph::FromEdges(
    const std::vector<VertexId>& vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g;
  for (VertexId v : vertices) g.AddVertex(v);
  for (const auto& [a, b] : edges) {
    if (!g.AddEdge(a, b)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + EdgeText(Edge(a, b)));
    }
  }
  return g;
}

void Graph::AddVertex(VertexId v) { adj_.try_emplace(v); }

VertexId Graph::AddFreshVertex() {
  VertexId v = SmallestUnusedId();
  AddVertex(v);
  return v;
}

bool Graph::AddEdge(VertexId a, VertexId b) {
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument,
                "self-loop at vertex " + std::to_string(a));
  }
  auto ia = adj_.find(a);
  auto ib = adj_.find(b);
  if (ia == adj_.end() || ib == adj_.end()) {
    throw Error(ErrorCode::kUnknownVertex,
                "edge endpoint not declared: " + EdgeText(Edge(a, b)));
  }
  if (!ia->second.insert(b).second) return false;
  ib->second.insert(a);
  ++num_edges_;
  return true;
}

void Graph::RemoveEdge(const Edge& e) {
  if (!HasEdge(e)) {
    throw Error(ErrorCode::kMissingEdge, "no edge " + EdgeText(e));
  }
  adj_[e.a].erase(e.b);
  adj_[e.b].erase(e.a);
  --num_edges_;
}

void Graph::RemoveVertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw Error(ErrorCode::kUnknownVertex, std::to_string(v));
  }
  for (VertexId w : it->second) adj_[w].erase(v);
  num_edges_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::HasEdge(VertexId a, VertexId b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) > 0;
}

const std::set<VertexId>& Graph::Neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw Error(ErrorCode::kUnknownVertex,
                "vertex " + std::to_string(v) + " not in graph");
  }
  return it->second;
}

std::vector<VertexId> Graph::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [v, nbrs] : adj_) {
    for (VertexId w : nbrs) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

VertexId Graph::SmallestUnusedId() const {
  VertexId candidate = 0;
  for (const auto& [v, _] : adj_) {
    if (v < candidate) continue;
    if (v != candidate) break;
    ++candidate;
  }
  return candidate;
}

Graph CompleteGraph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.AddVertex(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.AddEdge(i, j);
  }
  return g;
}

Graph CycleGraph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.AddVertex(i);
  for (int i = 0; i < n; ++i) g.AddEdge(i, (i + 1) % n);
  return g;
}

Graph PathGraph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.AddVertex(i);
  for (int i = 0; i + 1 < n; ++i) g.AddEdge(i, i + 1);
  return g;
}

Graph CompleteBipartite(int p, int q) {
  Graph g;
  for (int i = 0; i < p + q; ++i) g.AddVertex(i);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) g.AddEdge(i, p + j);
  }
  return g;
}

Graph GridGraph(int rows, int cols) {
  Graph g;
  for (int i = 0; i < rows * cols; ++i) g.AddVertex(i);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) g.AddEdge(v, v + 1);
      if (r + 1 < rows) g.AddEdge(v, v + cols);
    }
  }
  return g;
}

Graph PetersenGraph() {
  Graph g;
  for (int i = 0; i < 10; ++i) g.AddVertex(i);
  for (int i = 0; i < 5; ++i) {
    g.AddEdge(i, (i + 1) % 5);
    g.AddEdge(i, i + 5);
    g.AddEdge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph ContractEdge(const Graph& g, const Edge& e) {
  if (!g.HasEdge(e)) {
    throw Error(ErrorCode::kMissingEdge, "cannot contract " + EdgeText(e));
  }
  Graph out = g;
  std::set<VertexId> absorbed = g.Neighbors(e.b);
  out.RemoveVertex(e.b);
  for (VertexId w : absorbed) {
    if (w != e.a) out.AddEdge(e.a, w);
  }
  return out;
}

Graph SubdivideEdge(const Graph& g, const Edge& e, VertexId* fresh) {
  if (!g.HasEdge(e)) {
    throw Error(ErrorCode::kMissingEdge, "cannot subdivide " + EdgeText(e));
  }
  Graph out = g;
  out.RemoveEdge(e);
  VertexId w = out.AddFreshVertex();
  out.AddEdge(e.a, w);
  out.AddEdge(w, e.b);
  if (fresh != nullptr) *fresh = w;
  return out;
}

VertexPath ShortestPath(const Graph& g, VertexId u, VertexId v) {
  if (!g.HasVertex(u) || !g.HasVertex(v)) {
    throw Error(ErrorCode::kUnknownVertex, "shortest path endpoints");
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument, "shortest path needs u != v");
  }
  std::map<VertexId, VertexId> parent;
  parent[u] = u;
  std::deque<VertexId> queue = {u};
  while (!queue.empty() && !parent.count(v)) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.Neighbors(x)) {
      if (parent.emplace(y, x).second) queue.push_back(y);
    }
  }
  if (!parent.count(v)) {
    throw Error(ErrorCode::kDisconnected,
                "no path between " + std::to_string(u) + " and " +
                    std::to_string(v));
  }
  VertexPath path;
  for (VertexId x = v; x != u; x = parent[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::set<VertexId>> ConnectedComponents(const Graph& g) {
  std::vector<std::set<VertexId>> components;
  std::set<VertexId> seen;
  for (VertexId start : g.Vertices()) {
    if (seen.count(start)) continue;
    std::set<VertexId> comp = {start};
    std::vector<VertexId> stack = {start};
    seen.insert(start);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.Neighbors(x)) {
        if (seen.insert(y).second) {
          comp.insert(y);
          stack.push_back(y);
        }
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

bool IsConnected(const Graph& g) {
  return ConnectedComponents(g).size() <= 1;
}

Graph InducedSubgraph(const Graph& g, const std::set<VertexId>& keep) {
  Graph out;
  for (VertexId v : keep) {
    if (g.HasVertex(v)) out.AddVertex(v);
  }
  for (const Edge& e : g.Edges()) {
    if (out.HasVertex(e.a) && out.HasVertex(e.b)) out.AddEdge(e);
  }
  return out;
}

Graph Normalized(const Graph& g) {
  std::map<VertexId, VertexId> index;
  for (VertexId v : g.Vertices()) {
    index.emplace(v, static_cast<VertexId>(index.size()));
  }
  Graph out;
  for (const auto& [_, i] : index) out.AddVertex(i);
  for (const Edge& e : g.Edges()) out.AddEdge(index[e.a], index[e.b]);
  return out;
}

namespace {

struct IsoSearch {
  std::vector<std::vector<bool>> ga;
  std::vector<std::vector<bool>> ha;
  std::vector<int> gdeg;
  std::vector<int> hdeg;
  std::vector<int> map;  // g index -> h index
  std::vector<bool> used;

  bool Extend(std::size_t i) {
    if (i == map.size()) return true;
    for (std::size_t c = 0; c < used.size(); ++c) {
      if (used[c] || hdeg[c] != gdeg[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = ga[i][j] == ha[c][map[j]];
      }
      if (!ok) continue;
      used[c] = true;
      map[i] = static_cast<int>(c);
      if (Extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  }
};

std::vector<std::vector<bool>> AdjacencyMatrix(const Graph& g) {
  Graph n = Normalized(g);
  std::vector<std::vector<bool>> m(n.NumVertices(),
                                   std::vector<bool>(n.NumVertices(), false));
  for (const Edge& e : n.Edges()) m[e.a][e.b] = m[e.b][e.a] = true;
  return m;
}

}  // namespace

bool AreIsomorphic(const Graph& g, const Graph& h) {
  if (g.NumVertices() != h.NumVertices() || g.NumEdges() != h.NumEdges()) {
    return false;
  }
  IsoSearch s;
  s.ga = AdjacencyMatrix(g);
  s.ha = AdjacencyMatrix(h);
  for (const auto& row : s.ga) {
    s.gdeg.push_back(static_cast<int>(std::count(row.begin(), row.end(), true)));
  }
  for (const auto& row : s.ha) {
    s.hdeg.push_back(static_cast<int>(std::count(row.begin(), row.end(), true)));
  }
  std::vector<int> a = s.gdeg, b = s.hdeg;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  s.map.assign(s.ga.size(), -1);
  s.used.assign(s.ga.size(), false);
  return s.Extend(0);
}

}  // namespace pathadd
