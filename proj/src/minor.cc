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

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathadd/error.h"
#include "pathadd/graph.h"

namespace pathadd {

namespace {

int MinDegree(const Graph& g) {
  int best = -1;
  for (VertexId v : g.Vertices()) {
    int d = g.Degree(v);
    if (best < 0 || d < best) best = d;
  }
  return best < 0 ? 0 : best;
}

// Reductions that keep "h is a minor of g" unchanged when every vertex of h
// has degree >= min_h_degree: vertices of smaller degree in g can never be a
// whole branch set, so they are deleted (degree < 2) or merged into a
// neighbour (degree 2).
Graph Reduce(Graph g, int min_h_degree) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : g.Vertices()) {
      int d = g.Degree(v);
      if (d < std::min(min_h_degree, 2)) {
        g.RemoveVertex(v);
        changed = true;
        break;
      }
      if (d == 2 && min_h_degree >= 3) {
        VertexId w = *g.Neighbors(v).begin();
        g = ContractEdge(g, Edge(v, w));
        changed = true;
        break;
      }
    }
  }
  return g;
}

// Decides whether pattern (k vertices) embeds as a spanning subgraph of a
// k-vertex quotient graph given as an adjacency bitmask.
class SpanningSubgraphTest {
 public:
  explicit SpanningSubgraphTest(const Graph& pattern) {
    Graph p = Normalized(pattern);
    k_ = static_cast<int>(p.NumVertices());
    adj_.assign(k_, 0);
    for (const Edge& e : p.Edges()) {
      adj_[e.a] |= 1u << e.b;
      adj_[e.b] |= 1u << e.a;
    }
    order_.resize(k_);
    for (int i = 0; i < k_; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](int x, int y) {
      return __builtin_popcount(adj_[x]) > __builtin_popcount(adj_[y]);
    });
  }

  bool Holds(const std::vector<uint32_t>& host) {
    uint64_t key = 0;
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        key = (key << 1) | ((host[i] >> j) & 1u);
      }
    }
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    host_ = host;
    map_.assign(k_, -1);
    used_ = 0;
    bool result = Extend(0);
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool Extend(int idx) {
    if (idx == k_) return true;
    int pv = order_[idx];
    for (int c = 0; c < k_; ++c) {
      if (used_ & (1u << c)) continue;
      if (__builtin_popcount(host_[c]) < __builtin_popcount(adj_[pv])) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int pw = order_[j];
        if ((adj_[pv] >> pw) & 1u) ok = (host_[c] >> map_[pw]) & 1u;
      }
      if (!ok) continue;
      used_ |= 1u << c;
      map_[pv] = c;
      if (Extend(idx + 1)) return true;
      used_ &= ~(1u << c);
    }
    return false;
  }

  int k_ = 0;
  std::vector<uint32_t> adj_;
  std::vector<int> order_;
  std::vector<uint32_t> host_;
  std::vector<int> map_;
  uint32_t used_ = 0;
  std::unordered_map<uint64_t, bool> memo_;
};

// Branches over assignments of host vertices to k branch sets (or deletion),
// opening branch sets in order to break label symmetry.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& host, const Graph& pattern)
      : test_(pattern), k_(static_cast<int>(pattern.NumVertices())) {
    Graph g = Normalized(host);
    n_ = static_cast<int>(g.NumVertices());
    adj_.assign(n_, 0);
    for (const Edge& e : g.Edges()) {
      adj_[e.a] |= 1u << e.b;
      adj_[e.b] |= 1u << e.a;
    }
    order_.resize(n_);
    for (int i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return __builtin_popcount(adj_[x]) > __builtin_popcount(adj_[y]);
    });
    block_.assign(k_, 0);
    pattern_edges_ = static_cast<int>(pattern.NumEdges());
  }

  bool Run() { return Assign(0, 0); }

 private:
  bool Assign(int idx, int opened) {
    if (n_ - idx < k_ - opened) return false;
    if (idx == n_) return Leaf();
    int v = order_[idx];
    // Try joining existing blocks first: fewer deletions reach dense quotients.
    for (int b = 0; b < opened; ++b) {
      block_[b] |= 1u << v;
      if (Assign(idx + 1, opened)) return true;
      block_[b] &= ~(1u << v);
    }
    if (opened < k_) {
      block_[opened] |= 1u << v;
      if (Assign(idx + 1, opened + 1)) return true;
      block_[opened] &= ~(1u << v);
    }
    return Assign(idx + 1, opened);
  }

  bool Connected(uint32_t set) const {
    uint32_t seen = set & (~set + 1);
    uint32_t frontier = seen;
    while (frontier) {
      int x = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      uint32_t next = adj_[x] & set & ~seen;
      seen |= next;
      frontier |= next;
    }
    return seen == set;
  }

  bool Leaf() {
    for (int b = 0; b < k_; ++b) {
      if (!Connected(block_[b])) return false;
    }
    std::vector<uint32_t> quotient(k_, 0);
    int edges = 0;
    for (int b = 0; b < k_; ++b) {
      uint32_t reach = 0;
      for (uint32_t s = block_[b]; s; s &= s - 1) reach |= adj_[__builtin_ctz(s)];
      for (int c = b + 1; c < k_; ++c) {
        if (reach & block_[c]) {
          quotient[b] |= 1u << c;
          quotient[c] |= 1u << b;
          ++edges;
        }
      }
    }
    if (edges < pattern_edges_) return false;
    return test_.Holds(quotient);
  }

  SpanningSubgraphTest test_;
  int k_;
  int n_ = 0;
  std::vector<uint32_t> adj_;
  std::vector<int> order_;
  std::vector<uint32_t> block_;
  int pattern_edges_ = 0;
};

}  // namespace

bool ContainsMinor(const Graph& g, const Graph& h, const MinorOptions& options) {
  if (h.NumVertices() == 0) return true;
  if (h.NumVertices() > 31) {
    throw Error(ErrorCode::kSizeLimit, "pattern graph too large");
  }
  Graph host = Reduce(g, MinDegree(h));
  if (host.NumVertices() < h.NumVertices() || host.NumEdges() < h.NumEdges()) {
    return false;
  }
  if (static_cast<int>(host.NumVertices()) > options.max_host_vertices) {
    throw Error(ErrorCode::kSizeLimit,
                "minor search host has " + std::to_string(host.NumVertices()) +
                    " vertices after reduction; cap is " +
                    std::to_string(options.max_host_vertices));
  }
  return PartitionSearch(host, h).Run();
}

}  // namespace pathadd
