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

#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "pathadd/graph.h"

namespace pathadd {

bool IsPlanar(const Graph& g) {
  // Euler bound: a simple planar graph on n >= 3 vertices has <= 3n - 6 edges.
  const auto n = g.NumVertices();
  if (n >= 3 && g.NumEdges() > 3 * n - 6) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  std::map<VertexId, int> index;
  for (VertexId v : g.Vertices()) {
    index.emplace(v, static_cast<int>(index.size()));
  }
  BoostGraph bg(n);
  for (const Edge& e : g.Edges()) boost::add_edge(index[e.a], index[e.b], bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace pathadd
