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

#ifndef PATHADD_COUNTEREXAMPLES_H_
#define PATHADD_COUNTEREXAMPLES_H_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathadd/embedding.h"
#include "pathadd/graph.h"
#include "pathadd/visibility.h"

namespace pathadd {

// Extended wheel on the cycle v_1..v_2k (ids 0..2k-1) with poles p = 2k
// (inside) and q = 2k+1 (outside), chords (v_i, v_i+2), and a 1-planar
// drawing. Two edges are polylines.
struct ExtendedWheel {
  Graph graph;
  GeometricEmbedding embedding;
  VertexId p = -1;
  VertexId q = -1;
  std::vector<VertexId> cycle;
};

ExtendedWheel MakeExtendedWheel(int k);

// K_{2,q}: u_1 = 0, u_2 = 1, v_i = i + 1.
Graph K2q(int q);

// K_{2,q} with the quadrangle (u_1, v_1, u_2, v_2) drawn as a diamond and
// every other v_i outside it.
GeometricEmbedding K2qAllOutside(int q);

// Dodecahedron plus the five diagonals of every pentagonal face.
Graph CrossedDodecahedron();

// Plain dodecahedron with its 12 faces (as vertex cycles).
Graph Dodecahedron();
std::vector<std::vector<VertexId>> DodecahedronFaces();

// Wiring of the K_7 blob construction on the 10-cycle skeleton. Skeleton
// vertices are 1..10.
struct BinucciConfig {
  // Skeleton pairs realized by a K_7 blob.
  std::vector<std::pair<int, int>> bold;
  std::vector<std::pair<int, int>> thin;
  // Removed skeleton edges, kept in the manifest as path targets.
  std::vector<std::pair<int, int>> removed;
  // Blob vertices (0..6) joined to the first and to the second skeleton
  // vertex of a bold pair.
  std::vector<int> attach_first;
  std::vector<int> attach_second;

  static BinucciConfig Default();
};

struct BinucciBlob {
  std::pair<int, int> pair;
  std::vector<VertexId> vertices;
};

struct BinucciGraph {
  Graph graph;
  // Skeleton vertex i (1..10) is graph vertex skeleton[i-1].
  std::vector<VertexId> skeleton;
  std::vector<BinucciBlob> blobs;
  std::vector<Edge> removed_targets;
};

BinucciGraph MakeBinucciGraph(const BinucciConfig& config);

// Bars A (top), B (bottom), C (left) and D, E (right) ring in the bar u;
// v sits above A. The side sights pass C and E, so the ring is a short
// cycle of the port planarization touching five bars.
struct BarRingWitness {
  BarRepresentation rep;
  Graph graph;
  VertexId u = -1;
  VertexId v = -1;
};

BarRingWitness MakeBarRingWitness();

// A cycle of a planarization whose removal leaves at least two components
// holding original vertices.
struct SeparatingCycle {
  std::vector<VertexId> cycle;
  std::vector<std::set<VertexId>> components;
  int original_hits = 0;
  int dummies = 0;
};

// Removes the cycle: an original vertex goes with its edges, a crossing
// dummy takes both crossing edges along. Isolated non-original vertices are
// dropped. Returns the remaining components.
std::vector<std::set<VertexId>> RemoveCycle(const Planarization& pl,
                                            const std::vector<VertexId>& cycle);

struct ScpOptions {
  int max_len = 12;
  // Give up beyond this many enumerated cycles.
  long max_cycles = 2000000;
  // When set, the cycle must avoid both sets and leave them in different
  // components.
  std::optional<std::pair<std::set<VertexId>, std::set<VertexId>>> separate;
};

// Shortest qualifying cycle; ties prefer fewer dummies, then the
// lexicographically smallest canonical vertex sequence.
std::optional<SeparatingCycle> ScpCheck(const Planarization& pl,
                                        const ScpOptions& options = {});

struct BudgetReport {
  int cycle_length = 0;
  int cap = 0;
  int budget = 0;
  int demand = 0;
  SeparatingCycle cycle;
};

// Crossing budget of a drawing with at most `cap` crossings per edge: a
// cycle of length c separating u from v admits c*cap traversals.
BudgetReport TraversalBudgetDemo(const GeometricEmbedding& emb, VertexId u,
                                 VertexId v, int cap, int max_len = 12);

// Bar (1,j)-visibility: c counts distinct bars on a cycle separating the
// bars of u and v in the port planarization, each passable j times.
BudgetReport TraversalBudgetDemo(const BarRepresentation& rep, VertexId u,
                                 VertexId v, int j, int max_len = 16);

}  // namespace pathadd

#endif  // PATHADD_COUNTEREXAMPLES_H_
