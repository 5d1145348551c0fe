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

#ifndef PATHADD_EMBEDDING_H_
#define PATHADD_EMBEDDING_H_

#include <map>
#include <set>
#include <vector>

#include "pathadd/graph.h"
#include "pathadd/rational.h"

namespace pathadd {

// A drawing with exact rational vertex coordinates. Edges are straight
// segments unless listed in `bends`, in which case they are polylines through
// the given interior points (ordered from edge.a to edge.b).
struct GeometricEmbedding {
  Graph graph;
  std::map<VertexId, Point> coords;
  std::map<Edge, std::vector<Point>> bends;

  // The polyline of `e` oriented from e.a to e.b.
  std::vector<Point> Polyline(const Edge& e) const;
  // First segment direction of edge `e` leaving vertex `v`.
  Point DirectionFrom(VertexId v, const Edge& e) const;
  bool IsStraightLine() const { return bends.empty(); }
};

// Interior intersection of two independent edges. `edge_a < edge_b`;
// `segment_a`/`segment_b` index the polyline segments that cross.
struct Crossing {
  Edge edge_a;
  Edge edge_b;
  Point point;
  int segment_a = 0;
  int segment_b = 0;

  friend bool operator<(const Crossing& x, const Crossing& y) {
    if (x.edge_a != y.edge_a) return x.edge_a < y.edge_a;
    if (x.edge_b != y.edge_b) return x.edge_b < y.edge_b;
    return x.point < y.point;
  }
  friend bool operator==(const Crossing& x, const Crossing& y) {
    return x.edge_a == y.edge_a && x.edge_b == y.edge_b && x.point == y.point;
  }
};

// Throws kDegenerateDrawing unless the drawing is in general position: distinct
// vertex points, no vertex or bend on a foreign edge, no crossing between
// adjacent edges, no overlaps and no three edges through one crossing point.
void ValidateEmbedding(const GeometricEmbedding& emb);

// All crossings, canonically sorted. Validates first.
std::vector<Crossing> ComputeCrossings(const GeometricEmbedding& emb);

// Planar graph of a drawing: a degree-4 dummy at every crossing and a degree-2
// vertex at every bend.
struct Planarization {
  Graph graph;
  std::map<VertexId, Point> coords;
  std::set<VertexId> dummies;
  std::set<VertexId> bend_vertices;
  std::map<VertexId, Crossing> origin;
  // Planar edge -> edge of the drawn graph it is a fragment of.
  std::map<Edge, Edge> fragment_origin;
  // Counterclockwise neighbour order around every vertex.
  std::map<VertexId, std::vector<VertexId>> rotation;

  bool IsOriginal(VertexId v) const {
    return !dummies.count(v) && !bend_vertices.count(v);
  }
};

Planarization Planarize(const GeometricEmbedding& emb);

// Counterclockwise cyclic order of the edges at `v`, starting at the smallest
// neighbour id.
std::vector<Edge> RotationSystemOf(const Planarization& pl, VertexId v);

// Counterclockwise neighbour order of `center` given coordinates.
std::vector<VertexId> SortCounterclockwise(
    const Point& center, const std::vector<std::pair<VertexId, Point>>& around);

// Face boundary walks traced with the next-edge-clockwise rule. Requires a
// connected planarization.
std::vector<std::vector<VertexId>> Faces(const Planarization& pl);

// Same walk on an arbitrary rotation system; each component contributes its
// own faces (the outer ones included).
std::vector<std::vector<VertexId>> TraceFaces(
    const std::map<VertexId, std::vector<VertexId>>& rotation);

}  // namespace pathadd

#endif  // PATHADD_EMBEDDING_H_
