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

#ifndef PATHADD_VISIBILITY_H_
#define PATHADD_VISIBILITY_H_

#include <map>
#include <optional>
#include <vector>

#include "pathadd/embedding.h"
#include "pathadd/graph.h"
#include "pathadd/path_addition.h"
#include "pathadd/rational.h"
#include "pathadd/validators.h"

namespace pathadd {

// Horizontal bar at height y spanning [x_lo, x_hi].
struct Bar {
  Rational y;
  Rational x_lo;
  Rational x_hi;
};

// Vertical line of sight at x between the bars of a and b.
struct Sight {
  VertexId a = -1;
  VertexId b = -1;
  Rational x;

  friend bool operator<(const Sight& s, const Sight& t) {
    if (s.x != t.x) return s.x < t.x;
    if (s.a != t.a) return s.a < t.a;
    return s.b < t.b;
  }
};

struct BarRepresentation {
  std::map<VertexId, Bar> bars;
  std::vector<Sight> sights;
};

// Throws kMalformedRepresentation on empty bars, overlapping bars in a row,
// sights outside their bars, sights within one row, or overlapping sights.
void CheckWellFormed(const BarRepresentation& rep);

// Foreign bars met by the closed vertical segment of a sight, bottom to top.
std::vector<VertexId> TraversedBars(const BarRepresentation& rep, const Sight& s);

// Graph whose edges are the sight endpoints.
Graph GraphOfSights(const BarRepresentation& rep);

// Pairs of bars that see each other through at most k bars along some
// x-interval of positive width.
std::set<Edge> EpsilonVisibilities(const BarRepresentation& rep, int k);

// Witness notes: "unrealized edge", "too many traversals", "bar passed too
// often", "sight not in graph", "visibility not in graph".
ValidationReport CheckBarVisibility(const BarRepresentation& rep, const Graph& g,
                                    int k, std::optional<int> j = std::nullopt,
                                    bool strong = false);

// Bars become thin rectangles; every point where a sight meets a bar boundary
// is a port vertex. Faces inside a bar are closed.
struct VisibilityPlanarization {
  Planarization planar;
  // Planar vertex -> bar it lies on.
  std::map<VertexId, VertexId> bar_of;
  std::vector<std::vector<VertexId>> faces;
  std::vector<bool> closed;
  int components = 0;
  // Faces with the outer faces of all components identified.
  int NumFaces() const { return static_cast<int>(faces.size()) - components + 1; }
};

VisibilityPlanarization PlanarizeVisibility(const BarRepresentation& rep);

struct BarPathResult {
  BarRepresentation rep;
  Graph graph;
  PathAdditionSpec spec;
  bool top = true;
};

// New u-v path through fresh bars. With `strong`, F holds every new
// 1-visibility and each is realized by a sight.
BarPathResult AddPathBar1(const BarRepresentation& rep, const Graph& g, VertexId u,
                          VertexId v, int t, bool strong = false);

// Vertical bar standing on the x-axis.
struct AlignedBar {
  Rational x;
  Rational height;
};

// Horizontal sight at height y between the bars of a and b.
struct AlignedSight {
  VertexId a = -1;
  VertexId b = -1;
  Rational y;
};

struct AlignedBarRepresentation {
  std::map<VertexId, AlignedBar> bars;
  std::vector<AlignedSight> sights;
};

std::vector<VertexId> TraversedBars(const AlignedBarRepresentation& rep,
                                    const AlignedSight& s);

// Weak aligned bar 1-visibility: each edge realized, each sight crosses at
// most one bar, sights only between adjacent vertices.
ValidationReport CheckAlignedVisibility(const AlignedBarRepresentation& rep,
                                        const Graph& g);

struct AlignedPathResult {
  AlignedBarRepresentation rep;
  Graph graph;
  PathAdditionSpec spec;
};

AlignedPathResult AddPathAligned(const AlignedBarRepresentation& rep, const Graph& g,
                                 VertexId u, VertexId v, int t);

// Closed interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;
};

struct IntervalRepresentation {
  std::map<VertexId, Interval> intervals;
};

Graph IntersectionGraph(const IntervalRepresentation& rep);

// Strong semantics: edges exactly the intersecting pairs.
ValidationReport CheckInterval(const IntervalRepresentation& rep, const Graph& g);

struct IntervalPathResult {
  IntervalRepresentation rep;
  Graph graph;
  PathAdditionSpec spec;
};

IntervalPathResult AddPathInterval(const IntervalRepresentation& rep, const Graph& g,
                                   VertexId u, VertexId v, int t);

}  // namespace pathadd

#endif  // PATHADD_VISIBILITY_H_
