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

#include "pathadd/embedding.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>
#include <utility>

#include "pathadd/error.h"
#include "pathadd/geometry.h"

namespace pathadd {

namespace {

std::string EdgeText(const Edge& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

std::string PointText(const Point& p) {
  return "(" + FormatRational(p.x) + "," + FormatRational(p.y) + ")";
}

[[noreturn]] void Degenerate(const std::string& what) {
  throw Error(ErrorCode::kDegenerateDrawing, what);
}

struct Segment {
  Edge edge;
  int index;
  Point from;
  Point to;
};

std::vector<Segment> AllSegments(const GeometricEmbedding& emb) {
  std::vector<Segment> out;
  for (const Edge& e : emb.graph.Edges()) {
    std::vector<Point> line = emb.Polyline(e);
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      out.push_back({e, static_cast<int>(i), line[i], line[i + 1]});
    }
  }
  return out;
}

// Validates and returns crossings in canonical order.
std::vector<Crossing> CheckAndCollect(const GeometricEmbedding& emb) {
  const Graph& g = emb.graph;
  std::map<Point, VertexId> occupied;
  for (VertexId v : g.Vertices()) {
    auto it = emb.coords.find(v);
    if (it == emb.coords.end()) {
      Degenerate("vertex " + std::to_string(v) + " has no coordinates");
    }
    if (!occupied.emplace(it->second, v).second) {
      Degenerate("vertices " + std::to_string(occupied[it->second]) + " and " +
                 std::to_string(v) + " share point " + PointText(it->second));
    }
  }
  for (const auto& [e, pts] : emb.bends) {
    if (!g.HasEdge(e)) Degenerate("bends listed for non-edge " + EdgeText(e));
    for (const Point& p : pts) {
      if (!occupied.emplace(p, -1).second) {
        Degenerate("bend of " + EdgeText(e) + " coincides with another point " +
                   PointText(p));
      }
    }
  }

  std::vector<Segment> segments = AllSegments(emb);
  // Isolated vertices (or any vertex) on a foreign segment.
  for (VertexId v : g.Vertices()) {
    const Point& p = emb.coords.at(v);
    for (const Segment& s : segments) {
      if (s.edge.Has(v)) continue;
      if (OnSegmentInterior(p, s.from, s.to)) {
        Degenerate("vertex " + std::to_string(v) + " lies on edge " +
                   EdgeText(s.edge));
      }
    }
  }

  std::vector<Crossing> crossings;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const Segment& s = segments[i];
      const Segment& t = segments[j];
      SegmentIntersection hit = IntersectSegments(s.from, s.to, t.from, t.to);
      if (hit.relation == SegmentRelation::kDisjoint) continue;
      if (hit.relation == SegmentRelation::kOverlap) {
        Degenerate("edges " + EdgeText(s.edge) + " and " + EdgeText(t.edge) +
                   " overlap");
      }
      if (s.edge == t.edge) {
        if (std::abs(s.index - t.index) == 1 &&
            hit.relation == SegmentRelation::kTouching) {
          continue;
        }
        Degenerate("polyline of " + EdgeText(s.edge) + " self-intersects");
      }
      if (s.edge.SharesEndpoint(t.edge)) {
        VertexId shared = s.edge.Has(t.edge.a) ? t.edge.a : t.edge.b;
        if (hit.relation == SegmentRelation::kTouching &&
            hit.point == emb.coords.at(shared)) {
          continue;
        }
        Degenerate("adjacent edges " + EdgeText(s.edge) + " and " +
                   EdgeText(t.edge) + " meet at " + PointText(hit.point));
      }
      if (hit.relation == SegmentRelation::kTouching) {
        Degenerate("edges " + EdgeText(s.edge) + " and " + EdgeText(t.edge) +
                   " touch at " + PointText(hit.point));
      }
      Crossing c;
      bool s_first = s.edge < t.edge;
      c.edge_a = s_first ? s.edge : t.edge;
      c.edge_b = s_first ? t.edge : s.edge;
      c.segment_a = s_first ? s.index : t.index;
      c.segment_b = s_first ? t.index : s.index;
      c.point = hit.point;
      crossings.push_back(c);
    }
  }
  std::sort(crossings.begin(), crossings.end());
  std::map<Point, std::set<Edge>> at_point;
  for (const Crossing& c : crossings) {
    auto& edges = at_point[c.point];
    edges.insert(c.edge_a);
    edges.insert(c.edge_b);
    if (edges.size() > 2) {
      Degenerate("three or more edges cross at " + PointText(c.point));
    }
  }
  return crossings;
}

}  // namespace

std::vector<Point> GeometricEmbedding::Polyline(const Edge& e) const {
  std::vector<Point> line;
  line.push_back(coords.at(e.a));
  auto it = bends.find(e);
  if (it != bends.end()) {
    line.insert(line.end(), it->second.begin(), it->second.end());
  }
  line.push_back(coords.at(e.b));
  return line;
}

Point GeometricEmbedding::DirectionFrom(VertexId v, const Edge& e) const {
  std::vector<Point> line = Polyline(e);
  if (v == e.a) return line[1] - line[0];
  return line[line.size() - 2] - line.back();
}

void ValidateEmbedding(const GeometricEmbedding& emb) { CheckAndCollect(emb); }

std::vector<Crossing> ComputeCrossings(const GeometricEmbedding& emb) {
  return CheckAndCollect(emb);
}

std::vector<VertexId> SortCounterclockwise(
    const Point& center, const std::vector<std::pair<VertexId, Point>>& around) {
  std::vector<std::pair<VertexId, Point>> items = around;
  std::sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
    return AngleLess(x.second - center, y.second - center);
  });
  std::vector<VertexId> out;
  for (const auto& [v, _] : items) out.push_back(v);
  return out;
}

Planarization Planarize(const GeometricEmbedding& emb) {
  std::vector<Crossing> crossings = CheckAndCollect(emb);
  Planarization pl;
  for (VertexId v : emb.graph.Vertices()) {
    pl.graph.AddVertex(v);
    pl.coords[v] = emb.coords.at(v);
  }
  // Points along each segment: (segment index, parameter) -> planar vertex.
  std::map<Edge, std::vector<std::tuple<int, Rational, VertexId>>> along;
  for (const Crossing& c : crossings) {
    VertexId d = pl.graph.AddFreshVertex();
    pl.coords[d] = c.point;
    pl.dummies.insert(d);
    pl.origin[d] = c;
    for (const auto& [edge, seg] :
         {std::pair{c.edge_a, c.segment_a}, std::pair{c.edge_b, c.segment_b}}) {
      std::vector<Point> line = emb.Polyline(edge);
      along[edge].emplace_back(
          seg, SegmentParameter(c.point, line[seg], line[seg + 1]), d);
    }
  }
  for (const auto& [edge, pts] : emb.bends) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      VertexId b = pl.graph.AddFreshVertex();
      pl.coords[b] = pts[i];
      pl.bend_vertices.insert(b);
      // A bend sits at the end of segment i.
      along[edge].emplace_back(static_cast<int>(i), Rational(1), b);
    }
  }
  for (const Edge& e : emb.graph.Edges()) {
    auto& pts = along[e];
    std::sort(pts.begin(), pts.end());
    VertexId prev = e.a;
    auto link = [&](VertexId next) {
      pl.graph.AddEdge(prev, next);
      pl.fragment_origin[Edge(prev, next)] = e;
      prev = next;
    };
    for (const auto& [seg, t, v] : pts) link(v);
    link(e.b);
  }
  for (VertexId v : pl.graph.Vertices()) {
    std::vector<std::pair<VertexId, Point>> around;
    for (VertexId w : pl.graph.Neighbors(v)) around.emplace_back(w, pl.coords[w]);
    pl.rotation[v] = SortCounterclockwise(pl.coords[v], around);
  }
  return pl;
}

std::vector<Edge> RotationSystemOf(const Planarization& pl, VertexId v) {
  auto it = pl.rotation.find(v);
  if (it == pl.rotation.end()) {
    throw Error(ErrorCode::kUnknownVertex,
                "vertex " + std::to_string(v) + " not in planarization");
  }
  const std::vector<VertexId>& ring = it->second;
  std::vector<Edge> out;
  if (ring.empty()) return out;
  auto start = std::min_element(ring.begin(), ring.end()) - ring.begin();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    out.emplace_back(v, ring[(start + i) % ring.size()]);
  }
  return out;
}

std::vector<std::vector<VertexId>> TraceFaces(
    const std::map<VertexId, std::vector<VertexId>>& rotation) {
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<std::vector<VertexId>> faces;
  for (const auto& [v, ring] : rotation) {
    std::vector<VertexId> sorted = ring;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId w : sorted) {
      if (used.count({v, w})) continue;
      std::vector<VertexId> walk;
      VertexId from = v, to = w;
      while (used.insert({from, to}).second) {
        walk.push_back(from);
        const std::vector<VertexId>& around = rotation.at(to);
        auto pos = std::find(around.begin(), around.end(), from) - around.begin();
        std::size_t deg = around.size();
        VertexId next = around[(pos + deg - 1) % deg];
        from = to;
        to = next;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

std::vector<std::vector<VertexId>> Faces(const Planarization& pl) {
  if (!IsConnected(pl.graph)) {
    throw Error(ErrorCode::kDisconnected,
                "face tracing requires a connected planarization");
  }
  if (pl.graph.NumEdges() == 0) return {{pl.graph.Vertices().front()}};
  return TraceFaces(pl.rotation);
}

}  // namespace pathadd
