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

#include "pathadd/random_instances.h"

#include <algorithm>
#include <array>

#include "pathadd/error.h"

namespace pathadd {

namespace {

using Triangle = std::array<VertexId, 3>;

// Triangular faces of a triangulated straight-line drawing (outer face
// excluded), vertices sorted.
std::vector<Triangle> InnerTriangles(const GeometricEmbedding& emb) {
  std::vector<Triangle> out;
  const Graph& g = emb.graph;
  for (const Edge& e : g.Edges()) {
    for (VertexId c : g.Neighbors(e.a)) {
      if (c <= e.b || !g.HasEdge(e.b, c)) continue;
      // A triangle is a face iff no vertex lies strictly inside it.
      const Point& pa = emb.coords.at(e.a);
      const Point& pb = emb.coords.at(e.b);
      const Point& pc = emb.coords.at(c);
      int o = Orientation(pa, pb, pc);
      bool empty = true;
      for (VertexId w : g.Vertices()) {
        if (w == e.a || w == e.b || w == c) continue;
        const Point& pw = emb.coords.at(w);
        if (Orientation(pa, pb, pw) == o && Orientation(pb, pc, pw) == o &&
            Orientation(pc, pa, pw) == o) {
          empty = false;
          break;
        }
      }
      if (empty) out.push_back({e.a, e.b, c});
    }
  }
  return out;
}

}  // namespace

GeometricEmbedding RandomStackedTriangulation(int n, Rng& rng) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "triangulation needs n >= 3");
  GeometricEmbedding emb;
  emb.graph = CompleteGraph(3);
  emb.coords[0] = MakePoint(0L, 0L);
  emb.coords[1] = MakePoint(1024L, 0L);
  emb.coords[2] = MakePoint(512L, 887L);
  std::vector<Triangle> faces = {{0, 1, 2}};
  for (VertexId x = 3; x < n; ++x) {
    std::size_t pick = static_cast<std::size_t>(rng.Uniform(0, static_cast<int>(faces.size()) - 1));
    Triangle f = faces[pick];
    int wa = rng.Uniform(1, 8), wb = rng.Uniform(1, 8), wc = rng.Uniform(1, 8);
    Rational total = wa + wb + wc;
    Point p = (Rational(wa) / total) * emb.coords[f[0]] +
              (Rational(wb) / total) * emb.coords[f[1]] +
              (Rational(wc) / total) * emb.coords[f[2]];
    emb.graph.AddVertex(x);
    emb.coords[x] = p;
    for (VertexId y : f) emb.graph.AddEdge(x, y);
    faces.erase(faces.begin() + static_cast<long>(pick));
    faces.push_back({f[0], f[1], x});
    faces.push_back({f[1], f[2], x});
    faces.push_back({f[0], f[2], x});
  }
  return emb;
}

GeometricEmbedding AddRandomCrossings(const GeometricEmbedding& triangulation,
                                      int count, Rng& rng) {
  GeometricEmbedding emb = triangulation;
  std::vector<Triangle> faces = InnerTriangles(emb);
  std::vector<bool> used(faces.size(), false);
  struct Candidate {
    std::size_t f1, f2;
    VertexId c, d;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      std::vector<VertexId> common;
      std::set_intersection(faces[i].begin(), faces[i].end(), faces[j].begin(),
                            faces[j].end(), std::back_inserter(common));
      if (common.size() != 2) continue;
      VertexId c = -1, d = -1;
      for (VertexId x : faces[i]) if (x != common[0] && x != common[1]) c = x;
      for (VertexId x : faces[j]) if (x != common[0] && x != common[1]) d = x;
      if (emb.graph.HasEdge(c, d)) continue;
      // Convex quadrilateral: the shared edge separates c and d, and c-d
      // separates the shared endpoints.
      const Point& pa = emb.coords.at(common[0]);
      const Point& pb = emb.coords.at(common[1]);
      const Point& pc = emb.coords.at(c);
      const Point& pd = emb.coords.at(d);
      if (Orientation(pc, pd, pa) * Orientation(pc, pd, pb) >= 0) continue;
      candidates.push_back({i, j, c, d});
    }
  }
  for (int added = 0; added < count && !candidates.empty();) {
    std::size_t pick = static_cast<std::size_t>(rng.Uniform(0, static_cast<int>(candidates.size()) - 1));
    Candidate cand = candidates[pick];
    candidates.erase(candidates.begin() + static_cast<long>(pick));
    if (used[cand.f1] || used[cand.f2] || emb.graph.HasEdge(cand.c, cand.d)) continue;
    used[cand.f1] = used[cand.f2] = true;
    emb.graph.AddEdge(cand.c, cand.d);
    ++added;
  }
  return emb;
}

}  // namespace pathadd

namespace pathadd {

BarRepresentation RandomBarRepresentation(int n, Rng& rng) {
  BarRepresentation rep;
  int rows = std::max(2, n / 2 + 1);
  int width = 3 * n;
  for (VertexId v = 0; v < n;) {
    int y = rng.Uniform(0, rows - 1);
    int lo = rng.Uniform(0, width - 2);
    int hi = std::min(width, lo + rng.Uniform(2, std::max(2, n)));
    Bar bar{Rational(y), Rational(lo), Rational(hi)};
    bool clash = false;
    for (const auto& [w, other] : rep.bars) {
      if (other.y == bar.y && !(other.x_hi < bar.x_lo || bar.x_hi < other.x_lo)) {
        clash = true;
      }
    }
    if (!clash) rep.bars[v++] = bar;
  }
  std::set<Rational> xs;
  for (const auto& [v, bar] : rep.bars) {
    xs.insert(bar.x_lo);
    xs.insert(bar.x_hi);
  }
  std::set<Edge> visible = EpsilonVisibilities(rep, 1);
  int slot = 0;
  int slots = static_cast<int>(visible.size()) + 1;
  for (const Edge& e : visible) {
    ++slot;
    // Any x inside a window where the pair sees through at most one bar.
    for (auto it = xs.begin(); std::next(it) != xs.end(); ++it) {
      Rational lo = *it, hi = *std::next(it);
      Rational mid = (lo + hi) / 2;
      const Bar& a = rep.bars.at(e.a);
      const Bar& b = rep.bars.at(e.b);
      if (!(a.x_lo < mid && mid < a.x_hi && b.x_lo < mid && mid < b.x_hi)) continue;
      Sight s{e.a, e.b, lo + (hi - lo) * slot / slots};
      if (TraversedBars(rep, s).size() <= 1) {
        rep.sights.push_back(s);
        break;
      }
    }
  }
  return rep;
}

AlignedBarRepresentation RandomAlignedRepresentation(int n, Rng& rng) {
  AlignedBarRepresentation rep;
  for (VertexId v = 0; v < n; ++v) {
    rep.bars[v] = {Rational(v), Rational(rng.Uniform(1, n))};
  }
  int pair = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      Rational top = std::min(rep.bars[a].height, rep.bars[b].height);
      AlignedSight s{a, b, top - Rational(1) / (++pair + 2)};
      if (TraversedBars(rep, s).size() <= 1) rep.sights.push_back(s);
    }
  }
  return rep;
}

IntervalRepresentation RandomIntervalRepresentation(int n, Rng& rng) {
  IntervalRepresentation rep;
  for (VertexId v = 0; v < n; ++v) {
    int lo = rng.Uniform(0, 2 * n);
    rep.intervals[v] = {Rational(lo), Rational(lo + rng.Uniform(1, n / 2 + 1))};
  }
  return rep;
}

}  // namespace pathadd
