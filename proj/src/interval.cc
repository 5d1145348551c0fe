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
#include <string>

#include "pathadd/error.h"
#include "pathadd/visibility.h"

namespace pathadd {

namespace {

bool Meet(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace

Graph IntersectionGraph(const IntervalRepresentation& rep) {
  Graph g;
  for (const auto& [v, iv] : rep.intervals) g.AddVertex(v);
  for (auto a = rep.intervals.begin(); a != rep.intervals.end(); ++a) {
    for (auto b = std::next(a); b != rep.intervals.end(); ++b) {
      if (Meet(a->second, b->second)) g.AddEdge(a->first, b->first);
    }
  }
  return g;
}

ValidationReport CheckInterval(const IntervalRepresentation& rep, const Graph& g) {
  for (const auto& [v, iv] : rep.intervals) {
    if (!(iv.lo < iv.hi)) {
      throw Error(ErrorCode::kMalformedRepresentation,
                  "interval " + std::to_string(v) + " is empty");
    }
    if (!g.HasVertex(v)) {
      throw Error(ErrorCode::kCoverage, "interval " + std::to_string(v) + " is not a vertex");
    }
  }
  for (VertexId v : g.Vertices()) {
    if (!rep.intervals.count(v)) {
      throw Error(ErrorCode::kCoverage, "vertex " + std::to_string(v) + " has no interval");
    }
  }
  ValidationReport report;
  Graph want = IntersectionGraph(rep);
  for (const Edge& e : g.Edges()) {
    if (!want.HasEdge(e)) report.Add({{e}, -1, "edge without overlap"});
  }
  for (const Edge& e : want.Edges()) {
    if (!g.HasEdge(e)) report.Add({{e}, -1, "overlap without edge"});
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

IntervalPathResult AddPathInterval(const IntervalRepresentation& rep, const Graph& g,
                                   VertexId u, VertexId v, int t) {
  if (!rep.intervals.count(u) || !rep.intervals.count(v)) {
    throw Error(ErrorCode::kUnknownVertex, "path endpoints need intervals");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  int n = static_cast<int>(g.NumVertices());
  if (t < std::max(n - 2, 1)) {
    throw Error(ErrorCode::kPrecondition, "t = " + std::to_string(t) + " is too small");
  }
  if (!CheckInterval(rep, g).verdict) {
    throw Error(ErrorCode::kPrecondition, "input is not an interval representation");
  }
  const Interval& iu = rep.intervals.at(u);
  const Interval& iv = rep.intervals.at(v);
  Rational start = (iu.lo + iu.hi) / 2;
  Rational end = (iv.lo + iv.hi) / 2;
  Rational step = (end - start) / t;
  // Consecutive chain intervals share [x_i - gap, x_i + gap]; others are
  // separated because the gap is a quarter step.
  Rational gap = step == 0 ? Rational((iu.hi - iu.lo) / 4) : Rational(abs(step) / 4);
  IntervalPathResult result;
  result.rep = rep;
  std::vector<VertexId> ids = FreshIds(g, t);
  for (int i = 1; i <= t; ++i) {
    Rational a = start + step * (i - 1);
    Rational b = start + step * i;
    result.rep.intervals[ids[i - 1]] = {std::min(a, b) - gap, std::max(a, b) + gap};
  }
  result.spec = PathAdditionSpec::ForPath(u, v, ids);
  std::set<Edge> path(result.spec.path_edges.begin(), result.spec.path_edges.end());
  std::set<VertexId> fresh(ids.begin(), ids.end());
  for (const Edge& e : IntersectionGraph(result.rep).Edges()) {
    if ((fresh.count(e.a) || fresh.count(e.b)) && !path.count(e)) {
      result.spec.supplementary.insert(e);
    }
  }
  result.graph = ApplyPathAddition(g, result.spec);
  return result;
}

}  // namespace pathadd
