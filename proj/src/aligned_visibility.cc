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

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedRepresentation, what);
}

void CheckAlignedWellFormed(const AlignedBarRepresentation& rep) {
  std::set<Rational> columns;
  for (const auto& [v, bar] : rep.bars) {
    if (bar.height <= 0) Malformed("bar " + std::to_string(v) + " has no height");
    if (!columns.insert(bar.x).second) Malformed("two bars share a column");
  }
  for (const AlignedSight& s : rep.sights) {
    auto a = rep.bars.find(s.a);
    auto b = rep.bars.find(s.b);
    if (a == rep.bars.end() || b == rep.bars.end() || s.a == s.b) {
      Malformed("sight has bad endpoints");
    }
    if (s.y <= 0 || s.y >= a->second.height || s.y >= b->second.height) {
      Malformed("sight " + std::to_string(s.a) + "-" + std::to_string(s.b) +
                " is not below both bar tops");
    }
  }
  for (std::size_t i = 0; i < rep.sights.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.sights.size(); ++j) {
      const AlignedSight& s = rep.sights[i];
      const AlignedSight& r = rep.sights[j];
      if (s.y != r.y) continue;
      auto span = [&](const AlignedSight& x) {
        Rational p = rep.bars.at(x.a).x, q = rep.bars.at(x.b).x;
        return std::pair{std::min(p, q), std::max(p, q)};
      };
      auto [lo1, hi1] = span(s);
      auto [lo2, hi2] = span(r);
      if (!(hi1 < lo2 || hi2 < lo1)) Malformed("sights overlap at one height");
    }
  }
}

}  // namespace

std::vector<VertexId> TraversedBars(const AlignedBarRepresentation& rep,
                                    const AlignedSight& s) {
  Rational p = rep.bars.at(s.a).x, q = rep.bars.at(s.b).x;
  Rational lo = std::min(p, q), hi = std::max(p, q);
  std::vector<std::pair<Rational, VertexId>> hit;
  for (const auto& [w, bar] : rep.bars) {
    if (lo < bar.x && bar.x < hi && bar.height >= s.y) hit.emplace_back(bar.x, w);
  }
  std::sort(hit.begin(), hit.end());
  std::vector<VertexId> out;
  for (const auto& [x, w] : hit) out.push_back(w);
  return out;
}

ValidationReport CheckAlignedVisibility(const AlignedBarRepresentation& rep,
                                        const Graph& g) {
  CheckAlignedWellFormed(rep);
  for (VertexId v : g.Vertices()) {
    if (!rep.bars.count(v)) Malformed("vertex " + std::to_string(v) + " has no bar");
  }
  for (const auto& [v, bar] : rep.bars) {
    if (!g.HasVertex(v)) Malformed("bar " + std::to_string(v) + " is not a vertex");
  }
  ValidationReport report;
  std::set<Edge> realized;
  for (const AlignedSight& s : rep.sights) {
    Edge e(s.a, s.b);
    realized.insert(e);
    if (!g.HasEdge(e)) report.Add({{e}, -1, "sight not in graph"});
    if (TraversedBars(rep, s).size() > 1) {
      report.Add({{e}, -1, "too many traversals at y=" + FormatRational(s.y)});
    }
  }
  for (const Edge& e : g.Edges()) {
    if (!realized.count(e)) report.Add({{e}, -1, "unrealized edge"});
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

AlignedPathResult AddPathAligned(const AlignedBarRepresentation& rep, const Graph& g,
                                 VertexId u, VertexId v, int t) {
  if (!rep.bars.count(u) || !rep.bars.count(v)) {
    throw Error(ErrorCode::kUnknownVertex, "path endpoints need bars");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  int n = static_cast<int>(g.NumVertices());
  if (t < std::max(n - 2, 1)) {
    throw Error(ErrorCode::kPrecondition, "t = " + std::to_string(t) + " is too small");
  }
  if (!CheckAlignedVisibility(rep, g).verdict) {
    throw Error(ErrorCode::kPrecondition, "input is not aligned bar 1-visible");
  }
  bool u_left = rep.bars.at(u).x < rep.bars.at(v).x;
  VertexId left = u_left ? u : v;
  VertexId right = u_left ? v : u;
  Rational x_left = rep.bars.at(left).x, x_right = rep.bars.at(right).x;
  // Columns strictly between the endpoints, left to right, with both ends.
  std::vector<Rational> cols = {x_left};
  for (const auto& [w, bar] : rep.bars) {
    if (x_left < bar.x && bar.x < x_right) cols.push_back(bar.x);
  }
  std::sort(cols.begin() + 1, cols.end());
  cols.push_back(x_right);
  int m = static_cast<int>(cols.size()) - 2;
  // New bars per gap; gap i lies between cols[i] and cols[i+1].
  std::vector<int> per_gap(m + 1, 0);
  int demand = 0;
  if (m >= 2) {
    for (int i = 1; i < m; ++i) ++per_gap[i];
    demand = m - 1;
  } else {
    ++per_gap[0];
    demand = 1;
  }
  if (demand > t) {
    throw Error(ErrorCode::kCapacity, "aligned path needs " + std::to_string(demand) +
                                          " internal vertices, t = " + std::to_string(t));
  }
  // Surplus bars go into the gap next to v.
  per_gap[u_left ? m : 0] += t - demand;

  Rational low = -1;
  for (const auto& [w, bar] : rep.bars) {
    if (low < 0 || bar.height < low) low = bar.height;
  }
  for (const AlignedSight& s : rep.sights) low = std::min(low, s.y);
  Rational short_height = low / 2;

  std::vector<Rational> xs;  // left to right
  for (int i = 0; i <= m; ++i) {
    for (int j = 1; j <= per_gap[i]; ++j) {
      xs.push_back(cols[i] + (cols[i + 1] - cols[i]) * j / (per_gap[i] + 1));
    }
  }
  if (!u_left) std::reverse(xs.begin(), xs.end());

  AlignedPathResult result;
  result.rep = rep;
  std::vector<VertexId> ids = FreshIds(g, t);
  VertexId prev = u;
  for (int i = 0; i < t; ++i) {
    result.rep.bars[ids[i]] = {xs[i], short_height};
    result.rep.sights.push_back({prev, ids[i], short_height * (i + 1) / (t + 2)});
    prev = ids[i];
  }
  result.rep.sights.push_back({prev, v, short_height * (t + 1) / (t + 2)});
  result.spec = PathAdditionSpec::ForPath(u, v, ids);
  result.graph = ApplyPathAddition(g, result.spec);
  return result;
}

}  // namespace pathadd
