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
#include <functional>
#include <map>

#include "pathadd/counterexamples.h"
#include "pathadd/error.h"

namespace pathadd {
namespace {

// Even-odd ray test; the point must not lie on the polygon.
bool Inside(const Point& p, const std::vector<Point>& poly) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) == (b.y > p.y)) continue;
    Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (p.x < x) inside = !inside;
  }
  return inside;
}

bool Qualifies(const std::vector<std::set<VertexId>>& comps, const Planarization& pl,
               const ScpOptions& options, const std::vector<VertexId>& cycle,
               int* hits) {
  *hits = 0;
  for (const auto& comp : comps) {
    if (std::any_of(comp.begin(), comp.end(),
                    [&](VertexId x) { return pl.IsOriginal(x); })) {
      ++*hits;
    }
  }
  if (comps.size() < 2 || *hits < 2) return false;
  if (!options.separate) return true;
  const auto& [left, right] = *options.separate;
  for (const auto& comp : comps) {
    bool has_left = std::any_of(left.begin(), left.end(),
                                [&](VertexId x) { return comp.count(x) > 0; });
    bool has_right = std::any_of(right.begin(), right.end(),
                                 [&](VertexId x) { return comp.count(x) > 0; });
    if (has_left && has_right) return false;
  }
  // Removal alone can cut a vertex off without enclosing it; the cycle must
  // also separate the two sides in the plane.
  if (left.empty() || right.empty() || pl.coords.empty()) return true;
  std::vector<Point> poly;
  for (VertexId x : cycle) poly.push_back(pl.coords.at(x));
  return Inside(pl.coords.at(*left.begin()), poly) !=
         Inside(pl.coords.at(*right.begin()), poly);
}

}  // namespace

std::vector<std::set<VertexId>> RemoveCycle(const Planarization& pl,
                                            const std::vector<VertexId>& cycle) {
  std::set<Edge> dropped;
  for (VertexId x : cycle) {
    auto it = pl.origin.find(x);
    if (it == pl.origin.end()) continue;
    dropped.insert(it->second.edge_a);
    dropped.insert(it->second.edge_b);
  }
  Graph rest = pl.graph;
  for (const Edge& e : pl.graph.Edges()) {
    auto it = pl.fragment_origin.find(e);
    if (it != pl.fragment_origin.end() && dropped.count(it->second)) rest.RemoveEdge(e);
  }
  for (VertexId x : cycle) {
    if (rest.HasVertex(x)) rest.RemoveVertex(x);
  }
  for (VertexId x : rest.Vertices()) {
    if (!pl.IsOriginal(x) && rest.Degree(x) == 0) rest.RemoveVertex(x);
  }
  return ConnectedComponents(rest);
}

std::optional<SeparatingCycle> ScpCheck(const Planarization& pl,
                                        const ScpOptions& options) {
  const Graph& g = pl.graph;
  std::set<VertexId> forbidden;
  if (options.separate) {
    forbidden.insert(options.separate->first.begin(), options.separate->first.end());
    forbidden.insert(options.separate->second.begin(), options.separate->second.end());
  }
  long enumerated = 0;
  for (int len = 3; len <= options.max_len; ++len) {
    std::vector<std::vector<VertexId>> cycles;
    std::vector<VertexId> path;
    std::map<VertexId, bool> in_path;
    std::function<void()> extend = [&]() {
      VertexId last = path.back();
      if (static_cast<int>(path.size()) == len) {
        // Each cycle once: smallest vertex first, smaller neighbour second.
        if (g.HasEdge(last, path.front()) && path[1] < last) {
          if (++enumerated > options.max_cycles) {
            throw Error(ErrorCode::kResource, "cycle enumeration cap exceeded");
          }
          cycles.push_back(path);
        }
        return;
      }
      for (VertexId w : g.Neighbors(last)) {
        if (w <= path.front() || in_path[w] || forbidden.count(w)) continue;
        in_path[w] = true;
        path.push_back(w);
        extend();
        path.pop_back();
        in_path[w] = false;
      }
    };
    for (VertexId s : g.Vertices()) {
      if (forbidden.count(s)) continue;
      path = {s};
      extend();
    }
    auto dummies = [&](const std::vector<VertexId>& cyc) {
      return static_cast<int>(std::count_if(
          cyc.begin(), cyc.end(), [&](VertexId x) { return pl.dummies.count(x) > 0; }));
    };
    std::sort(cycles.begin(), cycles.end(), [&](const auto& a, const auto& b) {
      int da = dummies(a), db = dummies(b);
      if (da != db) return da < db;
      return a < b;
    });
    for (const auto& cyc : cycles) {
      auto comps = RemoveCycle(pl, cyc);
      int hits = 0;
      if (!Qualifies(comps, pl, options, cyc, &hits)) continue;
      SeparatingCycle out;
      out.cycle = cyc;
      out.components = std::move(comps);
      out.original_hits = hits;
      out.dummies = dummies(cyc);
      return out;
    }
  }
  return std::nullopt;
}

BudgetReport TraversalBudgetDemo(const GeometricEmbedding& emb, VertexId u,
                                 VertexId v, int cap, int max_len) {
  if (cap < 1) throw Error(ErrorCode::kInvalidArgument, "crossing cap must be positive");
  Planarization pl = Planarize(emb);
  ScpOptions options;
  options.max_len = max_len;
  options.separate = std::make_pair(std::set<VertexId>{u}, std::set<VertexId>{v});
  auto found = ScpCheck(pl, options);
  if (!found) {
    throw Error(ErrorCode::kNoSeparatingCycle,
                "no cycle of length <= " + std::to_string(max_len) +
                    " separates " + std::to_string(u) + " from " + std::to_string(v));
  }
  BudgetReport report;
  report.cycle_length = static_cast<int>(found->cycle.size());
  report.cap = cap;
  report.budget = report.cycle_length * cap;
  report.demand = report.budget + 1;
  report.cycle = std::move(*found);
  return report;
}

BudgetReport TraversalBudgetDemo(const BarRepresentation& rep, VertexId u,
                                 VertexId v, int j, int max_len) {
  if (j < 1) throw Error(ErrorCode::kInvalidArgument, "traversal cap must be positive");
  VisibilityPlanarization vp = PlanarizeVisibility(rep);
  std::set<VertexId> left, right;
  for (const auto& [x, bar] : vp.bar_of) {
    if (bar == u) left.insert(x);
    if (bar == v) right.insert(x);
  }
  ScpOptions options;
  options.max_len = max_len;
  options.separate = std::make_pair(left, right);
  auto found = ScpCheck(vp.planar, options);
  if (!found) {
    throw Error(ErrorCode::kNoSeparatingCycle,
                "no cycle of length <= " + std::to_string(max_len) +
                    " separates bars " + std::to_string(u) + " and " + std::to_string(v));
  }
  // New sights are vertical and cannot cross old ones, so only bars can be
  // passed.
  std::set<VertexId> bars;
  for (VertexId x : found->cycle) bars.insert(vp.bar_of.at(x));
  BudgetReport report;
  report.cycle_length = static_cast<int>(bars.size());
  report.cap = j;
  report.budget = report.cycle_length * j;
  report.demand = report.budget + 1;
  report.cycle = std::move(*found);
  return report;
}

}  // namespace pathadd
