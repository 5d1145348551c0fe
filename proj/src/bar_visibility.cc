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

std::string Id(VertexId v) { return std::to_string(v); }

// Half the smallest positive gap between values (1 if there is none).
Rational HalfMinGap(std::set<Rational> values) {
  Rational best = -1;
  for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
    Rational gap = *std::next(it) - *it;
    if (best < 0 || gap < best) best = gap;
  }
  return best < 0 ? Rational(1) : Rational(best / 2);
}

bool Inside(const Rational& x, const Bar& bar) { return bar.x_lo < x && x < bar.x_hi; }

}  // namespace

void CheckWellFormed(const BarRepresentation& rep) {
  std::map<Rational, std::vector<VertexId>> rows;
  for (const auto& [v, bar] : rep.bars) {
    if (!(bar.x_lo < bar.x_hi)) Malformed("bar " + Id(v) + " has no width");
    rows[bar.y].push_back(v);
  }
  for (auto& [y, ids] : rows) {
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
      return rep.bars.at(a).x_lo < rep.bars.at(b).x_lo;
    });
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      if (!(rep.bars.at(ids[i]).x_hi < rep.bars.at(ids[i + 1]).x_lo)) {
        Malformed("bars " + Id(ids[i]) + " and " + Id(ids[i + 1]) + " overlap");
      }
    }
  }
  for (const Sight& s : rep.sights) {
    auto a = rep.bars.find(s.a);
    auto b = rep.bars.find(s.b);
    if (a == rep.bars.end() || b == rep.bars.end() || s.a == s.b) {
      Malformed("sight " + Id(s.a) + "-" + Id(s.b) + " has bad endpoints");
    }
    if (!Inside(s.x, a->second) || !Inside(s.x, b->second)) {
      Malformed("sight " + Id(s.a) + "-" + Id(s.b) + " leaves its bars");
    }
    if (a->second.y == b->second.y) {
      Malformed("sight " + Id(s.a) + "-" + Id(s.b) + " joins bars in one row");
    }
  }
  std::vector<Sight> sorted = rep.sights;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size() && sorted[j].x == sorted[i].x; ++j) {
      auto span = [&](const Sight& s) {
        Rational ya = rep.bars.at(s.a).y, yb = rep.bars.at(s.b).y;
        return std::pair{std::min(ya, yb), std::max(ya, yb)};
      };
      auto [lo1, hi1] = span(sorted[i]);
      auto [lo2, hi2] = span(sorted[j]);
      // Sights may meet only at a bar they share, one from each side.
      const Sight& s1 = sorted[i];
      const Sight& s2 = sorted[j];
      auto shares = [&](const Rational& y) {
        for (VertexId w : {s1.a, s1.b}) {
          if ((w == s2.a || w == s2.b) && rep.bars.at(w).y == y) return true;
        }
        return false;
      };
      bool apart = hi1 < lo2 || hi2 < lo1;
      bool stacked = (hi1 == lo2 && shares(hi1)) || (hi2 == lo1 && shares(lo1));
      if (!apart && !stacked) Malformed("sights overlap at one x");
    }
  }
}

std::vector<VertexId> TraversedBars(const BarRepresentation& rep, const Sight& s) {
  Rational ya = rep.bars.at(s.a).y, yb = rep.bars.at(s.b).y;
  Rational lo = std::min(ya, yb), hi = std::max(ya, yb);
  std::vector<std::pair<Rational, VertexId>> hit;
  for (const auto& [w, bar] : rep.bars) {
    if (w == s.a || w == s.b) continue;
    if (lo < bar.y && bar.y < hi && bar.x_lo <= s.x && s.x <= bar.x_hi) {
      hit.emplace_back(bar.y, w);
    }
  }
  std::sort(hit.begin(), hit.end());
  std::vector<VertexId> out;
  for (const auto& [y, w] : hit) out.push_back(w);
  return out;
}

Graph GraphOfSights(const BarRepresentation& rep) {
  Graph g;
  for (const auto& [v, bar] : rep.bars) g.AddVertex(v);
  for (const Sight& s : rep.sights) g.AddEdge(s.a, s.b);
  return g;
}

namespace {

// Visible pairs with the first elementary x-interval where they see each
// other.
std::map<Edge, std::pair<Rational, Rational>> VisibilityWindows(
    const BarRepresentation& rep, int k) {
  std::set<Rational> xs;
  for (const auto& [v, bar] : rep.bars) {
    xs.insert(bar.x_lo);
    xs.insert(bar.x_hi);
  }
  std::map<Edge, std::pair<Rational, Rational>> out;
  for (auto it = xs.begin(); it != xs.end() && std::next(it) != xs.end(); ++it) {
    Rational lo = *it, hi = *std::next(it);
    Rational mid = (lo + hi) / 2;
    std::vector<std::pair<Rational, VertexId>> column;
    for (const auto& [v, bar] : rep.bars) {
      if (Inside(mid, bar)) column.emplace_back(bar.y, v);
    }
    std::sort(column.begin(), column.end());
    for (std::size_t i = 0; i < column.size(); ++i) {
      for (std::size_t j = i + 1; j < column.size() && j <= i + k + 1; ++j) {
        out.emplace(Edge(column[i].second, column[j].second), std::pair{lo, hi});
      }
    }
  }
  return out;
}

}  // namespace

std::set<Edge> EpsilonVisibilities(const BarRepresentation& rep, int k) {
  std::set<Edge> out;
  for (const auto& [e, window] : VisibilityWindows(rep, k)) out.insert(e);
  return out;
}

ValidationReport CheckBarVisibility(const BarRepresentation& rep, const Graph& g,
                                    int k, std::optional<int> j, bool strong) {
  CheckWellFormed(rep);
  for (VertexId v : g.Vertices()) {
    if (!rep.bars.count(v)) Malformed("vertex " + Id(v) + " has no bar");
  }
  for (const auto& [v, bar] : rep.bars) {
    if (!g.HasVertex(v)) Malformed("bar " + Id(v) + " is not a vertex");
  }
  ValidationReport report;
  std::set<Edge> realized;
  std::map<VertexId, int> passes;
  for (const Sight& s : rep.sights) {
    Edge e(s.a, s.b);
    realized.insert(e);
    if (!g.HasEdge(e)) report.Add({{e}, -1, "sight not in graph"});
    std::vector<VertexId> through = TraversedBars(rep, s);
    if (static_cast<int>(through.size()) > k) {
      report.Add({{e}, -1, "too many traversals at x=" + FormatRational(s.x)});
    }
    for (VertexId w : through) ++passes[w];
  }
  for (const Edge& e : g.Edges()) {
    if (!realized.count(e)) report.Add({{e}, -1, "unrealized edge"});
  }
  if (j) {
    for (const auto& [w, count] : passes) {
      if (count > *j) report.Add({{}, w, "bar passed too often"});
    }
  }
  if (strong) {
    for (const Edge& e : EpsilonVisibilities(rep, k)) {
      if (!g.HasEdge(e)) report.Add({{e}, -1, "visibility not in graph"});
    }
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

VisibilityPlanarization PlanarizeVisibility(const BarRepresentation& rep) {
  CheckWellFormed(rep);
  std::set<Rational> ys;
  for (const auto& [v, bar] : rep.bars) ys.insert(bar.y);
  Rational h = HalfMinGap(ys);
  VisibilityPlanarization out;
  Planarization& pl = out.planar;
  std::map<Point, VertexId> ids;
  auto vertex = [&](const Point& p, VertexId bar, bool port) {
    auto it = ids.find(p);
    if (it != ids.end()) return it->second;
    VertexId id = static_cast<VertexId>(ids.size());
    ids.emplace(p, id);
    pl.graph.AddVertex(id);
    pl.coords[id] = p;
    out.bar_of[id] = bar;
    if (port) pl.dummies.insert(id);
    return id;
  };
  std::map<VertexId, std::set<Rational>> bottom, top;
  for (const auto& [v, bar] : rep.bars) {
    for (const Rational& x : {bar.x_lo, bar.x_hi}) {
      vertex({x, bar.y}, v, false);
      vertex({x, bar.y + h}, v, false);
      bottom[v].insert(x);
      top[v].insert(x);
    }
  }
  std::vector<std::vector<VertexId>> chains;
  for (const Sight& s : rep.sights) {
    VertexId lo = s.a, hi = s.b;
    if (rep.bars.at(hi).y < rep.bars.at(lo).y) std::swap(lo, hi);
    std::vector<VertexId> chain;
    chain.push_back(vertex({s.x, rep.bars.at(lo).y + h}, lo, true));
    top[lo].insert(s.x);
    for (VertexId w : TraversedBars(rep, s)) {
      const Bar& bar = rep.bars.at(w);
      chain.push_back(vertex({s.x, bar.y}, w, true));
      chain.push_back(vertex({s.x, bar.y + h}, w, true));
      bottom[w].insert(s.x);
      top[w].insert(s.x);
    }
    chain.push_back(vertex({s.x, rep.bars.at(hi).y}, hi, true));
    bottom[hi].insert(s.x);
    chains.push_back(std::move(chain));
  }
  // A port on a corner is just the corner.
  for (VertexId id : std::set<VertexId>(pl.dummies)) {
    const Point& p = pl.coords[id];
    const Bar& bar = rep.bars.at(out.bar_of[id]);
    if (p.x == bar.x_lo || p.x == bar.x_hi) pl.dummies.erase(id);
  }
  auto link = [&](VertexId a, VertexId b) {
    if (a != b) pl.graph.AddEdge(a, b);
  };
  for (const auto& [v, bar] : rep.bars) {
    std::vector<Rational> b(bottom[v].begin(), bottom[v].end());
    std::vector<Rational> t(top[v].begin(), top[v].end());
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      link(ids.at({b[i], bar.y}), ids.at({b[i + 1], bar.y}));
    }
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      link(ids.at({t[i], bar.y + h}), ids.at({t[i + 1], bar.y + h}));
    }
    link(ids.at({bar.x_lo, bar.y}), ids.at({bar.x_lo, bar.y + h}));
    link(ids.at({bar.x_hi, bar.y}), ids.at({bar.x_hi, bar.y + h}));
  }
  for (const auto& chain : chains) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) link(chain[i], chain[i + 1]);
  }
  for (VertexId x : pl.graph.Vertices()) {
    std::vector<std::pair<VertexId, Point>> around;
    for (VertexId y : pl.graph.Neighbors(x)) around.emplace_back(y, pl.coords[y]);
    pl.rotation[x] = SortCounterclockwise(pl.coords[x], around);
  }
  out.faces = TraceFaces(pl.rotation);
  out.components = static_cast<int>(ConnectedComponents(pl.graph).size());
  for (const auto& face : out.faces) {
    Rational area2 = 0;
    for (std::size_t i = 0; i < face.size(); ++i) {
      area2 += Cross(pl.coords[face[i]], pl.coords[face[(i + 1) % face.size()]]);
    }
    bool one_bar = std::all_of(face.begin(), face.end(), [&](VertexId x) {
      return out.bar_of[x] == out.bar_of[face.front()];
    });
    out.closed.push_back(area2 > 0 && one_bar);
  }
  return out;
}

namespace {

// Midpoint of the widest gap of the bar between the given x-coordinates.
Rational FreeColumn(const Bar& bar, const std::set<Rational>& xs) {
  std::vector<Rational> cuts = {bar.x_lo};
  for (const Rational& x : xs) {
    if (bar.x_lo < x && x < bar.x_hi) cuts.push_back(x);
  }
  cuts.push_back(bar.x_hi);
  std::size_t best = 0;
  for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] > cuts[best + 1] - cuts[best]) best = i;
  }
  return (cuts[best] + cuts[best + 1]) / 2;
}

// Bars met by a vertical ray from `from` at x, nearest first.
std::vector<VertexId> RayBars(const BarRepresentation& rep, VertexId from,
                              const Rational& x, bool up) {
  const Rational& y0 = rep.bars.at(from).y;
  std::vector<std::pair<Rational, VertexId>> hit;
  for (const auto& [w, bar] : rep.bars) {
    if (w == from) continue;
    bool beyond = up ? bar.y > y0 : bar.y < y0;
    if (beyond && bar.x_lo <= x && x <= bar.x_hi) {
      hit.emplace_back(up ? bar.y : Rational(-bar.y), w);
    }
  }
  std::sort(hit.begin(), hit.end());
  std::vector<VertexId> out;
  for (const auto& [key, w] : hit) out.push_back(w);
  return out;
}

struct RayPlan {
  std::vector<VertexId> from_u;
  std::vector<VertexId> from_v;
  // 1 if u's ray reaches v, 2 if v's ray reaches u, 0 if both need the
  // extremal bar.
  int meets = 0;

  int Cost() const {
    if (meets == 1) return static_cast<int>(from_u.size());
    if (meets == 2) return static_cast<int>(from_v.size());
    return static_cast<int>(from_u.size() + from_v.size());
  }
};

RayPlan PlanRays(const BarRepresentation& rep, VertexId u, VertexId v,
                 const Rational& xu, const Rational& xv, bool up) {
  RayPlan plan;
  plan.from_u = RayBars(rep, u, xu, up);
  plan.from_v = RayBars(rep, v, xv, up);
  auto cut = [](std::vector<VertexId>& ray, VertexId target) {
    auto it = std::find(ray.begin(), ray.end(), target);
    if (it == ray.end()) return false;
    ray.erase(it, ray.end());
    return true;
  };
  if (cut(plan.from_u, v)) {
    plan.meets = 1;
  } else if (cut(plan.from_v, u)) {
    plan.meets = 2;
  }
  return plan;
}

}  // namespace

BarPathResult AddPathBar1(const BarRepresentation& rep, const Graph& g, VertexId u,
                          VertexId v, int t, bool strong) {
  if (!rep.bars.count(u) || !rep.bars.count(v)) {
    throw Error(ErrorCode::kUnknownVertex, "path endpoints need bars");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  int n = static_cast<int>(g.NumVertices());
  if (t < std::max(n - 2, 1)) {
    throw Error(ErrorCode::kPrecondition, "t = " + std::to_string(t) + " is too small");
  }
  if (!CheckBarVisibility(rep, g, 1, std::nullopt, strong).verdict) {
    throw Error(ErrorCode::kPrecondition, "input is not a bar 1-visibility representation");
  }
  std::set<Rational> xs, ys;
  for (const auto& [w, bar] : rep.bars) {
    xs.insert(bar.x_lo);
    xs.insert(bar.x_hi);
    ys.insert(bar.y);
  }
  for (const Sight& s : rep.sights) xs.insert(s.x);
  Rational xu = FreeColumn(rep.bars.at(u), xs);
  Rational xv = FreeColumn(rep.bars.at(v), xs);
  xs.insert(xu);
  xs.insert(xv);
  Rational eps = HalfMinGap(xs);
  Rational eps_y = HalfMinGap(ys);

  RayPlan top = PlanRays(rep, u, v, xu, xv, true);
  RayPlan bottom = PlanRays(rep, u, v, xu, xv, false);
  BarPathResult result;
  result.top = top.Cost() <= bottom.Cost();
  const RayPlan& plan = result.top ? top : bottom;
  Rational sign = result.top ? 1 : -1;

  // One new bar beside each traversed bar; `compact` skips the last one so
  // the following sight crosses that bar itself.
  auto chain = [&](const std::vector<VertexId>& ray, const Rational& x, bool compact) {
    std::vector<Bar> out;
    std::size_t count = ray.size();
    if (compact && count > 0) --count;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back({rep.bars.at(ray[i]).y + sign * eps_y, x - eps / 2, x + eps / 2});
    }
    return out;
  };
  std::vector<Bar> chain_u, chain_v;
  int demand = 0;
  for (bool compact : {false, true}) {
    chain_u = plan.meets == 2 ? std::vector<Bar>{} : chain(plan.from_u, xu, compact);
    chain_v = plan.meets == 1 ? std::vector<Bar>{} : chain(plan.from_v, xv, compact);
    demand = static_cast<int>(chain_u.size() + chain_v.size()) + (plan.meets == 0 ? 1 : 0);
    if (demand <= t) break;
  }
  if (demand > t) {
    throw Error(ErrorCode::kCapacity, "bar path needs " + std::to_string(demand) +
                                          " internal vertices, t = " + std::to_string(t));
  }
  // Surplus bars stack in the free band after the last chain bar.
  int surplus = t - demand;
  bool from_v_side = plan.meets == 2;
  const std::vector<Bar>& lead = from_v_side ? chain_v : chain_u;
  Rational column = from_v_side ? xv : xu;
  Rational y_last = lead.empty() ? rep.bars.at(from_v_side ? v : u).y : lead.back().y;
  std::vector<Bar> extra;
  for (int j = 1; j <= surplus; ++j) {
    extra.push_back({y_last + sign * eps_y * j / (surplus + 1), column - eps / 2,
                     column + eps / 2});
  }
  std::vector<Bar> order;
  std::vector<Rational> columns;  // column of the sight entering order[i]
  if (plan.meets == 0) {
    for (const Bar& b : chain_u) order.push_back(b);
    for (const Bar& b : extra) order.push_back(b);
    columns.assign(order.size() + 1, xu);
    Rational y_top = result.top ? Rational(*ys.rbegin() + 3 * eps_y)
                                : Rational(*ys.begin() - 3 * eps_y);
    order.push_back({y_top, std::min(xu, xv) - eps / 2, std::max(xu, xv) + eps / 2});
    for (auto it = chain_v.rbegin(); it != chain_v.rend(); ++it) {
      order.push_back(*it);
      columns.push_back(xv);
    }
    columns.push_back(xv);
  } else if (plan.meets == 1) {
    order = chain_u;
    order.insert(order.end(), extra.begin(), extra.end());
    columns.assign(order.size() + 1, xu);
  } else {
    order.assign(extra.rbegin(), extra.rend());
    order.insert(order.end(), chain_v.rbegin(), chain_v.rend());
    columns.assign(order.size() + 1, xv);
  }

  std::vector<VertexId> ids = FreshIds(g, t);
  result.rep = rep;
  VertexId prev = u;
  for (std::size_t i = 0; i < order.size(); ++i) {
    result.rep.bars[ids[i]] = order[i];
    result.rep.sights.push_back({prev, ids[i], columns[i]});
    prev = ids[i];
  }
  result.rep.sights.push_back({prev, v, columns.back()});
  result.spec = PathAdditionSpec::ForPath(u, v, ids);

  if (strong) {
    std::set<Edge> path(result.spec.path_edges.begin(), result.spec.path_edges.end());
    std::set<VertexId> fresh(ids.begin(), ids.end());
    std::set<Rational> used;
    for (const Sight& s : result.rep.sights) used.insert(s.x);
    for (const auto& [e, window] : VisibilityWindows(result.rep, 1)) {
      if (path.count(e) || (!fresh.count(e.a) && !fresh.count(e.b))) continue;
      const auto& [lo, hi] = window;
      Rational x = (lo + hi) / 2;
      for (int q = 3; used.count(x); ++q) {
        for (int p = 1; p < q && used.count(x); ++p) x = lo + (hi - lo) * p / q;
      }
      used.insert(x);
      result.rep.sights.push_back({e.a, e.b, x});
      result.spec.supplementary.insert(e);
    }
  }
  result.graph = ApplyPathAddition(g, result.spec);
  return result;
}

}  // namespace pathadd
