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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "pathadd/error.h"
#include "pathadd/geometry.h"
#include "pathadd/path_addition.h"
#include "pathadd/validators.h"

namespace pathadd {

namespace {

constexpr double kPi = std::numbers::pi;
// Sectors wider than this get bend vertices instead of a tangent corner.
constexpr double kMaxCornerAngle = 170.0 * kPi / 180.0;
constexpr int kMaxShrink = 24;

enum Side { kLeft = 0, kRight = 1 };

double Length(const Point& p) { return std::hypot(ToDouble(p.x), ToDouble(p.y)); }

double AngleOf(const Point& p) { return std::atan2(ToDouble(p.y), ToDouble(p.x)); }

// Angle swept from a to b turning counterclockwise (ccw) or clockwise, in
// (0, 2pi].
double SweepAngle(const Point& a, const Point& b, bool ccw) {
  double d = AngleOf(b) - AngleOf(a);
  if (!ccw) d = -d;
  while (d <= 1e-12) d += 2 * kPi;
  while (d > 2 * kPi) d -= 2 * kPi;
  return d;
}

// Largest power of two not above x (x > 0).
Rational PowerOfTwoBelow(double x) {
  int e = static_cast<int>(std::floor(std::log2(x)));
  Rational r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
  }
  r.canonicalize();
  return r;
}

double PointSegmentDistance(const Point& p, const Point& a, const Point& b) {
  double px = ToDouble(p.x), py = ToDouble(p.y);
  double ax = ToDouble(a.x), ay = ToDouble(a.y);
  double bx = ToDouble(b.x), by = ToDouble(b.y);
  double dx = bx - ax, dy = by - ay;
  double len2 = dx * dx + dy * dy;
  double s = len2 == 0 ? 0 : ((px - ax) * dx + (py - ay) * dy) / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(px - ax - s * dx, py - ay - s * dy);
}

double SegmentSegmentDistance(const Point& a1, const Point& a2, const Point& b1,
                              const Point& b2) {
  if (IntersectSegments(a1, a2, b1, b2).relation != SegmentRelation::kDisjoint) {
    return 0;
  }
  return std::min({PointSegmentDistance(a1, b1, b2), PointSegmentDistance(a2, b1, b2),
                   PointSegmentDistance(b1, a1, a2), PointSegmentDistance(b2, a1, a2)});
}

// One ray of a walk around a vertex; `crossed` rays are cut by the new path.
struct RayStep {
  Point dir;
  bool crossed = false;
};

// The new path's walk around one internal vertex of the shortest path, from
// the sector next to the entering edge to the sector next to the leaving one.
struct Chain {
  std::vector<RayStep> rays;
  bool ccw = true;
};

int SectorCost(const RayStep& a, const RayStep& b, bool ccw) {
  double theta = SweepAngle(a.dir, b.dir, ccw);
  if (theta <= kMaxCornerAngle) return 1;
  if (theta < 1.5 * kPi) return 2;
  return 3;
}

int ChainCost(const Chain& c) {
  int cost = 0;
  for (std::size_t i = 0; i + 1 < c.rays.size(); ++i) {
    cost += SectorCost(c.rays[i], c.rays[i + 1], c.ccw);
  }
  return cost;
}

// Counterclockwise neighbour ring of v in a straight-line drawing.
std::vector<VertexId> Ring(const GeometricEmbedding& emb, VertexId v) {
  std::vector<std::pair<VertexId, Point>> around;
  for (VertexId w : emb.graph.Neighbors(v)) around.emplace_back(w, emb.coords.at(w));
  return SortCounterclockwise(emb.coords.at(v), around);
}

class Router {
 public:
  Router(const GeometricEmbedding& emb, VertexId u, VertexId v, RoutingMode mode)
      : emb_(emb), mode_(mode) {
    path_ = ShortestPath(emb.graph, u, v);
    crossings_ = ComputeCrossings(emb);
    for (const Crossing& c : crossings_) {
      crossed_edges_.insert(c.edge_a);
      crossed_edges_.insert(c.edge_b);
    }
  }

  int s() const { return static_cast<int>(path_.size()) - 1; }
  const VertexPath& path() const { return path_; }

  const Point& At(VertexId x) const { return emb_.coords.at(x); }

  bool EdgeCrossed(int i) const {
    return crossed_edges_.count(Edge(path_[i], path_[i + 1])) > 0;
  }

  // Walk around path_[i] entering on side a and leaving on side b.
  Chain MakeChain(int i, Side a, Side b) const {
    VertexId center = path_[i];
    std::vector<VertexId> ring = Ring(emb_, center);
    int deg = static_cast<int>(ring.size());
    auto pos = [&](VertexId x) {
      return static_cast<int>(std::find(ring.begin(), ring.end(), x) - ring.begin());
    };
    int in = pos(path_[i - 1]);
    int out = pos(path_[i + 1]);
    auto dir = [&](int k) { return At(ring[((k % deg) + deg) % deg]) - At(center); };
    // Rays met turning from the entering edge, up to and including the
    // leaving edge.
    auto walk = [&](bool ccw) {
      std::vector<int> ks;
      int step = ccw ? 1 : -1;
      for (int k = in + step;; k += step) {
        ks.push_back(k);
        if (((k % deg) + deg) % deg == out) break;
      }
      return ks;
    };
    auto build = [&](bool ccw, bool cross_in, bool cross_out) {
      Chain c;
      c.ccw = ccw;
      int step = ccw ? 1 : -1;
      if (cross_in) {
        c.rays.push_back({dir(in - step), false});
        c.rays.push_back({dir(in), true});
      } else {
        c.rays.push_back({dir(in), false});
      }
      std::vector<int> ks = walk(ccw);
      for (std::size_t j = 0; j + 1 < ks.size(); ++j) c.rays.push_back({dir(ks[j]), true});
      if (cross_out) {
        c.rays.push_back({dir(out), true});
        c.rays.push_back({dir(out + step), false});
      } else {
        c.rays.push_back({dir(out), false});
      }
      return c;
    };
    // Left of travel is reached turning clockwise from the entering edge.
    if (a == b) return build(a == kRight, false, false);
    Chain cw = a == kLeft ? build(false, false, true) : build(false, true, false);
    Chain ccw = a == kLeft ? build(true, true, false) : build(true, false, true);
    return ChainCost(ccw) < ChainCost(cw) ? ccw : cw;
  }

  // Smallest neighbour id decides the preferred side on ties.
  Side PreferredSide(int i) const {
    Chain left = MakeChain(i, kLeft, kLeft);
    Chain right = MakeChain(i, kRight, kRight);
    std::vector<VertexId> ring = Ring(emb_, path_[i]);
    VertexId best = std::numeric_limits<VertexId>::max();
    Side side = kLeft;
    for (Side sd : {kLeft, kRight}) {
      const Chain& c = sd == kLeft ? left : right;
      for (const RayStep& r : c.rays) {
        if (!r.crossed) continue;
        for (VertexId w : ring) {
          if (At(w) - At(path_[i]) == r.dir && w < best) {
            best = w;
            side = sd;
          }
        }
      }
    }
    return side;
  }

  int ConnectorCost() const {
    int cost = 0;
    for (int i = 0; i < s(); ++i) {
      if (!EdgeCrossed(i)) continue;
      if (mode_ == RoutingMode::kRac) {
        cost += 2;
      } else if (mode_ == RoutingMode::kFanFree) {
        if (i == 0) ++cost;
        if (i == s() - 1) ++cost;
      }
    }
    return cost;
  }

  // Sides of the long segments, minimizing the number of path vertices.
  std::vector<Side> ChooseSides() const {
    int n = s();
    std::vector<Side> sides(n, kLeft);
    if (n == 1) return sides;
    // best[i][side] = cheapest cost of vertices i+1..n-1 given edge i's side.
    std::vector<std::array<int, 2>> best(n, {0, 0});
    for (int i = n - 2; i >= 0; --i) {
      for (Side a : {kLeft, kRight}) {
        int m = std::numeric_limits<int>::max();
        for (Side b : {kLeft, kRight}) {
          m = std::min(m, ChainCost(MakeChain(i + 1, a, b)) + best[i + 1][b]);
        }
        best[i][a] = m;
      }
    }
    auto pick = [&](int i, std::optional<Side> prev) {
      Side pref = i + 1 < n ? PreferredSide(i + 1) : *prev;
      Side other = pref == kLeft ? kRight : kLeft;
      auto total = [&](Side x) {
        int c = best[i][x];
        if (prev) c += ChainCost(MakeChain(i, *prev, x));
        return c;
      };
      return total(other) < total(pref) ? other : pref;
    };
    sides[0] = pick(0, std::nullopt);
    for (int i = 1; i < n; ++i) sides[i] = pick(i, sides[i - 1]);
    return sides;
  }

  int Demand(const std::vector<Side>& sides) const {
    int cost = ConnectorCost();
    for (int i = 1; i < s(); ++i) cost += ChainCost(MakeChain(i, sides[i - 1], sides[i]));
    return std::max(cost, 1);
  }

  // Clearance radius around every path vertex, in floating point; only used
  // to pick the initial exact scale.
  std::vector<double> Clearances() const {
    const Graph& g = emb_.graph;
    std::vector<Edge> edges = g.Edges();
    std::vector<double> clear(path_.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < path_.size(); ++i) {
      VertexId x = path_[i];
      const Point& p = At(x);
      for (VertexId y : g.Vertices()) {
        if (y != x) clear[i] = std::min(clear[i], Length(At(y) - p));
      }
      for (const Edge& e : edges) {
        if (!e.Has(x)) clear[i] = std::min(clear[i], PointSegmentDistance(p, At(e.a), At(e.b)));
      }
      for (const Crossing& c : crossings_) {
        clear[i] = std::min(clear[i], Length(c.point - p));
      }
    }
    for (int i = 0; i < s(); ++i) {
      Edge se(path_[i], path_[i + 1]);
      const Point& a = At(path_[i]);
      const Point& b = At(path_[i + 1]);
      double d = std::numeric_limits<double>::infinity();
      for (VertexId y : g.Vertices()) {
        if (!se.Has(y)) d = std::min(d, PointSegmentDistance(At(y), a, b));
      }
      std::set<Edge> crossers;
      for (const Crossing& c : crossings_) {
        if (c.edge_a == se) crossers.insert(c.edge_b);
        else if (c.edge_b == se) crossers.insert(c.edge_a);
        else d = std::min(d, PointSegmentDistance(c.point, a, b));
      }
      for (const Edge& e : edges) {
        if (e.SharesEndpoint(se) || e == se || crossers.count(e)) continue;
        d = std::min(d, SegmentSegmentDistance(At(e.a), At(e.b), a, b));
      }
      clear[i] = std::min(clear[i], d);
      clear[i + 1] = std::min(clear[i + 1], d);
    }
    return clear;
  }

  // Angle at x from direction `d` to the next incident edge turning ccw or cw.
  double FreeAngle(VertexId x, const Point& d, bool ccw) const {
    double best = 2 * kPi;
    for (VertexId w : emb_.graph.Neighbors(x)) {
      Point r = At(w) - At(x);
      if (r == d) continue;
      best = std::min(best, SweepAngle(d, r, ccw));
    }
    return best;
  }

  void AppendSector(std::vector<Point>& out, const Point& center, const Rational& rho,
                    const RayStep& a, const RayStep& b, bool ccw) const {
    Rational la = rho * Rational(Length(a.dir));
    Rational lb = rho * Rational(Length(b.dir));
    int cost = SectorCost(a, b, ccw);
    if (cost == 1) {
      // Tangent lines q.a = la and q.b = lb meet inside the sector.
      Rational det = Cross(a.dir, b.dir);
      Point q{(la * b.dir.y - lb * a.dir.y) / det, (a.dir.x * lb - b.dir.x * la) / det};
      out.push_back(center + q);
      return;
    }
    Rational sign = ccw ? 1 : -1;
    Rational fa = la / Dot(a.dir, a.dir);
    Rational fb = lb / Dot(b.dir, b.dir);
    out.push_back(center + fa * a.dir + (sign * fa) * Perp(a.dir));
    if (cost == 3) {
      double mid = AngleOf(a.dir) + (ccw ? 0.5 : -0.5) * SweepAngle(a.dir, b.dir, ccw);
      Point dir = MakePoint(std::cos(mid), std::sin(mid));
      out.push_back(center + (rho * (Rational(7) / 5)) * dir);
    }
    out.push_back(center + fb * b.dir - (sign * fb) * Perp(b.dir));
  }

  void AppendChain(std::vector<Point>& out, int i, Side a, Side b,
                   const Rational& rho) const {
    Chain c = MakeChain(i, a, b);
    for (std::size_t k = 0; k + 1 < c.rays.size(); ++k) {
      AppendSector(out, At(path_[i]), rho, c.rays[k], c.rays[k + 1], c.ccw);
    }
  }

  // Points on a line parallel to edge i on side `side`, near both ends.
  std::pair<Point, Point> Connectors(int i, Side side, const Rational& rho_a,
                                     const Rational& rho_b) const {
    VertexId x = path_[i];
    VertexId y = path_[i + 1];
    Point d = At(y) - At(x);
    Point n = side == kLeft ? Perp(d) : Point{} - Perp(d);
    Rational len(Length(d));
    Rational alpha_a = rho_a / len;
    Rational alpha_b = rho_b / len;
    double phi_a = std::min(FreeAngle(x, d, side == kLeft), kPi / 2);
    double phi_b = std::min(FreeAngle(y, Point{} - d, side != kLeft), kPi / 2);
    Rational beta = std::min(Rational(alpha_a * PowerOfTwoBelow(std::tan(phi_a / 4))),
                             Rational(alpha_b * PowerOfTwoBelow(std::tan(phi_b / 4))));
    return {At(x) + alpha_a * d + beta * n, At(y) - alpha_b * d + beta * n};
  }

  bool NeedsStartConnector(int i) const {
    if (!EdgeCrossed(i)) return false;
    return mode_ == RoutingMode::kRac || (mode_ == RoutingMode::kFanFree && i == 0);
  }
  bool NeedsEndConnector(int i) const {
    if (!EdgeCrossed(i)) return false;
    return mode_ == RoutingMode::kRac || (mode_ == RoutingMode::kFanFree && i == s() - 1);
  }

  std::vector<Point> BuildPoints(const std::vector<Side>& sides,
                                 const std::vector<Rational>& rho) const {
    std::vector<Point> out;
    for (int i = 0; i < s(); ++i) {
      if (NeedsStartConnector(i) || NeedsEndConnector(i)) {
        auto [e, f] = Connectors(i, sides[i], rho[i], rho[i + 1]);
        if (NeedsStartConnector(i)) out.push_back(e);
        if (NeedsEndConnector(i)) out.push_back(f);
      }
      if (i + 1 < s()) AppendChain(out, i + 1, sides[i], sides[i + 1], rho[i + 1]);
    }
    if (out.empty()) {
      Point d = At(path_[1]) - At(path_[0]);
      Point n = sides[0] == kLeft ? Perp(d) : Point{} - Perp(d);
      Rational beta = std::min(rho[0], rho[1]) / (2 * Rational(Length(d)));
      out.push_back(At(path_[0]) + (Rational(1) / 2) * d + beta * n);
    }
    return out;
  }

  bool Passes(const GeometricEmbedding& out) const {
    try {
      ValidateEmbedding(out);
    } catch (const Error&) {
      return false;
    }
    switch (mode_) {
      case RoutingMode::kRac: return CheckRac(out).verdict;
      case RoutingMode::kFanFree: return CheckFanCrossingFree(out).verdict;
      case RoutingMode::kQuasi: return CheckQuasiPlanar(out, 3).verdict;
    }
    return false;
  }

  enum class Shortcut { kOk, kBlocked, kTriple };

  // Can the path points full[i] and full[j] be joined directly, given the
  // segments kept so far and the untouched tail full[j..]?
  Shortcut TryShortcut(const std::vector<Point>& full, const std::vector<int>& kept,
                       int i, int j) const {
    const Graph& g = emb_.graph;
    int last = static_cast<int>(full.size()) - 1;
    VertexId u = path_.front();
    VertexId v = path_.back();
    if (i == 0 && j == last && g.HasEdge(u, v)) return Shortcut::kBlocked;
    const Point& p = full[i];
    const Point& q = full[j];
    for (VertexId w : g.Vertices()) {
      if (OnSegmentInterior(At(w), p, q)) return Shortcut::kBlocked;
    }
    auto touches_ok = [&](const SegmentIntersection& hit) {
      return (i == 0 && hit.point == p) || (j == last && hit.point == q);
    };
    std::vector<Edge> crossed;
    for (const Edge& e : g.Edges()) {
      SegmentIntersection hit = IntersectSegments(p, q, At(e.a), At(e.b));
      switch (hit.relation) {
        case SegmentRelation::kDisjoint: break;
        case SegmentRelation::kProperCrossing: crossed.push_back(e); break;
        case SegmentRelation::kTouching:
          if (!touches_ok(hit)) return Shortcut::kBlocked;
          break;
        case SegmentRelation::kOverlap: return Shortcut::kBlocked;
      }
    }
    auto clear_of = [&](const Point& a, const Point& b, const Point* shared) {
      SegmentIntersection hit = IntersectSegments(p, q, a, b);
      if (hit.relation == SegmentRelation::kDisjoint) return true;
      return shared && hit.relation == SegmentRelation::kTouching && hit.point == *shared;
    };
    for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
      bool adjacent = kept[k + 1] == i;
      if (!clear_of(full[kept[k]], full[kept[k + 1]], adjacent ? &p : nullptr)) {
        return Shortcut::kBlocked;
      }
    }
    for (int k = j; k < last; ++k) {
      if (!clear_of(full[k], full[k + 1], k == j ? &q : nullptr)) return Shortcut::kBlocked;
    }
    for (std::size_t a = 0; a < crossed.size(); ++a) {
      for (std::size_t b = a + 1; b < crossed.size(); ++b) {
        if (partners_.count(crossed[a]) && partners_.at(crossed[a]).count(crossed[b])) {
          return Shortcut::kTriple;
        }
      }
    }
    return Shortcut::kOk;
  }

  // Greedy farthest-reach merging of consecutive path points. A point kept
  // because skipping it would make three edges cross pairwise is a
  // subdivision.
  std::vector<Point> Merge(const std::vector<Point>& pts, int* subdivisions) const {
    std::vector<Point> full;
    full.push_back(At(path_.front()));
    full.insert(full.end(), pts.begin(), pts.end());
    full.push_back(At(path_.back()));
    int last = static_cast<int>(full.size()) - 1;
    std::vector<int> kept = {0};
    int i = 0;
    while (i < last) {
      int reach = i + 1;
      for (int j = last; j > i + 1; --j) {
        if (TryShortcut(full, kept, i, j) == Shortcut::kOk) {
          reach = j;
          break;
        }
      }
      if (reach < last && TryShortcut(full, kept, i, reach + 1) == Shortcut::kTriple) {
        ++*subdivisions;
      }
      kept.push_back(reach);
      i = reach;
    }
    std::vector<Point> out;
    for (std::size_t k = 1; k + 1 < kept.size(); ++k) out.push_back(full[kept[k]]);
    return out;
  }

  GeometricEmbedding Assemble(const std::vector<Point>& pts,
                              const std::vector<VertexId>& ids) const {
    GeometricEmbedding out = emb_;
    VertexId prev = path_.front();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      out.graph.AddVertex(ids[k]);
      out.coords[ids[k]] = pts[k];
      out.graph.AddEdge(prev, ids[k]);
      prev = ids[k];
    }
    out.graph.AddEdge(prev, path_.back());
    return out;
  }

  // With t unset only the demand is computed.
  RoutingResult Run(std::optional<int> t) const {
    std::vector<Side> sides = ChooseSides();
    std::vector<double> clear = Clearances();
    std::vector<Rational> base;
    for (double c : clear) base.push_back(PowerOfTwoBelow(c / 64));
    for (int shrink = 0; shrink <= kMaxShrink; ++shrink) {
      Rational scale = 1;
      for (int k = 0; k < shrink; ++k) scale /= 2;
      std::vector<Rational> rho;
      for (const Rational& b : base) rho.push_back(b * scale);
      RoutingResult result;
      std::vector<Point> pts = BuildPoints(sides, rho);
      if (mode_ == RoutingMode::kQuasi) {
        std::vector<Point> merged = Merge(pts, &result.subdivisions);
        if (Passes(Assemble(merged, FreshIds(emb_.graph, merged.size())))) {
          pts = merged;
        } else {
          result.subdivisions = 0;
        }
      }
      result.demand = static_cast<int>(pts.size());
      if (!t) {
        result.embedding = Assemble(pts, FreshIds(emb_.graph, pts.size()));
        return result;
      }
      if (result.demand > *t) {
        throw Error(ErrorCode::kBudget, "routing needs " + std::to_string(result.demand) +
                                            " internal vertices, t = " + std::to_string(*t));
      }
      int surplus = *t - result.demand;
      if (surplus > 0) {
        // Extra vertices sit on the final segment, just before v.
        const Point& vp = At(path_.back());
        Point from = pts.empty() ? At(path_.front()) : pts.back();
        Rational tau = std::min(Rational(1), Rational(rho.back() / Rational(Length(from - vp))));
        for (int k = surplus; k >= 1; --k) {
          pts.push_back(vp + Rational(tau * k / (surplus + 1)) * (from - vp));
        }
      }
      std::vector<VertexId> ids = FreshIds(emb_.graph, *t);
      GeometricEmbedding out = Assemble(pts, ids);
      if (!Passes(out)) continue;
      result.embedding = std::move(out);
      result.spec = PathAdditionSpec::ForPath(path_.front(), path_.back(), ids);
      return result;
    }
    throw Error(ErrorCode::kValidatorRegression,
                "routed drawing failed the " + std::string(RoutingModeName(mode_)) +
                    " validator at every scale");
  }

  void set_partners(std::map<Edge, std::set<Edge>> p) { partners_ = std::move(p); }

 private:
  const GeometricEmbedding& emb_;
  RoutingMode mode_;
  VertexPath path_;
  std::vector<Crossing> crossings_;
  std::set<Edge> crossed_edges_;
  std::map<Edge, std::set<Edge>> partners_;
};

void CheckRoutingInput(const GeometricEmbedding& emb, VertexId u, VertexId v,
                       RoutingMode mode) {
  if (!emb.IsStraightLine()) {
    throw Error(ErrorCode::kPrecondition, "routing needs a straight-line drawing");
  }
  if (!emb.graph.HasVertex(u) || !emb.graph.HasVertex(v)) {
    throw Error(ErrorCode::kUnknownVertex, "path endpoints must be drawn vertices");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  bool ok = false;
  switch (mode) {
    case RoutingMode::kRac: ok = CheckRac(emb).verdict; break;
    case RoutingMode::kFanFree: ok = CheckFanCrossingFree(emb).verdict; break;
    case RoutingMode::kQuasi: ok = CheckQuasiPlanar(emb, 3).verdict; break;
  }
  if (!ok) {
    throw Error(ErrorCode::kPrecondition,
                "input drawing is not " + std::string(RoutingModeName(mode)));
  }
}

}  // namespace

RoutingResult RoutePathEmbedded(const GeometricEmbedding& emb, VertexId u,
                                VertexId v, RoutingMode mode, int t) {
  CheckRoutingInput(emb, u, v, mode);
  int n = static_cast<int>(emb.graph.NumVertices());
  if (t < n - 2) {
    throw Error(ErrorCode::kPrecondition, "t = " + std::to_string(t) +
                                              " is below |G|-2 = " + std::to_string(n - 2));
  }
  Router router(emb, u, v, mode);
  router.set_partners(CrossingPartners(emb));
  return router.Run(t);
}

int RoutingDemand(const GeometricEmbedding& emb, VertexId u, VertexId v,
                  RoutingMode mode) {
  CheckRoutingInput(emb, u, v, mode);
  Router router(emb, u, v, mode);
  router.set_partners(CrossingPartners(emb));
  return router.Run(std::nullopt).demand;
}

}  // namespace pathadd
