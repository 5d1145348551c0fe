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

#include "pathadd/validators.h"

#include <algorithm>
#include <functional>

#include "pathadd/error.h"

namespace pathadd {

std::map<Edge, std::set<Edge>> CrossingPartners(const GeometricEmbedding& emb) {
  std::map<Edge, std::set<Edge>> partners;
  for (const Edge& e : emb.graph.Edges()) partners[e];
  for (const Crossing& c : ComputeCrossings(emb)) {
    partners[c.edge_a].insert(c.edge_b);
    partners[c.edge_b].insert(c.edge_a);
  }
  return partners;
}

ValidationReport CheckKPlanar(const GeometricEmbedding& emb, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
  // Count crossings, not partners: a polyline pair may cross more than once.
  std::map<Edge, std::vector<Edge>> hits;
  for (const Crossing& c : ComputeCrossings(emb)) {
    hits[c.edge_a].push_back(c.edge_b);
    hits[c.edge_b].push_back(c.edge_a);
  }
  ValidationReport report;
  for (auto& [e, others] : hits) {
    if (static_cast<int>(others.size()) <= k) continue;
    Witness w;
    w.edges.push_back(e);
    std::sort(others.begin(), others.end());
    w.edges.insert(w.edges.end(), others.begin(), others.end());
    w.note = std::to_string(others.size()) + " crossings";
    report.Add(std::move(w));
  }
  return report;
}

ValidationReport CheckQuasiPlanar(const GeometricEmbedding& emb, int k) {
  if (k < 3) throw Error(ErrorCode::kInvalidArgument, "quasi-planarity needs k >= 3");
  auto partners = CrossingPartners(emb);
  ValidationReport report;
  std::vector<Edge> chosen;
  // Clique search in the crossing graph, candidates kept in increasing order.
  std::function<bool(const std::vector<Edge>&)> grow =
      [&](const std::vector<Edge>& candidates) {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          const Edge& e = candidates[i];
          std::vector<Edge> next;
          for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (partners[e].count(candidates[j])) next.push_back(candidates[j]);
          }
          if (chosen.size() + 1 + next.size() < static_cast<std::size_t>(k)) continue;
          chosen.push_back(e);
          if (grow(next)) return true;
          chosen.pop_back();
        }
        return false;
      };
  std::vector<Edge> all;
  for (const auto& [e, p] : partners) {
    if (static_cast<int>(p.size()) >= k - 1) all.push_back(e);
  }
  if (grow(all)) {
    report.Add({chosen, -1, std::to_string(k) + " mutually crossing edges"});
  }
  return report;
}

ValidationReport CheckFanCrossingFree(const GeometricEmbedding& emb) {
  auto partners = CrossingPartners(emb);
  ValidationReport report;
  for (const auto& [e, crossers] : partners) {
    std::vector<Edge> list(crossers.begin(), crossers.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const Edge& f = list[i];
        const Edge& h = list[j];
        if (!f.SharesEndpoint(h)) continue;
        VertexId apex = h.Has(f.a) ? f.a : f.b;
        report.Add({{e, f, h}, apex, "edge crosses a fan"});
      }
    }
  }
  return report;
}

namespace {

// Sign of the crossing of `crosser`, oriented away from `apex`, over the
// crossing segment of `e`.
int CrossingSide(const GeometricEmbedding& emb, const Crossing& c,
                 const Edge& e, VertexId apex) {
  bool e_is_a = c.edge_a == e;
  const Edge& crosser = e_is_a ? c.edge_b : c.edge_a;
  int seg_e = e_is_a ? c.segment_a : c.segment_b;
  int seg_c = e_is_a ? c.segment_b : c.segment_a;
  std::vector<Point> le = emb.Polyline(e);
  std::vector<Point> lc = emb.Polyline(crosser);
  Point de = le[seg_e + 1] - le[seg_e];
  Point dc = lc[seg_c + 1] - lc[seg_c];
  if (crosser.b == apex) dc = Point{} - dc;
  return Sign(Cross(de, dc));
}

}  // namespace

ValidationReport CheckFanPlanar(const GeometricEmbedding& emb, bool strict) {
  std::vector<Crossing> crossings = ComputeCrossings(emb);
  std::map<Edge, std::set<Edge>> partners;
  for (const Crossing& c : crossings) {
    partners[c.edge_a].insert(c.edge_b);
    partners[c.edge_b].insert(c.edge_a);
  }
  ValidationReport report;
  for (const auto& [e, crossers] : partners) {
    std::vector<Edge> list(crossers.begin(), crossers.end());
    bool independent_pair = false;
    for (std::size_t i = 0; i < list.size() && !independent_pair; ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (!list[i].SharesEndpoint(list[j])) {
          report.Add({{e, list[i], list[j]}, -1, "crossers have no common endpoint"});
          independent_pair = true;
          break;
        }
      }
    }
    if (independent_pair || list.size() < 2) continue;
    // Pairwise adjacent crossers either share one apex or form a triangle.
    VertexId apex = -1;
    for (VertexId cand : {list[0].a, list[0].b}) {
      if (std::all_of(list.begin(), list.end(),
                      [&](const Edge& f) { return f.Has(cand); })) {
        apex = cand;
      }
    }
    if (apex < 0) {
      report.Add({{e, list[0], list[1], list[2]}, -1, "crossers form a triangle"});
      continue;
    }
    if (!strict) continue;
    int side = 0;
    for (const Crossing& c : crossings) {
      if (c.edge_a != e && c.edge_b != e) continue;
      int s = CrossingSide(emb, c, e, apex);
      if (side != 0 && s != side) {
        report.Add({{e, list[0], list[1]}, apex, "fan crosses from both sides"});
        break;
      }
      side = s;
    }
  }
  return report;
}

ValidationReport CheckRac(const GeometricEmbedding& emb) {
  ValidationReport report;
  for (const Crossing& c : ComputeCrossings(emb)) {
    std::vector<Point> la = emb.Polyline(c.edge_a);
    std::vector<Point> lb = emb.Polyline(c.edge_b);
    Point da = la[c.segment_a + 1] - la[c.segment_a];
    Point db = lb[c.segment_b + 1] - lb[c.segment_b];
    if (Dot(da, db) != 0) {
      report.Add({{c.edge_a, c.edge_b}, -1, "crossing angle is not right"});
    }
  }
  return report;
}

}  // namespace pathadd
