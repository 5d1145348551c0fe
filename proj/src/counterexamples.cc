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

#include "pathadd/counterexamples.h"

#include <algorithm>
#include <functional>
#include <map>

#include "pathadd/error.h"

namespace pathadd {
namespace {

Point At(const Rational& x, const Rational& y) { return Point{x, y}; }

}  // namespace

// The cycle v_2..v_2k is a zigzag along the x axis (odd indices raised by
// 1/4), v_1 and p sit above it, q below. Odd chords run at the raised level
// and cross the p spokes of the even vertices; even chords run at level 0
// and cross the q spokes. The chord (v_2k, v_2) detours below q and the
// spoke (q, v_1) wraps around the whole drawing, crossing it once.
ExtendedWheel MakeExtendedWheel(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "extended wheel needs k >= 2");
  const int n = 2 * k;
  ExtendedWheel xw;
  xw.p = n;
  xw.q = n + 1;
  auto v = [n](int i) { return static_cast<VertexId>(((i - 1) % n + n) % n); };
  for (int i = 1; i <= n; ++i) xw.cycle.push_back(v(i));
  Graph& g = xw.graph;
  for (VertexId x = 0; x < n + 2; ++x) g.AddVertex(x);
  for (int i = 1; i <= n; ++i) {
    g.AddEdge(v(i), v(i + 1));
    g.AddEdge(v(i), v(i + 2));
    g.AddEdge(xw.p, v(i));
    g.AddEdge(xw.q, v(i));
  }

  const Rational kk(k);
  const Rational c = kk + Rational(3) / 2;
  const Rational delta = Rational(1) / 4;
  const Rational top = kk + 1;
  auto& coords = xw.embedding.coords;
  for (int j = 2; j <= n; ++j) coords[v(j)] = At(j, j % 2 ? delta : Rational(0));
  coords[v(1)] = At(c, top);
  coords[xw.p] = At(c, kk);
  coords[xw.q] = At(c, -kk);

  const Rational low = -kk - 1;
  const Rational lower = -kk - 2;
  const Rational right = Rational(n + 1);
  if (k > 2) {
    xw.embedding.bends[Edge(v(2), v(n))] = {At(2, low), At(n, low)};
  }
  xw.embedding.bends[Edge(v(1), xw.q)] = {At(c, top + 1), At(right, top + 1),
                                          At(right, lower), At(c, lower)};
  xw.embedding.graph = g;
  return xw;
}

Graph K2q(int q) {
  if (q < 1) throw Error(ErrorCode::kInvalidArgument, "q must be positive");
  return CompleteBipartite(2, q);
}

// Diamond u_1 = (-1,0), v_1 = (0,1), u_2 = (1,0), v_2 = (0,-1); the rest on
// rational points of a circle of radius 3, spread over both half planes.
GeometricEmbedding K2qAllOutside(int q) {
  GeometricEmbedding emb;
  emb.graph = K2q(q);
  emb.coords[0] = At(-1, 0);
  emb.coords[1] = At(1, 0);
  if (q >= 1) emb.coords[2] = At(0, 1);
  if (q >= 2) emb.coords[3] = At(0, -1);
  for (int i = 3; i <= q; ++i) {
    // Stereographic parameter avoiding the axes and symmetric repeats.
    Rational t = Rational(2 * (i - 2) - 1) / (q + 1) + Rational(1) / 97;
    if (i % 2) t = -t - Rational(1) / 53;
    Rational d = 1 + t * t;
    emb.coords[i + 1] = At(3 * (1 - t * t) / d, 6 * t / d);
  }
  return emb;
}

Graph Dodecahedron() {
  static const int kLcf[] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
  Graph g;
  for (VertexId x = 0; x < 20; ++x) g.AddVertex(x);
  for (int i = 0; i < 20; ++i) {
    g.AddEdge(i, (i + 1) % 20);
    g.AddEdge(i, ((i + kLcf[i % 10]) % 20 + 20) % 20);
  }
  return g;
}

// In the dodecahedron every 5-cycle bounds a face.
std::vector<std::vector<VertexId>> DodecahedronFaces() {
  Graph g = Dodecahedron();
  std::set<std::vector<VertexId>> seen;
  std::vector<std::vector<VertexId>> faces;
  std::vector<VertexId> path;
  std::function<void()> extend = [&]() {
    VertexId last = path.back();
    if (path.size() == 5) {
      if (!g.HasEdge(last, path.front())) return;
      std::vector<VertexId> key = path;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) faces.push_back(path);
      return;
    }
    for (VertexId w : g.Neighbors(last)) {
      if (w <= path.front()) continue;
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  };
  for (VertexId s : g.Vertices()) {
    path = {s};
    extend();
  }
  return faces;
}

Graph CrossedDodecahedron() {
  Graph g = Dodecahedron();
  for (const auto& face : DodecahedronFaces()) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      g.AddEdge(face[i], face[(i + 2) % face.size()]);
    }
  }
  return g;
}

BinucciConfig BinucciConfig::Default() {
  BinucciConfig config;
  for (int i = 1; i <= 10; ++i) config.bold.push_back({i, i % 10 + 1});
  config.thin = {{1, 7}, {4, 8}};
  config.removed = {{2, 6}, {3, 9}};
  config.attach_first = {0, 1};
  config.attach_second = {5, 6};
  return config;
}

BinucciGraph MakeBinucciGraph(const BinucciConfig& config) {
  auto bad = [](const std::string& what) {
    return Error(ErrorCode::kInvalidConfiguration, what);
  };
  std::set<Edge> used;
  auto check_pair = [&](const std::pair<int, int>& pr, const char* kind) {
    auto [a, b] = pr;
    if (a < 1 || a > 10 || b < 1 || b > 10 || a == b) {
      throw bad(std::string(kind) + " pair (" + std::to_string(a) + "," +
                std::to_string(b) + ") is not a pair of skeleton vertices");
    }
    if (!used.insert(Edge(a, b)).second) {
      throw bad(std::string(kind) + " pair (" + std::to_string(a) + "," +
                std::to_string(b) + ") is listed twice");
    }
  };
  for (const auto& pr : config.bold) check_pair(pr, "bold");
  for (const auto& pr : config.thin) check_pair(pr, "thin");
  for (const auto& pr : config.removed) check_pair(pr, "removed");
  auto check_attach = [&](const std::vector<int>& attach) {
    if (attach.empty()) throw bad("blob attachment is empty");
    for (int x : attach) {
      if (x < 0 || x > 6) throw bad("blob attachment index outside 0..6");
    }
  };
  check_attach(config.attach_first);
  check_attach(config.attach_second);
  for (int x : config.attach_first) {
    if (std::count(config.attach_second.begin(), config.attach_second.end(), x)) {
      throw bad("blob vertex attached to both skeleton ends");
    }
  }

  BinucciGraph out;
  for (VertexId x = 0; x < 10; ++x) {
    out.graph.AddVertex(x);
    out.skeleton.push_back(x);
  }
  for (const auto& pr : config.bold) {
    BinucciBlob blob{pr, {}};
    for (int i = 0; i < 7; ++i) blob.vertices.push_back(out.graph.AddFreshVertex());
    for (int i = 0; i < 7; ++i) {
      for (int j = i + 1; j < 7; ++j) out.graph.AddEdge(blob.vertices[i], blob.vertices[j]);
    }
    for (int x : config.attach_first) out.graph.AddEdge(pr.first - 1, blob.vertices[x]);
    for (int x : config.attach_second) out.graph.AddEdge(pr.second - 1, blob.vertices[x]);
    out.blobs.push_back(std::move(blob));
  }
  for (const auto& [a, b] : config.thin) out.graph.AddEdge(a - 1, b - 1);
  for (const auto& [a, b] : config.removed) out.removed_targets.push_back(Edge(a - 1, b - 1));
  return out;
}

BarRingWitness MakeBarRingWitness() {
  enum : VertexId { kA, kB, kC, kD, kE, kU, kV };
  BarRingWitness w;
  w.u = kU;
  w.v = kV;
  auto& bars = w.rep.bars;
  bars[kA] = Bar{4, 0, 10};
  bars[kB] = Bar{0, 0, 10};
  bars[kC] = Bar{2, 0, 1};
  bars[kD] = Bar{3, 9, 10};
  bars[kE] = Bar{1, 9, 10};
  bars[kU] = Bar{2, 4, 6};
  bars[kV] = Bar{6, 4, 6};
  // The sight A-B passes C and the sight D-B passes E.
  const Rational left = Rational(1) / 2, right = Rational(19) / 2;
  w.rep.sights = {{kA, kB, left}, {kA, kD, right}, {kD, kB, right},
                  {kU, kB, 5}, {kV, kA, 5}};
  w.graph = GraphOfSights(w.rep);
  return w;
}

}  // namespace pathadd
