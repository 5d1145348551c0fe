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

#include "pathadd/export.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace pathadd {
namespace {

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Maps world coordinates (y up) to a 600x600 canvas with a margin.
class Canvas {
 public:
  void Include(double x, double y) {
    lo_x_ = std::min(lo_x_, x);
    hi_x_ = std::max(hi_x_, x);
    lo_y_ = std::min(lo_y_, y);
    hi_y_ = std::max(hi_y_, y);
  }
  double X(double x) const { return 30 + (x - lo_x_) * Scale(); }
  double Y(double y) const { return 30 + (hi_y_ - y) * Scale(); }
  double Scale() const {
    double span = std::max(hi_x_ - lo_x_, hi_y_ - lo_y_);
    return span > 0 ? 540 / span : 1;
  }
  std::string Open() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\">\n"
           "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  }
  std::string Line(double x1, double y1, double x2, double y2, const char* style) const {
    return "<line x1=\"" + Fmt(X(x1)) + "\" y1=\"" + Fmt(Y(y1)) + "\" x2=\"" + Fmt(X(x2)) +
           "\" y2=\"" + Fmt(Y(y2)) + "\" " + style + "/>\n";
  }
  std::string Dot(double x, double y, double r, const char* style) const {
    return "<circle cx=\"" + Fmt(X(x)) + "\" cy=\"" + Fmt(Y(y)) + "\" r=\"" + Fmt(r) +
           "\" " + style + "/>\n";
  }
  std::string Label(double x, double y, const std::string& text) const {
    return "<text x=\"" + Fmt(X(x) + 5) + "\" y=\"" + Fmt(Y(y) - 5) +
           "\" font-size=\"11\">" + text + "</text>\n";
  }

 private:
  double lo_x_ = std::numeric_limits<double>::infinity();
  double hi_x_ = -std::numeric_limits<double>::infinity();
  double lo_y_ = std::numeric_limits<double>::infinity();
  double hi_y_ = -std::numeric_limits<double>::infinity();
};

}  // namespace

std::string GraphToDot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.Vertices()) out << "  " << v << ";\n";
  for (const Edge& e : g.Edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

std::string EmbeddingToDot(const GeometricEmbedding& emb) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=point];\n";
  for (VertexId v : emb.graph.Vertices()) {
    const Point& p = emb.coords.at(v);
    out << "  " << v << " [pos=\"" << ToDouble(p.x) << "," << ToDouble(p.y) << "!\", xlabel=\""
        << v << "\"];\n";
  }
  for (const Edge& e : emb.graph.Edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

std::string EmbeddingToSvg(const GeometricEmbedding& emb, bool mark_crossings) {
  Canvas c;
  for (const auto& [v, p] : emb.coords) c.Include(ToDouble(p.x), ToDouble(p.y));
  for (const auto& [e, pts] : emb.bends) {
    for (const Point& p : pts) c.Include(ToDouble(p.x), ToDouble(p.y));
  }
  std::string svg = c.Open();
  for (const Edge& e : emb.graph.Edges()) {
    std::vector<Point> poly = emb.Polyline(e);
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
      svg += c.Line(ToDouble(poly[i].x), ToDouble(poly[i].y), ToDouble(poly[i + 1].x),
                    ToDouble(poly[i + 1].y), "stroke=\"black\" stroke-width=\"1.2\"");
    }
  }
  if (mark_crossings) {
    for (const Crossing& x : ComputeCrossings(emb)) {
      svg += c.Dot(ToDouble(x.point.x), ToDouble(x.point.y), 3, "fill=\"red\"");
    }
  }
  for (const auto& [v, p] : emb.coords) {
    svg += c.Dot(ToDouble(p.x), ToDouble(p.y), 4, "fill=\"steelblue\"");
    svg += c.Label(ToDouble(p.x), ToDouble(p.y), std::to_string(v));
  }
  return svg + "</svg>\n";
}

std::string BarToSvg(const BarRepresentation& rep) {
  Canvas c;
  for (const auto& [v, b] : rep.bars) {
    c.Include(ToDouble(b.x_lo), ToDouble(b.y));
    c.Include(ToDouble(b.x_hi), ToDouble(b.y));
  }
  std::string svg = c.Open();
  for (const Sight& s : rep.sights) {
    const Bar& a = rep.bars.at(s.a);
    const Bar& b = rep.bars.at(s.b);
    // Sights that pass a bar are drawn highlighted.
    const char* style = TraversedBars(rep, s).empty()
                            ? "stroke=\"gray\" stroke-dasharray=\"3,2\""
                            : "stroke=\"red\" stroke-dasharray=\"3,2\"";
    svg += c.Line(ToDouble(s.x), ToDouble(a.y), ToDouble(s.x), ToDouble(b.y), style);
  }
  for (const auto& [v, b] : rep.bars) {
    svg += c.Line(ToDouble(b.x_lo), ToDouble(b.y), ToDouble(b.x_hi), ToDouble(b.y),
                  "stroke=\"black\" stroke-width=\"4\"");
    svg += c.Label(ToDouble(b.x_lo), ToDouble(b.y), std::to_string(v));
  }
  return svg + "</svg>\n";
}

std::string AlignedToSvg(const AlignedBarRepresentation& rep) {
  Canvas c;
  for (const auto& [v, b] : rep.bars) {
    c.Include(ToDouble(b.x), 0);
    c.Include(ToDouble(b.x), ToDouble(b.height));
  }
  std::string svg = c.Open();
  for (const AlignedSight& s : rep.sights) {
    const char* style = TraversedBars(rep, s).empty()
                            ? "stroke=\"gray\" stroke-dasharray=\"3,2\""
                            : "stroke=\"red\" stroke-dasharray=\"3,2\"";
    svg += c.Line(ToDouble(rep.bars.at(s.a).x), ToDouble(s.y), ToDouble(rep.bars.at(s.b).x),
                  ToDouble(s.y), style);
  }
  for (const auto& [v, b] : rep.bars) {
    svg += c.Line(ToDouble(b.x), 0, ToDouble(b.x), ToDouble(b.height),
                  "stroke=\"black\" stroke-width=\"4\"");
    svg += c.Label(ToDouble(b.x), ToDouble(b.height), std::to_string(v));
  }
  return svg + "</svg>\n";
}

// Intervals stacked one per row in vertex order.
std::string IntervalToSvg(const IntervalRepresentation& rep) {
  Canvas c;
  int row = 0;
  for (const auto& [v, iv] : rep.intervals) {
    c.Include(ToDouble(iv.lo), row);
    c.Include(ToDouble(iv.hi), row);
    ++row;
  }
  std::string svg = c.Open();
  row = 0;
  for (const auto& [v, iv] : rep.intervals) {
    svg += c.Line(ToDouble(iv.lo), row, ToDouble(iv.hi), row,
                  "stroke=\"black\" stroke-width=\"3\"");
    svg += c.Label(ToDouble(iv.lo), row, std::to_string(v));
    ++row;
  }
  return svg + "</svg>\n";
}

}  // namespace pathadd
