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

#include "pathadd/geometry.h"

#include <algorithm>

#include "pathadd/error.h"

namespace pathadd {

namespace {

bool BoxesDisjoint(const Point& p1, const Point& p2, const Point& q1,
                   const Point& q2) {
  const Rational& pminx = p1.x < p2.x ? p1.x : p2.x;
  const Rational& pmaxx = p1.x < p2.x ? p2.x : p1.x;
  const Rational& qminx = q1.x < q2.x ? q1.x : q2.x;
  const Rational& qmaxx = q1.x < q2.x ? q2.x : q1.x;
  if (pmaxx < qminx || qmaxx < pminx) return true;
  const Rational& pminy = p1.y < p2.y ? p1.y : p2.y;
  const Rational& pmaxy = p1.y < p2.y ? p2.y : p1.y;
  const Rational& qminy = q1.y < q2.y ? q1.y : q2.y;
  const Rational& qmaxy = q1.y < q2.y ? q2.y : q1.y;
  return pmaxy < qminy || qmaxy < pminy;
}

// For collinear c: is c within the closed bounding box of (a,b)?
bool Within(const Point& c, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

}  // namespace

bool OnSegmentInterior(const Point& p, const Point& a, const Point& b) {
  if (p == a || p == b) return false;
  if (Orientation(a, b, p) != 0) return false;
  return Within(p, a, b);
}

SegmentIntersection IntersectSegments(const Point& p1, const Point& p2,
                                      const Point& q1, const Point& q2) {
  SegmentIntersection out;
  if (BoxesDisjoint(p1, p2, q1, q2)) return out;
  int o1 = Orientation(p1, p2, q1);
  int o2 = Orientation(p1, p2, q2);
  int o3 = Orientation(q1, q2, p1);
  int o4 = Orientation(q1, q2, p2);
  if (o1 == 0 && o2 == 0) {
    // Collinear: order the four points along the common line.
    Point d = p2 - p1;
    Rational tq1 = Dot(q1 - p1, d);
    Rational tq2 = Dot(q2 - p1, d);
    Rational lo = std::max(Rational(0), std::min(tq1, tq2));
    Rational hi = std::min(Dot(d, d), std::max(tq1, tq2));
    if (lo > hi) return out;
    if (lo < hi) {
      out.relation = SegmentRelation::kOverlap;
      return out;
    }
    out.relation = SegmentRelation::kTouching;
    out.point = p1 + (lo / Dot(d, d)) * d;
    return out;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return out;
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    out.relation = SegmentRelation::kProperCrossing;
    out.point = LineIntersection(p1, p2, q1, q2);
    return out;
  }
  out.relation = SegmentRelation::kTouching;
  if (o1 == 0) out.point = q1;
  else if (o2 == 0) out.point = q2;
  else if (o3 == 0) out.point = p1;
  else out.point = p2;
  return out;
}

bool AngleLess(const Point& a, const Point& b) {
  auto half = [](const Point& p) {
    return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return Cross(a, b) > 0;
}

Point LineIntersection(const Point& a1, const Point& a2, const Point& b1,
                       const Point& b2) {
  Point r = a2 - a1;
  Point s = b2 - b1;
  Rational denom = Cross(r, s);
  if (denom == 0) {
    throw Error(ErrorCode::kInvalidArgument, "parallel lines");
  }
  Rational t = Cross(b1 - a1, s) / denom;
  return a1 + t * r;
}

Rational SegmentParameter(const Point& p, const Point& a, const Point& b) {
  Point d = b - a;
  return Dot(p - a, d) / Dot(d, d);
}

}  // namespace pathadd
