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

#ifndef PATHADD_GEOMETRY_H_
#define PATHADD_GEOMETRY_H_

#include "pathadd/rational.h"

namespace pathadd {

enum class SegmentRelation {
  kDisjoint,
  // Interiors meet in exactly one point that is interior to both segments.
  kProperCrossing,
  // The segments meet, but at an endpoint of at least one of them.
  kTouching,
  // Collinear with a common sub-segment of positive length.
  kOverlap,
};

struct SegmentIntersection {
  SegmentRelation relation = SegmentRelation::kDisjoint;
  Point point;  // meaningful for kProperCrossing and kTouching
};

SegmentIntersection IntersectSegments(const Point& p1, const Point& p2,
                                      const Point& q1, const Point& q2);

// p lies on segment (a,b) strictly between a and b.
bool OnSegmentInterior(const Point& p, const Point& a, const Point& b);

// Counterclockwise angular order of direction vectors starting at the
// positive x-axis; exact.
bool AngleLess(const Point& a, const Point& b);

// Intersection of the lines a1 + s*(a2-a1) and b1 + t*(b2-b1); requires
// non-parallel lines.
Point LineIntersection(const Point& a1, const Point& a2, const Point& b1,
                       const Point& b2);

// Parameter s in [0,1] of the point p on segment (a,b) (p assumed on it).
Rational SegmentParameter(const Point& p, const Point& a, const Point& b);

}  // namespace pathadd

#endif  // PATHADD_GEOMETRY_H_
