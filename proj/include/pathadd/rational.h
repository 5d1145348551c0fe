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

#ifndef PATHADD_RATIONAL_H_
#define PATHADD_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace pathadd {

using Rational = mpq_class;

// Parses "num/den", "num" or a plain decimal such as "-1.25". The result is
// canonicalized.
Rational ParseRational(std::string_view text);

// Always "num/den" with a positive denominator.
std::string FormatRational(const Rational& value);

// Nearest rational with denominator 2^bits; used to snap floating-point design
// values into exact coordinates.
Rational RationalFromDouble(double value, int bits = 40);

inline double ToDouble(const Rational& value) { return value.get_d(); }

int Sign(const Rational& value);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline Point operator+(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y};
}
inline Point operator-(const Point& a, const Point& b) {
  return {a.x - b.x, a.y - b.y};
}
inline Point operator*(const Rational& s, const Point& p) {
  return {s * p.x, s * p.y};
}

inline Rational Dot(const Point& a, const Point& b) {
  return a.x * b.x + a.y * b.y;
}
inline Rational Cross(const Point& a, const Point& b) {
  return a.x * b.y - a.y * b.x;
}
// Rotation by +90 degrees.
inline Point Perp(const Point& p) { return {-p.y, p.x}; }

// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
int Orientation(const Point& a, const Point& b, const Point& c);

Point MakePoint(double x, double y, int bits = 40);
Point MakePoint(long x_num, long y_num);

}  // namespace pathadd

#endif  // PATHADD_RATIONAL_H_
