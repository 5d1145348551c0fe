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

#include "pathadd/rational.h"

#include <cmath>

#include "pathadd/error.h"

namespace pathadd {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kMissingEdge: return "missing-edge";
    case ErrorCode::kUnknownVertex: return "unknown-vertex";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kDegenerateDrawing: return "degenerate-drawing";
    case ErrorCode::kMalformedRepresentation: return "malformed-representation";
    case ErrorCode::kCoverage: return "coverage";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kShortPath: return "short-path";
    case ErrorCode::kStaleVertex: return "stale-vertex";
    case ErrorCode::kBadSupplementary: return "bad-supplementary";
    case ErrorCode::kBudget: return "budget";
    case ErrorCode::kValidatorRegression: return "validator-regression";
    case ErrorCode::kInvalidConfiguration: return "invalid-configuration";
    case ErrorCode::kNoSeparatingCycle: return "no-separating-cycle";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty rational");
  auto dot = s.find('.');
  Rational value;
  try {
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) {
        throw Error(ErrorCode::kParse, "mixed decimal/fraction: " + s);
      }
      bool negative = s[0] == '-';
      std::string digits = s.substr(negative ? 1 : 0);
      dot = digits.find('.');
      std::string whole = digits.substr(0, dot);
      std::string frac = digits.substr(dot + 1);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      mpz_class num((whole.empty() ? "0" : whole) + frac, 10);
      value = Rational(num, den);
      if (negative) value = -value;
    } else {
      value = Rational(s, 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParse, "not a rational: " + s);
  }
  if (value.get_den() == 0) throw Error(ErrorCode::kParse, "zero denominator");
  value.canonicalize();
  return value;
}

std::string FormatRational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational RationalFromDouble(double value, int bits) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite design value");
  }
  double scaled = std::ldexp(value, bits);
  mpz_class num(std::nearbyint(scaled));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int Sign(const Rational& value) { return sgn(value); }

int Orientation(const Point& a, const Point& b, const Point& c) {
  return Sign(Cross(b - a, c - a));
}

Point MakePoint(double x, double y, int bits) {
  return {RationalFromDouble(x, bits), RationalFromDouble(y, bits)};
}

Point MakePoint(long x_num, long y_num) {
  return {Rational(x_num), Rational(y_num)};
}

}  // namespace pathadd
