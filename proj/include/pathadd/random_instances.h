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

#ifndef PATHADD_RANDOM_INSTANCES_H_
#define PATHADD_RANDOM_INSTANCES_H_

#include <cstdint>
#include <random>

#include "pathadd/embedding.h"
#include "pathadd/visibility.h"

namespace pathadd {

// Seeded generator; bounded draws avoid library-specific distributions so
// sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [lo, hi].
  int Uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool Coin() { return Uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Crossing-free straight-line triangulation on n >= 3 vertices: a large
// triangle repeatedly split at random interior points.
GeometricEmbedding RandomStackedTriangulation(int n, Rng& rng);

// Adds up to `count` chords, each the second diagonal of a convex
// quadrilateral formed by two adjacent triangular faces; faces are used at
// most once so every edge ends with at most one crossing.
GeometricEmbedding AddRandomCrossings(const GeometricEmbedding& triangulation,
                                      int count, Rng& rng);

// Random bars on a few rows; every pair that sees through at most one bar
// gets a sight, so the result is a strong bar 1-visibility representation.
BarRepresentation RandomBarRepresentation(int n, Rng& rng);

// Bars at columns 0..n-1 with random heights; every pair seeing through at
// most one bar gets a sight just below the lower top.
AlignedBarRepresentation RandomAlignedRepresentation(int n, Rng& rng);

IntervalRepresentation RandomIntervalRepresentation(int n, Rng& rng);

}  // namespace pathadd

#endif  // PATHADD_RANDOM_INSTANCES_H_
