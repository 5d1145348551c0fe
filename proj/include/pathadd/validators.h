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

#ifndef PATHADD_VALIDATORS_H_
#define PATHADD_VALIDATORS_H_

#include <string>
#include <vector>

#include "pathadd/embedding.h"

namespace pathadd {

// One violation. `edges` lists the edges involved, in the order documented by
// each check; `apex` is the shared fan vertex where that applies, else -1.
struct Witness {
  std::vector<Edge> edges;
  VertexId apex = -1;
  std::string note;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct ValidationReport {
  bool verdict = true;
  std::vector<Witness> witnesses;

  void Add(Witness w) {
    witnesses.push_back(std::move(w));
    verdict = false;
  }
};

// Per-edge crossing partners of a valid drawing.
std::map<Edge, std::set<Edge>> CrossingPartners(const GeometricEmbedding& emb);

// Witness: [edge, partner...] for each edge with more than k crossings.
ValidationReport CheckKPlanar(const GeometricEmbedding& emb, int k);

// Witness: one set of k mutually crossing edges (only the first found).
ValidationReport CheckQuasiPlanar(const GeometricEmbedding& emb, int k = 3);

// Witness: [edge, fan edge 1, fan edge 2] with the apex they share.
ValidationReport CheckFanCrossingFree(const GeometricEmbedding& emb);

// Witness: [edge, crosser 1, crosser 2] with two crossers that have no common
// endpoint. With `strict`, crossers sharing the apex must also cross the edge
// from the same side.
ValidationReport CheckFanPlanar(const GeometricEmbedding& emb,
                                bool strict = false);

// Witness: [edge a, edge b] for each crossing whose direction vectors have a
// nonzero dot product. Requires straight-line edges or checks the actual
// crossing segments of polylines.
ValidationReport CheckRac(const GeometricEmbedding& emb);

}  // namespace pathadd

#endif  // PATHADD_VALIDATORS_H_
