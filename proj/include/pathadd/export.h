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

#ifndef PATHADD_EXPORT_H_
#define PATHADD_EXPORT_H_

#include <string>

#include "pathadd/embedding.h"
#include "pathadd/graph.h"
#include "pathadd/visibility.h"

namespace pathadd {

// Graphviz; drawings pin vertices with pos attributes.
std::string GraphToDot(const Graph& g);
std::string EmbeddingToDot(const GeometricEmbedding& emb);

// SVG in double precision, scaled to fit a 600x600 canvas.
std::string EmbeddingToSvg(const GeometricEmbedding& emb, bool mark_crossings = true);
std::string BarToSvg(const BarRepresentation& rep);
std::string AlignedToSvg(const AlignedBarRepresentation& rep);
std::string IntervalToSvg(const IntervalRepresentation& rep);

}  // namespace pathadd

#endif  // PATHADD_EXPORT_H_
