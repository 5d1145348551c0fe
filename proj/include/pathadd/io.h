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

#ifndef PATHADD_IO_H_
#define PATHADD_IO_H_

#include <string>

#include "json.hpp"
#include "pathadd/counterexamples.h"
#include "pathadd/embedding.h"
#include "pathadd/graph.h"
#include "pathadd/path_addition.h"
#include "pathadd/validators.h"
#include "pathadd/visibility.h"

namespace pathadd {

using Json = nlohmann::ordered_json;

// Rationals are written as "num/den" strings; readers also accept integers
// and decimal strings. Parse failures throw kParse.
Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

Json EmbeddingToJson(const GeometricEmbedding& emb);
GeometricEmbedding EmbeddingFromJson(const Json& j);

Json BarToJson(const BarRepresentation& rep);
BarRepresentation BarFromJson(const Json& j);

Json AlignedToJson(const AlignedBarRepresentation& rep);
AlignedBarRepresentation AlignedFromJson(const Json& j);

Json IntervalToJson(const IntervalRepresentation& rep);
IntervalRepresentation IntervalFromJson(const Json& j);

Json SpecToJson(const PathAdditionSpec& spec);
PathAdditionSpec SpecFromJson(const Json& j);

Json ReportToJson(const ValidationReport& report);
Json BudgetToJson(const BudgetReport& report);

// Kind of document stored in a JSON file, inferred from its keys:
// "bar", "aligned", "interval", "embedding" or "graph".
std::string DocumentKind(const Json& j);

Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace pathadd

#endif  // PATHADD_IO_H_
