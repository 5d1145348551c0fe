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

#ifndef PATHADD_TABLE1_H_
#define PATHADD_TABLE1_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pathadd/io.h"

namespace pathadd {

// Evidence kinds: "constructive demo", "budget argument", "out-of-scope note".
struct ClosureRow {
  std::string name;
  // Expected entries for path-addition, subdivision, contraction.
  std::string expected_path_addition;
  std::string expected_subdivision;
  std::string expected_contraction;
  // "+", "-", "not checked" or "failed".
  std::string verdict;
  std::string evidence_kind;
  Json evidence;
  // Filled only where a sampled subdivision check exists.
  std::string subdivision_check;
  std::vector<std::string> artifacts;
};

struct Table1Report {
  std::uint64_t seed = 0;
  int scale = 1;
  std::vector<ClosureRow> rows;
};

// "small" = 1, "medium" = 2, "large" = 4, or a positive integer up to 8.
int ParseScale(const std::string& text);

// Runs every row deterministically from `seed`. Individual failures are
// recorded in the row. When `artifact_dir` is non-empty, replayable inputs
// and outputs are written there and listed per row.
Table1Report RunTable1Report(std::uint64_t seed, int scale,
                             const std::string& artifact_dir = "");

Json Table1ToJson(const Table1Report& report);

// Subdivides the straight edge `e` strictly between its first endpoint and
// the nearest crossing on it. Used to sample the subdivision column.
GeometricEmbedding SubdivideDrawnEdge(const GeometricEmbedding& emb, const Edge& e,
                                      VertexId* fresh = nullptr);

}  // namespace pathadd

#endif  // PATHADD_TABLE1_H_
