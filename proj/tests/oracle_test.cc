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

#include <gtest/gtest.h>

#include "oracles.h"

namespace {

using oracle::AllGraphs;
using oracle::Canonical;
using oracle::SmallGraph;

SmallGraph Complete(int n) {
  SmallGraph g;
  g.n = n;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) g.Set(i, j);
  return g;
}

SmallGraph Cycle(int n) {
  SmallGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.Set(i, (i + 1) % n);
  return g;
}

// Number of graphs on n unlabelled vertices (OEIS A000088).
TEST(OracleEnumeration, MatchesKnownCounts) {
  const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(AllGraphs(n).size(), expected[n]) << n;
}

TEST(OracleCanonical, InvariantUnderRelabelling) {
  SmallGraph g = Cycle(6);
  g.Set(0, 3);
  SmallGraph h;
  h.n = 6;
  const int perm[] = {4, 2, 5, 0, 1, 3};
  for (int j = 1; j < 6; ++j)
    for (int i = 0; i < j; ++i)
      if (g.Has(i, j)) h.Set(perm[i], perm[j]);
  EXPECT_EQ(Canonical(g), Canonical(h));
  EXPECT_NE(Canonical(Cycle(6)), Canonical(g));
}

TEST(OracleMinor, TextbookCases) {
  oracle::MinorOracle minors;
  EXPECT_TRUE(minors.IsMinor(Complete(3), Cycle(5)));
  EXPECT_FALSE(minors.IsMinor(Complete(4), Cycle(7)));
  // The wheel W_5 (hub plus 5-cycle) contracts to K_4 but not to K_5.
  SmallGraph wheel = Cycle(6);
  wheel.adj[5] = 0;
  for (int i = 0; i < 6; ++i) wheel.adj[i] &= static_cast<std::uint8_t>(~(1u << 5));
  for (int i = 0; i < 5; ++i) wheel.Set(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) wheel.Set(i, 5);
  EXPECT_TRUE(minors.IsMinor(Complete(4), wheel));
  EXPECT_FALSE(minors.IsMinor(Complete(5), wheel));
}

}  // namespace
