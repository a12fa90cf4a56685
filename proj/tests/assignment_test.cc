//
// Copyright 2026 The bias-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


#include "biaskit/assignment.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.h"

namespace biaskit {
namespace {

SimilarityMatrix Matrix(const std::vector<std::vector<double>>& rows) {
  SimilarityMatrix m;
  m.rows = static_cast<int>(rows.size());
  m.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& r : rows) m.values.insert(m.values.end(), r.begin(), r.end());
  return m;
}

TEST(AssignmentTest, PicksOffDiagonalWhenBetter) {
  Assignment a = MaxWeightAssignment(Matrix({{1, 5}, {5, 1}}));
  EXPECT_DOUBLE_EQ(a.total, 10.0);
  EXPECT_EQ(a.row_to_col, (std::vector<int>{1, 0}));
}

TEST(AssignmentTest, Rectangular) {
  Assignment wide = MaxWeightAssignment(Matrix({{0.2, 0.9, 0.1}}));
  EXPECT_EQ(wide.row_to_col, (std::vector<int>{1}));
  Assignment tall = MaxWeightAssignment(Matrix({{0.2}, {0.7}, {0.1}}));
  EXPECT_EQ(tall.row_to_col, (std::vector<int>{-1, 0, -1}));
  EXPECT_DOUBLE_EQ(tall.total, 0.7);
}

TEST(AssignmentTest, Empty) {
  EXPECT_EQ(MaxWeightAssignment(Matrix({})).total, 0.0);
}

TEST(AssignmentPropertyTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int rows = dim(rng);
    const int cols = dim(rng);
    std::vector<std::vector<double>> w(rows, std::vector<double>(cols));
    for (auto& r : w) {
      for (double& x : r) {
        x = trial % 3 == 0 ? std::floor(value(rng) * 3) : value(rng);
      }
    }
    Assignment a = MaxWeightAssignment(Matrix(w));
    ASSERT_NEAR(a.total, testing::OracleBestAlignment(w), 1e-9);
    double sum = 0.0;
    std::set<int> cols_used;
    for (int r = 0; r < rows; ++r) {
      if (a.row_to_col[r] < 0) continue;
      ASSERT_TRUE(cols_used.insert(a.row_to_col[r]).second);
      sum += w[r][a.row_to_col[r]];
    }
    ASSERT_NEAR(sum, a.total, 1e-9);
  }
}

}  // namespace
}  // namespace biaskit
