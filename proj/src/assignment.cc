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

#include <algorithm>
#include <limits>

namespace biaskit {

Assignment MaxWeightAssignment(const SimilarityMatrix& similarity) {
  Assignment result;
  result.row_to_col.assign(similarity.rows, -1);
  const int n = std::max(similarity.rows, similarity.cols);
  if (n == 0) return result;

  double max_value = 0.0;
  for (double v : similarity.values) max_value = std::max(max_value, v);
  // Minimize cost = max - similarity over the zero-padded square matrix.
  auto cost = [&](int r, int c) {
    const bool real = r < similarity.rows && c < similarity.cols;
    return max_value - (real ? similarity.at(r, c) : 0.0);
  };

  // Potentials u (rows) and v (columns), 1-based with a virtual column 0.
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(n + 1, 0.0);
  std::vector<int> col_owner(n + 1, 0);
  std::vector<int> way(n + 1, 0);
  for (int row = 1; row <= n; ++row) {
    col_owner[0] = row;
    int col = 0;
    std::vector<double> min_slack(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col] = true;
      const int r = col_owner[col];
      double delta = kInf;
      int next = 0;
      for (int c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const double slack = cost(r - 1, c - 1) - u[r] - v[c];
        if (slack < min_slack[c]) {
          min_slack[c] = slack;
          way[c] = col;
        }
        if (min_slack[c] < delta) {
          delta = min_slack[c];
          next = c;
        }
      }
      for (int c = 0; c <= n; ++c) {
        if (used[c]) {
          u[col_owner[c]] += delta;
          v[c] -= delta;
        } else {
          min_slack[c] -= delta;
        }
      }
      col = next;
    } while (col_owner[col] != 0);
    do {
      const int prev = way[col];
      col_owner[col] = col_owner[prev];
      col = prev;
    } while (col != 0);
  }

  for (int c = 1; c <= n; ++c) {
    const int r = col_owner[c] - 1;
    if (r < similarity.rows && c - 1 < similarity.cols) {
      result.row_to_col[r] = c - 1;
      result.total += similarity.at(r, c - 1);
    }
  }
  return result;
}

}  // namespace biaskit
