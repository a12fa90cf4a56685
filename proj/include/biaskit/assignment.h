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

#ifndef BIASKIT_ASSIGNMENT_H_
#define BIASKIT_ASSIGNMENT_H_

#include <vector>

namespace biaskit {

// Row-major rows x cols similarity matrix.
struct SimilarityMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  double at(int r, int c) const { return values[r * cols + c]; }
};

struct Assignment {
  // column matched to each row, -1 when the row is left unmatched
  std::vector<int> row_to_col;
  double total = 0.0;
};

// Maximum-weight one-to-one matching (Hungarian method, O(n^3) on the padded
// square matrix). Rectangular inputs leave the surplus rows or columns
// unmatched.
Assignment MaxWeightAssignment(const SimilarityMatrix& similarity);

}  // namespace biaskit

#endif  // BIASKIT_ASSIGNMENT_H_
