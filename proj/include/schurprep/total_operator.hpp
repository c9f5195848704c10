// Copyright 2026 The schurprep Authors
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

#ifndef SCHURPREP_TOTAL_OPERATOR_HPP
#define SCHURPREP_TOTAL_OPERATOR_HPP

#include <Eigen/Sparse>
#include <cstdint>

#include "schurprep/state.hpp"

namespace schurprep {

/// One-site generator summed over all N sites:
/// Lambda_{i,j} = sum_k I x ... x Q_{i,j} x ... x I with Q_{i,j} = E_{i,j}
/// for i != j and Q_{i,i} = E_{i,i} - E_{i+1,i+1} (Cartan, i <= d-1).
struct TotalOperator {
  int d = 0;
  int N = 0;
  int i = 0;
  int j = 0;
  Eigen::SparseMatrix<double> matrix;
};

/// 1-based i, j. Cartan case i == j requires i <= d-1.
TotalOperator total_operator(int i, int j, int d, int N,
                             std::int64_t cap = kDefaultDenseCap);

/// Adjacent-site transposition operator swapping sites k and k+1 (1-based).
Eigen::SparseMatrix<double> transposition_operator(int k, int d, int N,
                                                   std::int64_t cap = kDefaultDenseCap);

}  // namespace schurprep

#endif
