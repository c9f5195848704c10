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

#include "schurprep/total_operator.hpp"

#include <vector>

#include "schurprep/errors.hpp"

namespace schurprep {

TotalOperator total_operator(int i, int j, int d, int N, std::int64_t cap) {
  if (i < 1 || i > d || j < 1 || j > d)
    throw ValidationError("generator index out of range (1..d)");
  if (i == j && i > d - 1)
    throw ValidationError("Cartan generator index must satisfy i <= d-1");
  const std::int64_t dim = dense_dimension(d, N, cap);

  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<std::int64_t> site_stride(static_cast<size_t>(N));
  {
    std::int64_t s = 1;
    for (int k = N; k >= 1; --k) {
      site_stride[static_cast<size_t>(k - 1)] = s;
      s *= d;
    }
  }
  for (std::int64_t x = 0; x < dim; ++x) {
    for (int k = 1; k <= N; ++k) {
      const std::int64_t stride = site_stride[static_cast<size_t>(k - 1)];
      const int digit = static_cast<int>((x / stride) % d);
      if (i == j) {
        if (digit == i - 1) triplets.emplace_back(x, x, 1.0);
        if (digit == i) triplets.emplace_back(x, x, -1.0);
      } else {
        // E_{i,j} maps level j to level i.
        if (digit == j - 1) {
          const std::int64_t y = x + static_cast<std::int64_t>((i - 1) - (j - 1)) * stride;
          triplets.emplace_back(y, x, 1.0);
        }
      }
    }
  }
  TotalOperator op;
  op.d = d;
  op.N = N;
  op.i = i;
  op.j = j;
  op.matrix.resize(dim, dim);
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

Eigen::SparseMatrix<double> transposition_operator(int k, int d, int N, std::int64_t cap) {
  if (k < 1 || k >= N) throw ValidationError("transposition site out of range (1..N-1)");
  const std::int64_t dim = dense_dimension(d, N, cap);
  std::int64_t stride_k = 1;
  for (int t = 0; t < N - k - 1; ++t) stride_k *= d;  // stride of site k+1
  const std::int64_t stride_km = stride_k * d;        // stride of site k

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<size_t>(dim));
  for (std::int64_t x = 0; x < dim; ++x) {
    const int a = static_cast<int>((x / stride_km) % d);
    const int b = static_cast<int>((x / stride_k) % d);
    const std::int64_t y = x + static_cast<std::int64_t>(b - a) * stride_km +
                           static_cast<std::int64_t>(a - b) * stride_k;
    triplets.emplace_back(y, x, 1.0);
  }
  Eigen::SparseMatrix<double> m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

}  // namespace schurprep
