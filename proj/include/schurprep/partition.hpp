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

#ifndef SCHURPREP_PARTITION_HPP
#define SCHURPREP_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "schurprep/bigint.hpp"

namespace schurprep {

/// Integer partition (Young diagram row lengths). Stored in canonical form:
/// nonincreasing, trailing zeros stripped. When a partition serves as a U(d)
/// irrep label it is zero-padded to length d on demand via padded().
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition single_row(int n);     // (n)
  static Partition single_column(int n);  // (1^n)

  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < rows() ? parts_[static_cast<size_t>(i)] : 0; }
  int sum() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> padded(int d) const;

  /// Conjugate (transpose) diagram; number of columns = part(0).
  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "(3,2)" or, with d > 0, zero-padded "(3,2,0)".
  std::string str(int d = 0) const;

 private:
  std::vector<int> parts_;
};

/// p_d(N): partitions of N with at most d parts. Exact; O(Nd) dynamic program.
BigInt count_partitions(int N, int d);

/// All partitions of N with at most d parts, descending lexicographic order
/// (largest first part first).
std::vector<Partition> enumerate_partitions(int N, int d);

/// Weyl dimension of the U(d) irrep with highest weight lambda,
/// prod_{i<j} (l_i - l_j + j - i)/(j - i), computed as an exact rational
/// product reduced at every step.
BigInt weyl_dimension(const Partition& lambda, int d);

/// Dimension of the S_N irrep labeled by lambda (hook length formula).
BigInt sym_group_dimension(const Partition& lambda);

/// The almost-rectangular diagram for N = qd + r: r rows of q+1, d-r rows of q.
Partition balanced_shape(int N, int d);

/// lambda_d = 0, lambda_i = zeta_i + lambda_{i+1}.
Partition partition_from_dynkin(const std::vector<int>& zeta);

/// zeta_i = lambda_i - lambda_{i+1}, i = 1..d-1.
std::vector<int> dynkin_from_partition(const Partition& lambda, int d);

}  // namespace schurprep

#endif
