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

#ifndef SCHURPREP_GT_PATTERN_HPP
#define SCHURPREP_GT_PATTERN_HPP

#include <compare>
#include <string>
#include <vector>

#include "schurprep/partition.hpp"

namespace schurprep {

/// Gelfand-Tsetlin pattern for U(d): a triangular integer array whose row r
/// (r = 1..d, counted from the bottom) has r entries and whose top row is the
/// irrep label. Rows must interlace: x_{r+1,j} >= x_{r,j} >= x_{r+1,j+1}.
class GTPattern {
 public:
  GTPattern() = default;
  /// rows[k] is the row with k+1 entries (rows[d-1] is the top row).
  /// Throws ValidationError if the triangular shape is wrong; interlacing is
  /// checked separately by validate_gt.
  explicit GTPattern(std::vector<std::vector<int>> rows);

  int depth() const { return static_cast<int>(rows_.size()); }  // = d
  const std::vector<int>& row(int r) const;                     // r = 1..d, r entries
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition top() const;
  int entry(int r, int j) const { return row(r)[static_cast<size_t>(j - 1)]; }

  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

  /// Rows top-down separated by '/': "(2,1,0)/(2,0)/(1)".
  std::string str() const;
  /// Sub-top rows joined: "(2,0;1)" for d=3 (the table convention).
  std::string compressed_str() const;

 private:
  std::vector<std::vector<int>> rows_;
};

struct GTValidation {
  bool ok = true;
  std::string message;  // first violated constraint, empty when ok
};

/// Checks interlacing and nonnegativity; reports the first violation.
GTValidation validate_gt(const GTPattern& pattern);

struct WeightPair {
  std::vector<int> omega;   // standard weight, d entries, sums to |lambda|
  std::vector<int> dynkin;  // z_i = omega_i - omega_{i+1}, d-1 entries
};

/// Row-sum differences: omega_r = sum(row r) - sum(row r-1).
WeightPair gt_weight(const GTPattern& pattern);

/// All GT patterns with top row lambda (padded to d), in descending
/// lexicographic order of the (top-down) row concatenation.
std::vector<GTPattern> enumerate_gt_patterns(const Partition& lambda, int d);

/// Deterministic greedy construction of one GT pattern of shape lambda
/// realizing the Dynkin weight z: each row below the top starts from the
/// minimal interlacing baseline (the row above shifted left) and the
/// remaining row-sum deficit is distributed left to right within the local
/// interlacing capacities. Throws ValidationError with "weight not in
/// lattice" (non-integral standard weight) or "weight not permissible"
/// (deficit not exhaustible).
GTPattern dynkin_to_gt(const Partition& lambda, const std::vector<int>& z, int d);

/// Overload taking the highest weight as Dynkin labels zeta.
GTPattern dynkin_to_gt(const std::vector<int>& zeta, const std::vector<int>& z);

/// True iff dynkin_to_gt succeeds for (lambda, z).
bool is_permissible(const Partition& lambda, const std::vector<int>& z, int d);

/// Highest-weight pattern of lambda: row r is the first r entries of lambda.
GTPattern highest_weight_pattern(const Partition& lambda, int d);

}  // namespace schurprep

#endif
