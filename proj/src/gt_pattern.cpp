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

#include "schurprep/gt_pattern.hpp"

#include <algorithm>
#include <numeric>

#include "schurprep/errors.hpp"

namespace schurprep {

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (size_t k = 0; k < rows_.size(); ++k)
    if (rows_[k].size() != k + 1)
      throw ValidationError("GT pattern shape error: row " + std::to_string(k + 1) + " has " +
                            std::to_string(rows_[k].size()) + " entries, expected " +
                            std::to_string(k + 1));
}

const std::vector<int>& GTPattern::row(int r) const {
  if (r < 1 || r > depth()) throw ValidationError("GT row index out of range");
  return rows_[static_cast<size_t>(r - 1)];
}

Partition GTPattern::top() const {
  if (rows_.empty()) throw ValidationError("empty GT pattern");
  return Partition(rows_.back());
}

std::string GTPattern::str() const {
  std::string out;
  for (int r = depth(); r >= 1; --r) {
    if (r != depth()) out += "/";
    out += "(";
    const auto& rr = row(r);
    for (size_t j = 0; j < rr.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(rr[j]);
    }
    out += ")";
  }
  return out;
}

std::string GTPattern::compressed_str() const {
  std::string out = "(";
  for (int r = depth() - 1; r >= 1; --r) {
    if (r != depth() - 1) out += ";";
    const auto& rr = row(r);
    for (size_t j = 0; j < rr.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(rr[j]);
    }
  }
  return out + ")";
}

GTValidation validate_gt(const GTPattern& pattern) {
  const int d = pattern.depth();
  if (d == 0) return {false, "empty pattern"};
  for (int r = 1; r <= d; ++r)
    for (int j = 1; j <= r; ++j)
      if (pattern.entry(r, j) < 0)
        return {false, "negative entry x(" + std::to_string(r) + "," + std::to_string(j) + ")"};
  for (int r = 1; r < d; ++r) {
    for (int j = 1; j <= r; ++j) {
      const int upper_left = pattern.entry(r + 1, j);
      const int mid = pattern.entry(r, j);
      const int upper_right = pattern.entry(r + 1, j + 1);
      if (!(upper_left >= mid && mid >= upper_right))
        return {false, "interlacing violated at (r=" + std::to_string(r) + ",j=" +
                           std::to_string(j) + "): need " + std::to_string(upper_left) +
                           " >= " + std::to_string(mid) + " >= " + std::to_string(upper_right)};
    }
  }
  return {};
}

WeightPair gt_weight(const GTPattern& pattern) {
  const GTValidation v = validate_gt(pattern);
  if (!v.ok) throw ValidationError("gt_weight on invalid pattern: " + v.message);
  const int d = pattern.depth();
  WeightPair w;
  w.omega.resize(static_cast<size_t>(d));
  int prev = 0;
  for (int r = 1; r <= d; ++r) {
    const auto& rr = pattern.row(r);
    const int s = std::accumulate(rr.begin(), rr.end(), 0);
    w.omega[static_cast<size_t>(r - 1)] = s - prev;
    prev = s;
  }
  w.dynkin.resize(static_cast<size_t>(d - 1));
  for (int i = 0; i + 1 < d; ++i)
    w.dynkin[static_cast<size_t>(i)] =
        w.omega[static_cast<size_t>(i)] - w.omega[static_cast<size_t>(i + 1)];
  return w;
}

namespace {

void enumerate_rows_below(std::vector<std::vector<int>>& rows_topdown,
                          std::vector<GTPattern>& out) {
  // Copy: the recursive push_back below may reallocate rows_topdown.
  const std::vector<int> above = rows_topdown.back();
  const size_t r = above.size() - 1;  // entries in the new row
  if (r == 0) {
    std::vector<std::vector<int>> rows(rows_topdown.rbegin(), rows_topdown.rend());
    out.emplace_back(std::move(rows));
    return;
  }
  std::vector<int> cur(r);
  // DFS over interlacing choices, largest values first.
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == r) {
      rows_topdown.push_back(cur);
      enumerate_rows_below(rows_topdown, out);
      rows_topdown.pop_back();
      return;
    }
    const int hi = above[j];
    const int lo = above[j + 1];
    for (int v = hi; v >= lo; --v) {
      if (j > 0 && v > cur[j - 1]) continue;
      cur[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<GTPattern> enumerate_gt_patterns(const Partition& lambda, int d) {
  std::vector<GTPattern> out;
  std::vector<std::vector<int>> rows_topdown{lambda.padded(d)};
  if (d == 1) return {GTPattern({lambda.padded(1)})};
  enumerate_rows_below(rows_topdown, out);
  return out;
}

GTPattern dynkin_to_gt(const Partition& lambda, const std::vector<int>& z, int d) {
  if (static_cast<int>(z.size()) != d - 1)
    throw ValidationError("Dynkin weight must have d-1 entries");
  const std::vector<int> top = lambda.padded(d);
  const int total = lambda.sum();

  // Recover the standard weight: omega_d from the total-sum constraint,
  // then omega_i = z_i + omega_{i+1}.
  long long weighted = 0;
  for (int i = 1; i <= d - 1; ++i) weighted += static_cast<long long>(i) * z[static_cast<size_t>(i - 1)];
  const long long num = static_cast<long long>(total) - weighted;
  if (num % d != 0)
    throw ValidationError("weight not in lattice: omega_d = " + std::to_string(num) + "/" +
                          std::to_string(d) + " is not an integer");
  std::vector<long long> omega(static_cast<size_t>(d));
  omega[static_cast<size_t>(d - 1)] = num / d;
  for (int i = d - 2; i >= 0; --i)
    omega[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] + omega[static_cast<size_t>(i + 1)];

  // Target row sums follow the row-sum-difference identity:
  // sum(row r) = omega_1 + ... + omega_r.
  std::vector<long long> target(static_cast<size_t>(d), 0);
  long long acc = 0;
  for (int r = 1; r <= d; ++r) {
    acc += omega[static_cast<size_t>(r - 1)];
    target[static_cast<size_t>(r - 1)] = acc;
  }

  std::vector<std::vector<int>> rows(static_cast<size_t>(d));
  rows[static_cast<size_t>(d - 1)] = top;
  for (int r = d - 1; r >= 1; --r) {
    const std::vector<int>& above = rows[static_cast<size_t>(r)];
    std::vector<int> cur(static_cast<size_t>(r));
    long long baseline = 0;
    for (int j = 0; j < r; ++j) {
      cur[static_cast<size_t>(j)] = above[static_cast<size_t>(j + 1)];
      baseline += cur[static_cast<size_t>(j)];
    }
    long long deficit = target[static_cast<size_t>(r - 1)] - baseline;
    if (deficit < 0)
      throw ValidationError("weight not permissible in " + lambda.str(d) +
                            ": row " + std::to_string(r) + " sum below interlacing minimum");
    for (int j = 0; j < r && deficit > 0; ++j) {
      const int capacity = above[static_cast<size_t>(j)] - above[static_cast<size_t>(j + 1)];
      const long long inc = std::min<long long>(capacity, deficit);
      cur[static_cast<size_t>(j)] += static_cast<int>(inc);
      deficit -= inc;
    }
    if (deficit != 0)
      throw ValidationError("weight not permissible in " + lambda.str(d) +
                            ": row " + std::to_string(r) + " capacity exhausted");
    rows[static_cast<size_t>(r - 1)] = std::move(cur);
  }

  GTPattern pattern(std::move(rows));
  const GTValidation v = validate_gt(pattern);
  if (!v.ok) throw InternalError("dynkin_to_gt produced an invalid pattern: " + v.message);
  return pattern;
}

GTPattern dynkin_to_gt(const std::vector<int>& zeta, const std::vector<int>& z) {
  const Partition lambda = partition_from_dynkin(zeta);
  return dynkin_to_gt(lambda, z, static_cast<int>(zeta.size()) + 1);
}

bool is_permissible(const Partition& lambda, const std::vector<int>& z, int d) {
  try {
    dynkin_to_gt(lambda, z, d);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

GTPattern highest_weight_pattern(const Partition& lambda, int d) {
  const std::vector<int> top = lambda.padded(d);
  std::vector<std::vector<int>> rows(static_cast<size_t>(d));
  for (int r = 1; r <= d; ++r)
    rows[static_cast<size_t>(r - 1)] =
        std::vector<int>(top.begin(), top.begin() + r);
  return GTPattern(std::move(rows));
}

}  // namespace schurprep
