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

#include "schurprep/partition.hpp"

#include <numeric>

#include "schurprep/errors.hpp"

namespace schurprep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ValidationError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be nonincreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::single_row(int n) {
  if (n < 0) throw ValidationError("negative row length");
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::single_column(int n) {
  if (n < 0) throw ValidationError("negative column length");
  return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int d) const {
  if (rows() > d)
    throw ValidationError("partition " + str() + " has more than " + std::to_string(d) +
                          " parts");
  std::vector<int> out(static_cast<size_t>(d), 0);
  for (int i = 0; i < rows(); ++i) out[static_cast<size_t>(i)] = parts_[static_cast<size_t>(i)];
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<size_t>(part(0)), 0);
  for (int c = 0; c < part(0); ++c) {
    int count = 0;
    for (int r = 0; r < rows(); ++r)
      if (part(r) > c) ++count;
    cols[static_cast<size_t>(c)] = count;
  }
  return Partition(std::move(cols));
}

std::string Partition::str(int d) const {
  const std::vector<int> p = d > 0 ? padded(d) : parts_;
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

BigInt count_partitions(int N, int d) {
  if (N < 0 || d < 0) throw ValidationError("count_partitions requires N, d >= 0");
  if (N == 0) return 1;
  if (d == 0) return 0;
  // ways[n] accumulates partitions of n into parts of size <= i.
  std::vector<BigInt> ways(static_cast<size_t>(N) + 1, 0);
  ways[0] = 1;
  for (int i = 1; i <= d; ++i)
    for (int n = i; n <= N; ++n) ways[static_cast<size_t>(n)] += ways[static_cast<size_t>(n - i)];
  return ways[static_cast<size_t>(N)];
}

namespace {

void enumerate_rec(int remaining, int max_part, int depth_left, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (depth_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, depth_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int N, int d) {
  if (N < 0 || d < 1) throw ValidationError("enumerate_partitions requires N >= 0, d >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(N, N == 0 ? 1 : N, d, cur, out);
  return out;
}

BigInt weyl_dimension(const Partition& lambda, int d) {
  const std::vector<int> l = lambda.padded(d);
  // Group indices by part value; pairs inside a group contribute exactly 1.
  std::vector<std::pair<int, int>> groups;  // (value, first index), indices 1-based
  for (int i = 0; i < d; ++i)
    if (i == 0 || l[static_cast<size_t>(i)] != l[static_cast<size_t>(i - 1)])
      groups.emplace_back(l[static_cast<size_t>(i)], i + 1);
  groups.emplace_back(0, d + 1);  // sentinel end

  BigInt num = 1, den = 1;
  for (size_t a = 0; a + 1 < groups.size(); ++a) {
    for (size_t b = a + 1; b + 1 < groups.size(); ++b) {
      const int va = groups[a].first, vb = groups[b].first;
      for (int i = groups[a].second; i < groups[a + 1].second; ++i) {
        for (int j = groups[b].second; j < groups[b + 1].second; ++j) {
          num *= va - vb + j - i;
          den *= j - i;
          BigInt g = gcd(num, den);
          if (g > 1) {
            num /= g;
            den /= g;
          }
        }
      }
    }
  }
  if (den != 1) throw InternalError("Weyl dimension did not reduce to an integer");
  return num;
}

BigInt sym_group_dimension(const Partition& lambda) {
  const int N = lambda.sum();
  const Partition conj = lambda.conjugate();
  BigInt num = 1, den = 1;
  for (BigInt k = 2; k <= N; ++k) num *= k;
  for (int r = 0; r < lambda.rows(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      const int hook = (lambda.part(r) - c) + (conj.part(c) - r) - 1;
      den *= hook;
      BigInt g = gcd(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
    }
  }
  if (den != 1) throw InternalError("hook length product does not divide N!");
  return num;
}

Partition balanced_shape(int N, int d) {
  if (N < 0 || d < 1) throw ValidationError("balanced_shape requires N >= 0, d >= 1");
  const int q = N / d, r = N % d;
  std::vector<int> parts(static_cast<size_t>(d), q);
  for (int i = 0; i < r; ++i) parts[static_cast<size_t>(i)] = q + 1;
  return Partition(std::move(parts));
}

Partition partition_from_dynkin(const std::vector<int>& zeta) {
  const int d = static_cast<int>(zeta.size()) + 1;
  std::vector<int> l(static_cast<size_t>(d), 0);
  for (int i = d - 2; i >= 0; --i) {
    if (zeta[static_cast<size_t>(i)] < 0)
      throw ValidationError("highest-weight Dynkin labels must be nonnegative");
    l[static_cast<size_t>(i)] = zeta[static_cast<size_t>(i)] + l[static_cast<size_t>(i + 1)];
  }
  return Partition(std::move(l));
}

std::vector<int> dynkin_from_partition(const Partition& lambda, int d) {
  const std::vector<int> l = lambda.padded(d);
  std::vector<int> zeta(static_cast<size_t>(d - 1));
  for (int i = 0; i + 1 < d; ++i)
    zeta[static_cast<size_t>(i)] = l[static_cast<size_t>(i)] - l[static_cast<size_t>(i + 1)];
  return zeta;
}

}  // namespace schurprep
