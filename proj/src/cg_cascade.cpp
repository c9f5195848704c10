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

#include "schurprep/cg_cascade.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "schurprep/errors.hpp"

namespace schurprep {

namespace {

// Partial hooks q_i = row_i + (s - i); strictly decreasing on a valid row.
std::vector<long long> partial_hooks(const std::vector<int>& row, int s) {
  std::vector<long long> q(row.size());
  for (size_t i = 0; i < row.size(); ++i)
    q[i] = row[i] + (s - static_cast<int>(i) - 1);
  return q;
}

}  // namespace

double reduced_wigner(int s, const std::vector<int>& mu_row, int j,
                      const std::vector<int>& mu_prime_row, int j_prime) {
  if (s < 1 || static_cast<int>(mu_row.size()) != s ||
      static_cast<int>(mu_prime_row.size()) != s - 1)
    throw ValidationError("reduced_wigner: rows must have s and s-1 entries");
  if (j < 1 || j > s) throw ValidationError("reduced_wigner: j out of range");
  if (j_prime < 0 || j_prime > s - 1)
    throw ValidationError("reduced_wigner: j' out of range");
  for (int i = 0; i + 1 < s; ++i)
    if (!(mu_row[static_cast<size_t>(i)] >= mu_prime_row[static_cast<size_t>(i)] &&
          mu_prime_row[static_cast<size_t>(i)] >= mu_row[static_cast<size_t>(i + 1)]))
      throw ValidationError("reduced_wigner: rows do not interlace");
  if (s == 1) return 1.0;

  const std::vector<long long> q = partial_hooks(mu_row, s);
  const std::vector<long long> qp = partial_hooks(mu_prime_row, s - 1);

  double num = 1.0, den = 1.0;
  if (j_prime == 0) {
    // Box lands at rank s; the lower row is a spectator.
    for (int i = 1; i <= s - 1; ++i) num *= static_cast<double>(qp[static_cast<size_t>(i - 1)] - q[static_cast<size_t>(j - 1)]);
    for (int i = 1; i <= s; ++i)
      if (i != j) den *= static_cast<double>(q[static_cast<size_t>(i - 1)] - q[static_cast<size_t>(j - 1)]);
    if (den == 0.0) throw ValidationError("degenerate label pair in reduced Wigner element");
    return std::sqrt(std::abs(num / den));
  }

  for (int i = 1; i <= s - 1; ++i)
    if (i != j_prime) num *= static_cast<double>(qp[static_cast<size_t>(i - 1)] - q[static_cast<size_t>(j - 1)]);
  for (int i = 1; i <= s; ++i)
    if (i != j) num *= static_cast<double>(q[static_cast<size_t>(i - 1)] - qp[static_cast<size_t>(j_prime - 1)] - 1);
  for (int i = 1; i <= s; ++i)
    if (i != j) den *= static_cast<double>(q[static_cast<size_t>(i - 1)] - q[static_cast<size_t>(j - 1)]);
  for (int i = 1; i <= s - 1; ++i)
    if (i != j_prime) den *= static_cast<double>(qp[static_cast<size_t>(i - 1)] - qp[static_cast<size_t>(j_prime - 1)] - 1);
  if (den == 0.0) throw ValidationError("degenerate label pair in reduced Wigner element");
  const double sign = j > j_prime ? -1.0 : 1.0;
  return sign * std::sqrt(std::abs(num / den));
}

double cg_box_coefficient(const GTPattern& mu_in, int level, const GTPattern& mu_out, int d) {
  if (mu_in.depth() != d || mu_out.depth() != d)
    throw ValidationError("cg_box_coefficient: patterns must have depth d");
  if (level < 1 || level > d) throw ValidationError("cg_box_coefficient: level out of range");

  // The added box must raise exactly one entry per rank from the landing
  // rank upward, and leave everything below untouched.
  std::vector<int> add_pos(static_cast<size_t>(d) + 1, 0);  // 1-based rank -> j, 0 = unchanged
  for (int r = 1; r <= d; ++r) {
    const auto& a = mu_in.row(r);
    const auto& b = mu_out.row(r);
    int changed = 0;
    for (int i = 0; i < r; ++i) {
      const int diff = b[static_cast<size_t>(i)] - a[static_cast<size_t>(i)];
      if (diff == 0) continue;
      if (diff != 1) return 0.0;
      add_pos[static_cast<size_t>(r)] = i + 1;
      ++changed;
    }
    if (changed > 1) return 0.0;
  }
  int landing = 0;
  for (int r = 1; r <= d; ++r) {
    if (add_pos[static_cast<size_t>(r)] != 0) {
      landing = r;
      break;
    }
  }
  if (landing != level) return 0.0;
  for (int r = landing; r <= d; ++r)
    if (add_pos[static_cast<size_t>(r)] == 0) return 0.0;

  double value = 1.0;
  if (landing > 1)
    value *= reduced_wigner(landing, mu_in.row(landing), add_pos[static_cast<size_t>(landing)],
                            mu_in.row(landing - 1), 0);
  for (int s = landing + 1; s <= d; ++s)
    value *= reduced_wigner(s, mu_in.row(s), add_pos[static_cast<size_t>(s)], mu_in.row(s - 1),
                            add_pos[static_cast<size_t>(s - 1)]);
  return value;
}

DenseState cg_cascade_state(const SchurLabel& label, int d, std::int64_t cap) {
  const int N = label.lambda.sum();
  if (N < 1) throw ValidationError("cascade needs at least one box");
  if (label.lambda.rows() > d)
    throw ValidationError("empty sector: " + label.lambda.str() + " needs more than " +
                          std::to_string(d) + " levels");
  if (static_cast<int>(label.sigma.size()) != N - 1)
    throw ValidationError("sigma path must have N-1 entries");
  {
    const GTValidation v = validate_gt(label.mu);
    if (!v.ok) throw ValidationError("invalid GT label: " + v.message);
    if (label.mu.top() != label.lambda)
      throw ValidationError("GT label top row does not match lambda");
    if (label.mu.depth() != d) throw ValidationError("GT label depth must be d");
  }
  dense_dimension(d, N, cap);

  // Shape trajectory along the path.
  std::vector<Partition> shapes{Partition::single_row(1)};
  for (int t = 0; t < N - 1; ++t) {
    const int row = label.sigma[static_cast<size_t>(t)];
    if (row < 1 || row > d) throw ValidationError("invalid path row " + std::to_string(row));
    std::vector<int> parts = shapes.back().padded(d);
    parts[static_cast<size_t>(row - 1)] += 1;
    try {
      shapes.emplace_back(parts);
    } catch (const ValidationError&) {
      throw ValidationError("path step " + std::to_string(t + 1) +
                            " does not produce a partition");
    }
  }
  if (shapes.back() != label.lambda)
    throw ValidationError("path does not terminate at lambda");

  // One Clebsch-Gordan step per site; intermediate tables keyed by pattern.
  std::map<GTPattern, Eigen::VectorXd> table;
  for (int level = 1; level <= d; ++level) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(d));
    for (int r = 1; r <= d; ++r)
      rows[static_cast<size_t>(r - 1)] = [&] {
        std::vector<int> row(static_cast<size_t>(r), 0);
        if (r >= level) row[0] = 1;
        return row;
      }();
    Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
    v[level - 1] = 1.0;
    table.emplace(GTPattern(std::move(rows)), std::move(v));
  }

  for (int t = 2; t <= N; ++t) {
    const Partition& target = shapes[static_cast<size_t>(t - 1)];
    std::map<GTPattern, Eigen::VectorXd> next;
    const std::int64_t dim_prev = table.begin()->second.size();
    for (const GTPattern& mu_out : enumerate_gt_patterns(target, d)) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(dim_prev * d);
      bool nonzero = false;
      for (const auto& [mu_in, v_in] : table) {
        for (int level = 1; level <= d; ++level) {
          const double c = cg_box_coefficient(mu_in, level, mu_out, d);
          if (c == 0.0) continue;
          nonzero = true;
          for (std::int64_t x = 0; x < dim_prev; ++x)
            v[x * d + (level - 1)] += c * v_in[x];
        }
      }
      if (nonzero) next.emplace(mu_out, std::move(v));
    }
    table = std::move(next);
  }

  auto it = table.find(label.mu);
  if (it == table.end())
    throw InternalError("cascade did not produce the requested GT label");
  DenseState out;
  out.d = d;
  out.N = N;
  out.amplitudes = it->second.cast<cplx>();
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > 1e-8)
    throw InternalError("cascade state norm " + std::to_string(norm) + " deviates from 1");
  out.amplitudes /= norm;
  fix_phase(out);
  return out;
}

}  // namespace schurprep
