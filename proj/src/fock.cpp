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

#include "schurprep/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "schurprep/errors.hpp"

namespace schurprep {

int FockState::total() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::string FockState::str() const {
  std::string out = "|";
  for (size_t i = 0; i < occupations.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(occupations[i]);
  }
  return out + ">";
}

std::string StatisticsSector::str() const {
  switch (kind) {
    case StatKind::boson: return "boson";
    case StatKind::fermion: return "fermion";
    case StatKind::paraboson: return "paraboson(" + std::to_string(order) + ")";
    case StatKind::parafermion: return "parafermion(" + std::to_string(order) + ")";
    case StatKind::explicit_shape: return "explicit " + (shape ? shape->str() : "?");
  }
  return "?";
}

std::vector<int> dynkin_from_fock(const FockState& n) {
  const int d = n.d();
  if (d < 1) throw ValidationError("empty Fock state");
  for (int v : n.occupations)
    if (v < 0) throw ValidationError("negative occupation in " + n.str());
  std::vector<int> z(static_cast<size_t>(d - 1));
  for (int i = 0; i + 1 < d; ++i)
    z[static_cast<size_t>(i)] =
        n.occupations[static_cast<size_t>(i)] - n.occupations[static_cast<size_t>(i + 1)];
  return z;
}

FockState fock_from_dynkin(const std::vector<int>& z, int N, int d) {
  if (static_cast<int>(z.size()) != d - 1)
    throw ValidationError("Dynkin weight must have d-1 entries");
  // n_d = (N - sum_i i*z_i)/d, then n_i = z_i + n_{i+1}.
  long long weighted = 0;
  for (int i = 1; i <= d - 1; ++i)
    weighted += static_cast<long long>(i) * z[static_cast<size_t>(i - 1)];
  const long long num = static_cast<long long>(N) - weighted;
  if (num % d != 0)
    throw ValidationError("not a valid occupation for (z,N,d): n_d = " + std::to_string(num) +
                          "/" + std::to_string(d) + " is non-integral");
  std::vector<int> n(static_cast<size_t>(d));
  long long cur = num / d;
  n[static_cast<size_t>(d - 1)] = static_cast<int>(cur);
  for (int i = d - 2; i >= 0; --i) {
    cur += z[static_cast<size_t>(i)];
    n[static_cast<size_t>(i)] = static_cast<int>(cur);
  }
  for (int v : n)
    if (v < 0)
      throw ValidationError("not a valid occupation for (z,N,d): negative occupation");
  return FockState{std::move(n)};
}

std::vector<Partition> sector_shapes(const StatisticsSector& stat, int N, int d) {
  if (N < 1) throw ValidationError("sector_shapes requires N >= 1");
  switch (stat.kind) {
    case StatKind::boson:
      return {Partition::single_row(N)};
    case StatKind::fermion:
      if (N > d)
        throw ValidationError("antisymmetric sector empty: N = " + std::to_string(N) + " > d = " +
                              std::to_string(d));
      return {Partition::single_column(N)};
    case StatKind::paraboson: {
      if (stat.order < 1) throw ValidationError("paraboson order must be >= 1");
      std::vector<Partition> out;
      for (const Partition& p : enumerate_partitions(N, std::min(stat.order, d)))
        out.push_back(p);
      if (out.empty()) throw ValidationError("paraboson sector empty for these (p,N,d)");
      return out;
    }
    case StatKind::parafermion: {
      if (stat.order < 1) throw ValidationError("parafermion order must be >= 1");
      std::vector<Partition> out;
      for (const Partition& p : enumerate_partitions(N, d))
        if (p.part(0) <= stat.order) out.push_back(p);
      if (out.empty())
        throw ValidationError("parafermion sector empty: need N <= p*d");
      return out;
    }
    case StatKind::explicit_shape: {
      if (!stat.shape) throw ValidationError("explicit sector without a shape");
      if (stat.shape->sum() != N)
        throw ValidationError("explicit shape " + stat.shape->str() + " is not a partition of " +
                              std::to_string(N));
      if (stat.shape->rows() > d)
        throw ValidationError("explicit shape has more than d rows");
      return {*stat.shape};
    }
  }
  throw ValidationError("unknown statistics sector");
}

std::vector<int> canonical_sigma(const Partition& lambda, int N) {
  if (lambda.sum() != N) throw ValidationError("sigma path: lambda must be a partition of N");
  std::vector<int> path;
  std::vector<int> cur(static_cast<size_t>(lambda.rows()), 0);
  cur[0] = 1;  // box 1
  for (int t = 2; t <= N; ++t) {
    bool placed = false;
    for (int j = 0; j < lambda.rows() && !placed; ++j) {
      // Valid partition step that stays inside lambda.
      if (cur[static_cast<size_t>(j)] >= lambda.part(j)) continue;
      if (j > 0 && cur[static_cast<size_t>(j)] + 1 > cur[static_cast<size_t>(j - 1)]) continue;
      cur[static_cast<size_t>(j)] += 1;
      path.push_back(j + 1);
      placed = true;
    }
    if (!placed) throw InternalError("canonical_sigma: no admissible box placement");
  }
  return path;
}

std::string SchurLabel::str() const {
  std::string out = "lambda=" + lambda.str() + " mu=" + mu.compressed_str() + " sigma=(";
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sigma[i]);
  }
  return out + ")";
}

LabeledSuperposition map_superposition(const std::vector<FockState>& configs,
                                       const std::vector<std::complex<double>>& coeffs,
                                       const StatisticsSector& stat, int d,
                                       const std::optional<Partition>& lambda_choice) {
  if (configs.empty()) throw ValidationError("empty configuration list");
  if (configs.size() != coeffs.size())
    throw ValidationError("configuration and coefficient counts differ");
  const int N = configs.front().total();
  for (const FockState& c : configs) {
    if (c.d() != d) throw ValidationError("configuration " + c.str() + " has wrong mode count");
    if (c.total() != N)
      throw ValidationError("configuration " + c.str() + " has particle number " +
                            std::to_string(c.total()) + ", expected " + std::to_string(N));
    if (stat.kind == StatKind::fermion)
      for (int v : c.occupations)
        if (v > 1) throw ValidationError("fermionic configuration " + c.str() + " has n_i > 1");
  }
  {
    std::set<FockState> seen;
    for (const FockState& c : configs)
      if (!seen.insert(c).second)
        throw ValidationError("duplicate configuration " + c.str() +
                              "; merge coefficients before mapping");
  }
  double norm2 = 0;
  for (const auto& c : coeffs) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw ValidationError("coefficients are not normalized: sum |c|^2 = " + std::to_string(norm2));

  const std::vector<Partition> family = sector_shapes(stat, N, d);
  Partition lambda = family.front();  // descending lex order: largest first
  if (lambda_choice) {
    if (std::find(family.begin(), family.end(), *lambda_choice) == family.end())
      throw ValidationError("lambda " + lambda_choice->str() + " is not admissible for sector " +
                            stat.str());
    lambda = *lambda_choice;
  }

  LabeledSuperposition out;
  out.d = d;
  out.N = N;
  out.lambda = lambda;
  out.sigma = canonical_sigma(lambda, N);
  std::set<GTPattern> seen_mu;
  for (size_t i = 0; i < configs.size(); ++i) {
    const std::vector<int> z = dynkin_from_fock(configs[i]);
    GTPattern mu = [&] {
      try {
        return dynkin_to_gt(lambda, z, d);
      } catch (const ValidationError& e) {
        throw ValidationError("configuration " + configs[i].str() + " is not permissible in " +
                              lambda.str(d) + ": " + e.what());
      }
    }();
    if (!seen_mu.insert(mu).second)
      throw InternalError("distinct configurations mapped to the same GT label");
    out.terms.push_back({coeffs[i], std::move(mu), configs[i]});
  }
  return out;
}

}  // namespace schurprep
