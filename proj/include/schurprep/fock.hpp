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

#ifndef SCHURPREP_FOCK_HPP
#define SCHURPREP_FOCK_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "schurprep/gt_pattern.hpp"
#include "schurprep/partition.hpp"

namespace schurprep {

/// Occupation-number configuration |n_1, ..., n_d> with sum N.
struct FockState {
  std::vector<int> occupations;

  int d() const { return static_cast<int>(occupations.size()); }
  int total() const;
  std::string str() const;  // "|2,1,0>"
  friend auto operator<=>(const FockState&, const FockState&) = default;
};

enum class StatKind { boson, fermion, paraboson, parafermion, explicit_shape };

/// Exchange-statistics sector. Bosons live in the single-row diagram,
/// fermions in the single-column one; order-p parastatistics admit diagrams
/// with at most p rows (parabosons) or at most p columns (parafermions).
struct StatisticsSector {
  StatKind kind = StatKind::boson;
  int order = 0;                   // p, for the para kinds
  std::optional<Partition> shape;  // for explicit_shape

  static StatisticsSector boson() { return {StatKind::boson, 0, std::nullopt}; }
  static StatisticsSector fermion() { return {StatKind::fermion, 0, std::nullopt}; }
  static StatisticsSector paraboson(int p) { return {StatKind::paraboson, p, std::nullopt}; }
  static StatisticsSector parafermion(int p) { return {StatKind::parafermion, p, std::nullopt}; }
  static StatisticsSector explicit_lambda(Partition lambda) {
    return {StatKind::explicit_shape, 0, std::move(lambda)};
  }
  std::string str() const;
};

/// z_i = n_i - n_{i+1}.
std::vector<int> dynkin_from_fock(const FockState& n);

/// Unique occupation vector with sum N and n_i - n_{i+1} = z_i; throws
/// ValidationError when the linear solve is non-integral or negative.
FockState fock_from_dynkin(const std::vector<int>& z, int N, int d);

/// Admissible Young diagrams for the sector, descending lexicographic order.
/// Boson/fermion/explicit give a singleton; the para kinds give the full
/// family under the row/column bound.
std::vector<Partition> sector_shapes(const StatisticsSector& stat, int N, int d);

/// Lexicographically smallest valid add-a-box path terminating at lambda.
/// Entry t is the row receiving box t+1 (the first box is always row 1).
std::vector<int> canonical_sigma(const Partition& lambda, int N);

/// Full Schur label (lambda, mu, sigma).
struct SchurLabel {
  Partition lambda;
  GTPattern mu;
  std::vector<int> sigma;

  friend auto operator<=>(const SchurLabel&, const SchurLabel&) = default;
  std::string str() const;
};

struct LabeledTerm {
  std::complex<double> coefficient;
  GTPattern mu;
  FockState source;  // the configuration this term came from
};

/// Superposition over GT labels at fixed (lambda, sigma).
struct LabeledSuperposition {
  int d = 0;
  int N = 0;
  Partition lambda;
  std::vector<int> sigma;
  std::vector<LabeledTerm> terms;

  SchurLabel label_of(size_t i) const { return {lambda, terms[i].mu, sigma}; }
};

/// Algorithm steps 1-2: fix lambda from the sector (or explicitly), map each
/// configuration to its GT label via the Dynkin weight, attach the canonical
/// sigma. Coefficients must be normalized (sum |c|^2 = 1 within 1e-12);
/// duplicate configurations are rejected.
LabeledSuperposition map_superposition(const std::vector<FockState>& configs,
                                       const std::vector<std::complex<double>>& coeffs,
                                       const StatisticsSector& stat, int d,
                                       const std::optional<Partition>& lambda_choice = std::nullopt);

}  // namespace schurprep

#endif
