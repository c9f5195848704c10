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

#ifndef SCHURPREP_SCHUR_BASIS_HPP
#define SCHURPREP_SCHUR_BASIS_HPP

#include <cstdint>
#include <vector>

#include "schurprep/fock.hpp"
#include "schurprep/state.hpp"

namespace schurprep {

struct SimOptions {
  std::int64_t cap = kDefaultDenseCap;
  double cluster_tol = 1e-8;  // eigenvalue clustering during joint diagonalization
};

struct SchurBasisEntry {
  GTPattern mu;
  std::vector<int> sigma;  // add-a-box path, entry t = row of box t+1
  DenseState state;
};

/// Orthonormal Schur vectors of one lambda sector: weyl_dim x sym_dim entries.
struct SchurBasisSet {
  Partition lambda;
  int d = 0;
  int N = 0;
  std::vector<SchurBasisEntry> entries;

  const SchurBasisEntry* find(const GTPattern& mu, const std::vector<int>& sigma) const;
};

/// All sectors of (C^d)^{tensor N} at once (they come out of one pass of
/// joint diagonalization), descending lexicographic lambda order.
struct SchurDecomposition {
  int d = 0;
  int N = 0;
  std::vector<SchurBasisSet> sectors;

  const SchurBasisSet* sector(const Partition& lambda) const;
};

/// Subgroup-adapted Schur basis, built spectrally: total Cartans fix the
/// weight, Jucys-Murphy operators fix the add-a-box path sigma (their
/// eigenvalues are the box contents), nested quadratic Casimirs of
/// U(2) c ... c U(d-1) resolve the GT pattern inside degenerate weights.
/// Phases: first nonzero amplitude in lexicographic index order is real
/// positive.
SchurDecomposition schur_basis_all(int d, int N, const SimOptions& opts = {});

/// Single-sector view of schur_basis_all. Throws ValidationError for an
/// empty sector (more than d rows, e.g. fermions with N > d).
SchurBasisSet gt_chain_basis(const Partition& lambda, int d, int N,
                             const SimOptions& opts = {});

/// sum_i c_i |lambda, mu_i, sigma>_Sch as a dense computational-basis vector.
DenseState prepare_first_quantized(const LabeledSuperposition& task, int d,
                                   const SimOptions& opts = {});

/// Convenience: map + prepare in one call.
DenseState prepare_first_quantized(const std::vector<FockState>& configs,
                                   const std::vector<cplx>& coeffs,
                                   const StatisticsSector& stat, int d,
                                   const SimOptions& opts = {});

}  // namespace schurprep

#endif
