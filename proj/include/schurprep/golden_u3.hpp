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

#ifndef SCHURPREP_GOLDEN_U3_HPP
#define SCHURPREP_GOLDEN_U3_HPP

#include <string>
#include <vector>

#include "schurprep/schur_basis.hpp"

namespace schurprep {

/// One reference state of the d=3, N=3 corpus: Fock content, labels, and the
/// normalized three-qutrit expansion (integer coefficients / sqrt(norm)).
struct GoldenU3Entry {
  std::vector<int> fock;
  std::vector<int> dynkin;
  Partition lambda;
  GTPattern mu;
  int sigma_tag;  // 0 = multiplicity-free sector, 1 = T1 copy, 2 = T2 copy
  std::vector<std::pair<std::string, int>> expansion;  // digit string -> coefficient
};

const std::vector<GoldenU3Entry>& golden_u3_table();

/// Result of checking one corpus state against the constructed basis.
/// States in one-dimensional (lambda, weight) blocks are compared as rays
/// (up to a global phase); states in degenerate blocks are checked for exact
/// membership in the constructed block, and each block's span is compared
/// via projectors (a fine-grained label inside a degenerate weight block is
/// a basis convention, not an invariant of the decomposition).
struct GoldenU3Report {
  struct Row {
    std::string fock;
    std::string lambda;
    std::string dynkin;
    std::string gt;
    std::string sigma;
    std::string kind;  // "ray" or "block"
    double deviation = 0;
    bool pass = false;
  };
  struct Block {
    std::string lambda;
    std::string dynkin;
    int table_dim = 0;
    int basis_dim = 0;
    double projector_distance = 0;
    bool pass = false;
  };
  std::vector<Row> rows;
  std::vector<Block> blocks;
  int matched = 0;
  int total = 0;
  double max_deviation = 0;
  bool all_pass = false;
  double tolerance = 0;

  std::string to_json() const;
  std::string summary() const;  // "27/27 states reproduced, max deviation ..."
};

/// Reconstructs all 27 Schur states for d=3, N=3 and compares them with the
/// reference corpus. `perturbation` injects an amplitude error into the first
/// reference state (negative control).
GoldenU3Report verify_golden_u3(double perturbation = 0.0, double tolerance = 1e-10);

}  // namespace schurprep

#endif
