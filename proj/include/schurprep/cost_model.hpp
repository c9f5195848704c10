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

#ifndef SCHURPREP_COST_MODEL_HPP
#define SCHURPREP_COST_MODEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "schurprep/registers.hpp"

namespace schurprep {

/// Toffoli-equivalent metric: #Toffoli + T-count/7. Integer-valued pieces
/// stay exact; synthesized T-counts are the only reals and are ceiled once
/// at aggregation.
struct CostParams {
  double epsilon = 1e-4;  // total diamond-norm budget, 0 < eps < 1/2
  double alpha_dir = 1.149;
  double beta_dir = 9.2;
  int b_r = 7;        // phase-gradient width of the success-boost rotation
  int a_mcx_prov = 0; // provisioned clean-ancilla bank for multi-controls
  int s_sign = 1;     // sign bit in the QROAM output word
  Encoding encoding = Encoding::compressed;
  std::optional<double> epsilon_prep;      // PREP precision, defaults to epsilon
  std::optional<std::int64_t> k1, k2;      // PREP QROAM blocking overrides
  std::optional<std::int64_t> k1p, k2p;    // SEL QROAM blocking overrides
  std::int64_t enumeration_threshold = 1000000;

  void validate() const;
  double eps_prep() const { return epsilon_prep.value_or(epsilon); }
};

/// Reversible-arithmetic Toffoli costs at word size w:
/// CDKM add, shift-and-add multiply, Newton reciprocal and square root.
struct ArithmeticCosts {
  std::int64_t add = 0;         // A(w) = 2w - 1
  std::int64_t mul = 0;         // M(w) = 2w^2 + w
  std::int64_t newton_iters = 0;  // ceil(log2 w) + 2, shared by recip and sqrt
  std::int64_t recip = 0;       // I (2M + 3A)
  std::int64_t sqrt = 0;        // I (recip + M + 2A)
};
ArithmeticCosts arithmetic_costs(int w);

/// Vectoring-mode CORDIC with f iterations: 3 f A(w).
std::int64_t cordic_cost(int w, int f);

/// Direct rotation synthesis T-counts (raw reals, ceiled by the caller at
/// aggregation): T_dir = alpha log2(1/delta) + beta, T_cR = 2 T_dir(delta/2).
struct RotationSynthesis {
  double t_dir = 0;
  double t_cr = 0;
};
RotationSynthesis rotation_synthesis(double delta, const CostParams& params = {});

/// Global error split and derived precisions: eps_rot = eps_arith = eps/2,
/// K_rot rotations across the (N-1)-step cascade, per-rotation synthesis
/// tolerance, angle quantization, and fractional bits f.
struct ErrorBudget {
  double eps_rot = 0;
  double eps_arith = 0;
  std::int64_t k_rot = 0;
  double delta_rot = 0;
  double eps_theta = 0;
  int f = 0;
};
ErrorBudget error_budget(double epsilon, int d, int N);

/// Signed working word size at rank s: integer range + fractional + guard.
struct WordSize {
  int integer_bits = 0;  // ceil(log2(2N + 2s + 1)) + 2
  int guard_bits = 0;    // ceil(log2 s) + 3
  int f = 0;
  int w = 0;
};
WordSize word_size(int s, int N, int f);

/// Per-rank cost of one U(d) CG step: compiled two-level rotations plus the
/// streaming reduced-Wigner evaluation.
struct RankCost {
  int s = 0;
  std::int64_t m_s = 0;   // binom(s,2) two-level operations
  std::int64_t e_s = 0;   // 2 ceil(log2 s) - 1 enables each
  std::int64_t k_tot = 0; // control width: k_lambda_mu + (n_s - 1)
  std::int64_t c_tof = 0; // multi-control Toffoli cost, max(1, 2k - 3)
  WordSize word;
  double t_cr = 0;              // raw T-count per controlled rotation
  std::int64_t toffoli_compile = 0;  // M_s E_s 2 C_Tof
  double t_count_compile = 0;        // M_s E_s T_cR
  std::int64_t c_diff = 0, c_entries = 0, c_angles = 0, c_eval = 0;
  double te = 0;  // toffoli_compile + t_count_compile/7 + c_eval (raw)
};
RankCost rank_level_cost(int s, int d, int N, const CostParams& params);

/// Full-transform totals: (N-1) identical CG steps, T-counts ceiled once.
struct SchurCostBreakdown {
  int d = 0, N = 0;
  double epsilon = 0;
  RegisterWidths widths;
  ErrorBudget budget;
  std::int64_t k_lambda_mu = 0;
  std::vector<RankCost> ranks;
  std::int64_t toffoli_per_cg = 0;
  double t_count_per_cg = 0;
  std::int64_t toffoli_total = 0;
  double t_count_total = 0;
  std::int64_t t_count_total_ceil = 0;
  double te_total = 0;  // toffoli_total + t_count_total_ceil/7
};
SchurCostBreakdown schur_transform_te(int d, int N, double epsilon, const CostParams& params);

/// Qubit footprint of the (inverse) Schur transform.
struct SchurQubits {
  std::int64_t q_sys = 0;
  std::vector<std::pair<int, std::int64_t>> q_anc_per_rank;  // (s, Q_anc(s))
  std::int64_t anc_peak = 0;
  std::int64_t total = 0;  // q_sys + anc_peak
};
SchurQubits schur_qubits(int d, int N, double epsilon, const CostParams& params);

}  // namespace schurprep

#endif
