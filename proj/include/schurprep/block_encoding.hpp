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

#ifndef SCHURPREP_BLOCK_ENCODING_HPP
#define SCHURPREP_BLOCK_ENCODING_HPP

#include <cstdint>
#include <string>

#include "schurprep/cost_model.hpp"

namespace schurprep {

/// 2-adic valuation of n >= 1.
int two_adic_valuation(std::int64_t n);

/// Near-optimal power-of-two QROAM blocking for the ceil(size/2k) + m(k-1)
/// tradeoff: 2^round(log2(size/2m)/2), rounding half away from zero,
/// clamped to [1, floor(size/2)].
std::int64_t optimal_k(std::int64_t size, std::int64_t m);

/// Clean-ancilla QROAM PREP with coherent alias sampling, compute+uncompute.
struct PrepCost {
  std::int64_t L = 0;
  int beta = 0;  // alt bits, ceil(log2 L)
  int R = 0;     // keep bits, ceil(log2 1/eps_prep)
  int m = 0;     // QROAM word, beta + R + 1
  std::int64_t k1 = 1, k2 = 1;
  int v2 = 0;  // 2-adic valuation of L
  std::int64_t te = 0;
  std::int64_t ancilla = 0;
};
PrepCost prep_cost(std::int64_t L, const CostParams& params);

/// SEL: QROAM lookup of the n_mu-bit XOR mask, compute+uncompute.
struct SelCost {
  std::int64_t n_mu = 0;
  std::int64_t k1 = 1, k2 = 1;
  double te = 0;  // (n_mu/2)(k1-1) can be half-integral for odd n_mu
  std::int64_t ancilla = 0;
};
SelCost sel_cost(std::int64_t n_mu, std::int64_t k1p, std::int64_t k2p);
SelCost sel_cost(std::int64_t n_mu, const CostParams& params);

/// One full block encoding of the label superposition.
struct BlockEncodingCost {
  std::string mode;  // "RUS" or "OAA"
  PrepCost prep;
  SelCost sel;
  double l1 = 0;
  int b = 0;  // address width ceil(log2 L)
  double per_attempt_te = 0;
  double expected_attempts = 1;         // RUS: l1^2
  std::int64_t r_star = 0;              // OAA Grover iterations
  double theta = 0;                     // OAA: asin(1/l1)
  std::int64_t reflection_cost = 0;     // OAA: max(0, 2b-3) per reflection
  bool exact_amplification = true;      // sin((2r*+1) theta) == 1
  double total_te = 0;
  std::int64_t ancilla = 0;  // beyond Schur registers and the address
};

/// Expected cost of repeat-until-success postselection: l1^2 attempts.
BlockEncodingCost rus_cost(std::int64_t L, double l1, std::int64_t n_mu,
                           const CostParams& params);

/// Oblivious amplitude amplification: (2r*+1) calls to U plus 2r* ancilla
/// reflections, r* = ceil((pi/2 - theta)/(2 theta)).
BlockEncodingCost oaa_cost(std::int64_t L, double l1, std::int64_t n_mu,
                           const CostParams& params);

}  // namespace schurprep

#endif
