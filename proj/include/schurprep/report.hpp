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

#ifndef SCHURPREP_REPORT_HPP
#define SCHURPREP_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "schurprep/block_encoding.hpp"
#include "schurprep/cost_model.hpp"

namespace schurprep {

enum class BlockEncodingMode { rus, oaa };

std::string to_string(BlockEncodingMode m);
BlockEncodingMode mode_from_string(const std::string& s);

/// End-to-end pipeline cost: block encoding of the label superposition
/// followed by the inverse Schur transform. Stage TEs add; stage qubit
/// peaks combine by max (clean ancillas are reused across stages).
struct ResourceReport {
  int d = 0, N = 0;
  std::int64_t L = 0;
  double epsilon = 0;
  BlockEncodingMode mode = BlockEncodingMode::oaa;
  double l1 = 0;  // defaults to sqrt(L), the Cauchy-Schwarz bound

  RegisterWidths widths;
  SchurCostBreakdown schur;
  SchurQubits schur_qubit_model;
  BlockEncodingCost block;

  double te_block = 0;
  double te_schur = 0;
  double te_total = 0;

  std::int64_t q_block_stage = 0;
  std::int64_t q_schur_stage = 0;
  std::int64_t q_peak = 0;

  std::string to_json() const;
};

ResourceReport end_to_end(int d, int N, std::int64_t L, double epsilon, BlockEncodingMode mode,
                          const CostParams& params, std::optional<double> l1 = std::nullopt);

/// Grid for Fig.-2-style datasets; rows are emitted in nested axis order
/// d -> N -> L -> eps.
struct SweepSpec {
  std::vector<int> d_axis;
  std::vector<int> N_axis;
  std::vector<std::int64_t> L_axis;
  std::vector<double> eps_axis;
  std::string mode = "both";  // RUS | OAA | both
  CostParams params;

  void validate() const;
};

/// One CSV row per grid point; fixed column schema, 12-significant-digit
/// floats, byte-identical across runs.
std::string sweep_csv(const SweepSpec& spec);

}  // namespace schurprep

#endif
