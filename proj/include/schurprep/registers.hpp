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

#ifndef SCHURPREP_REGISTERS_HPP
#define SCHURPREP_REGISTERS_HPP

#include <cstdint>
#include <string>

#include "schurprep/partition.hpp"

namespace schurprep {

enum class Encoding { naive, compressed, balanced_proxy };

std::string to_string(Encoding e);
Encoding encoding_from_string(const std::string& s);

/// Qubit widths of the Schur label registers.
struct RegisterWidths {
  int n_lambda = 0;
  int n_mu = 0;
  int n_sigma = 0;
  int n_system = 0;  // N * ceil(log2 d)
  Encoding encoding = Encoding::naive;
};

/// naive:    n_lambda = d ceil(log2(N+1)), n_mu = d(d-1)/2 ceil(log2(N+1)),
///           n_sigma = (N-1) ceil(log2 d), n_system = N ceil(log2 d).
/// compressed: n_lambda = ceil(log2 p_d(N)); n_mu = ceil(log2 max_lambda dim)
///           by exhaustive maximization while p_d(N) <= enumeration_threshold,
///           otherwise the balanced proxy.
/// balanced_proxy: like compressed but n_mu always from the balanced shape.
RegisterWidths register_widths(int d, int N, Encoding encoding,
                               std::int64_t enumeration_threshold = 1000000);

/// Largest U(d) irrep dimension over partitions of N with at most d parts.
BigInt max_weyl_dimension(int N, int d);

}  // namespace schurprep

#endif
