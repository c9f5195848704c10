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

#ifndef SCHURPREP_CG_CASCADE_HPP
#define SCHURPREP_CG_CASCADE_HPP

#include "schurprep/fock.hpp"
#include "schurprep/state.hpp"

namespace schurprep {

/// Reduced Wigner coefficient of the rank-s step when one box is added to a
/// U(s) pattern row (j) and to the row below (j'); j' = 0 means the box
/// lands at rank s and the lower row is unchanged.
///
/// mu_row has s entries (the pre-addition rank-s row), mu_prime_row has s-1
/// entries (the pre-addition rank-(s-1) row); both must interlace. Partial
/// hook shifts are applied internally. The value is real in [-1, 1] with
/// sign S(j - j') (S(j - s) on the landing branch).
///
/// Throws ValidationError("degenerate label pair") when a denominator
/// vanishes; this cannot happen for valid box additions.
double reduced_wigner(int s, const std::vector<int>& mu_row, int j,
                      const std::vector<int>& mu_prime_row, int j_prime);

/// Full coefficient <mu_out | mu_in, level i> of the U(d) Clebsch-Gordan
/// step that adds one box of the defining representation: the product of
/// reduced Wigner factors over ranks d down to the landing rank i.
/// Returns 0 when mu_out is not reachable from mu_in by adding the box.
double cg_box_coefficient(const GTPattern& mu_in, int level, const GTPattern& mu_out, int d);

/// Schur vector built by running the Clebsch-Gordan cascade in reverse:
/// couples sites 1..N one box at a time using reduced Wigner coefficients
/// only. Independent of the spectral construction in gt_chain_basis.
DenseState cg_cascade_state(const SchurLabel& label, int d,
                            std::int64_t cap = kDefaultDenseCap);

}  // namespace schurprep

#endif
