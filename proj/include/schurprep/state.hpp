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

#ifndef SCHURPREP_STATE_HPP
#define SCHURPREP_STATE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

namespace schurprep {

using cplx = std::complex<double>;
using StateVector = Eigen::VectorXcd;

inline constexpr std::int64_t kDefaultDenseCap = std::int64_t{1} << 20;

/// Dense amplitude vector on (C^d)^{tensor N}. Index convention: the basis
/// state |i_1 ... i_N> (digits i_k in 0..d-1, site 1 most significant) has
/// index sum_k i_k d^{N-k}.
struct DenseState {
  int d = 0;
  int N = 0;
  StateVector amplitudes;

  std::int64_t dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
};

/// d^N, guarded by the dense cap. Throws CapacityError beyond it.
std::int64_t dense_dimension(int d, int N, std::int64_t cap = kDefaultDenseCap);

/// Digit i_k (k = 1..N, site 1 most significant) of a basis index.
int state_digit(std::int64_t index, int k, int d, int N);

/// Basis index of a digit string.
std::int64_t state_index(const std::vector<int>& digits, int d);

/// "012" style digit string of a basis index (one character per site,
/// digits beyond 9 rendered in brackets).
std::string index_string(std::int64_t index, int d, int N);

/// Fix the global phase so the first amplitude with |a| > threshold
/// (lexicographic index order) is real positive.
void fix_phase(DenseState& state, double threshold = 1e-6);

/// |<a|b>| after optimal global-phase alignment equals 1 for identical rays;
/// returns the ray distance min_phi || a - e^{i phi} b ||.
double ray_distance(const DenseState& a, const DenseState& b);

/// JSON or CSV dump of all amplitudes with |a| > cutoff, deterministic order
/// and fixed 12-significant-digit floats.
std::string export_state_json(const DenseState& state, double cutoff = 1e-12);
std::string export_state_csv(const DenseState& state, double cutoff = 1e-12);

/// %.12g rendering used by every exporter (golden-diff stability).
std::string format_double(double x);

}  // namespace schurprep

#endif
