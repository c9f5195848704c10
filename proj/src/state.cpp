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

#include "schurprep/state.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "schurprep/errors.hpp"

namespace schurprep {

std::int64_t dense_dimension(int d, int N, std::int64_t cap) {
  if (d < 1 || N < 1) throw ValidationError("dense state requires d >= 1, N >= 1");
  std::int64_t dim = 1;
  for (int k = 0; k < N; ++k) {
    dim *= d;
    if (dim > cap)
      throw CapacityError("d^N = " + std::to_string(d) + "^" + std::to_string(N) +
                          " exceeds the dense cap " + std::to_string(cap));
  }
  return dim;
}

int state_digit(std::int64_t index, int k, int d, int N) {
  std::int64_t div = 1;
  for (int t = 0; t < N - k; ++t) div *= d;
  return static_cast<int>((index / div) % d);
}

std::int64_t state_index(const std::vector<int>& digits, int d) {
  std::int64_t idx = 0;
  for (int v : digits) idx = idx * d + v;
  return idx;
}

std::string index_string(std::int64_t index, int d, int N) {
  std::string out;
  for (int k = 1; k <= N; ++k) {
    const int dig = state_digit(index, k, d, N);
    if (d <= 10)
      out += static_cast<char>('0' + dig);
    else
      out += "[" + std::to_string(dig) + "]";
  }
  return out;
}

void fix_phase(DenseState& state, double threshold) {
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    const cplx a = state.amplitudes[i];
    if (std::abs(a) > threshold) {
      state.amplitudes *= std::conj(a) / std::abs(a);
      return;
    }
  }
}

double ray_distance(const DenseState& a, const DenseState& b) {
  const cplx overlap = a.amplitudes.dot(b.amplitudes);
  const double mag = std::abs(overlap);
  const cplx phase = mag > 1e-14 ? overlap / mag : cplx(1, 0);
  return (a.amplitudes - phase * b.amplitudes).norm();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string export_state_json(const DenseState& state, double cutoff) {
  std::string out = "{\"d\":" + std::to_string(state.d) + ",\"N\":" + std::to_string(state.N) +
                    ",\"amplitudes\":[";
  bool first = true;
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    const cplx a = state.amplitudes[i];
    if (std::abs(a) <= cutoff) continue;
    if (!first) out += ",";
    first = false;
    out += "{\"index\":\"" + index_string(i, state.d, state.N) + "\",\"re\":" +
           format_double(a.real()) + ",\"im\":" + format_double(a.imag()) + "}";
  }
  return out + "]}";
}

std::string export_state_csv(const DenseState& state, double cutoff) {
  std::string out = "index,re,im\n";
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    const cplx a = state.amplitudes[i];
    if (std::abs(a) <= cutoff) continue;
    out += index_string(i, state.d, state.N) + "," + format_double(a.real()) + "," +
           format_double(a.imag()) + "\n";
  }
  return out;
}

}  // namespace schurprep
