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

#include "schurprep/registers.hpp"

#include "schurprep/errors.hpp"

namespace schurprep {

std::string to_string(Encoding e) {
  switch (e) {
    case Encoding::naive: return "naive";
    case Encoding::compressed: return "compressed";
    case Encoding::balanced_proxy: return "balanced-proxy";
  }
  return "?";
}

Encoding encoding_from_string(const std::string& s) {
  if (s == "naive") return Encoding::naive;
  if (s == "compressed") return Encoding::compressed;
  if (s == "balanced-proxy" || s == "balanced_proxy") return Encoding::balanced_proxy;
  throw ValidationError("unknown encoding '" + s + "' (naive|compressed|balanced-proxy)");
}

BigInt max_weyl_dimension(int N, int d) {
  BigInt best = 0;
  for (const Partition& lambda : enumerate_partitions(N, d)) {
    BigInt dim = weyl_dimension(lambda, d);
    if (dim > best) best = dim;
  }
  return best;
}

RegisterWidths register_widths(int d, int N, Encoding encoding,
                               std::int64_t enumeration_threshold) {
  if (d < 2 || N < 1) throw ValidationError("register_widths requires d >= 2, N >= 1");
  RegisterWidths w;
  w.encoding = encoding;
  const int n_d = ceil_log2_i64(d);
  const int bits_per_part = ceil_log2_i64(static_cast<std::int64_t>(N) + 1);
  w.n_sigma = (N - 1) * n_d;
  w.n_system = N * n_d;
  if (encoding == Encoding::naive) {
    w.n_lambda = d * bits_per_part;
    w.n_mu = d * (d - 1) / 2 * bits_per_part;
    return w;
  }
  const BigInt pdn = count_partitions(N, d);
  w.n_lambda = ceil_log2(pdn);
  const bool exhaustive =
      encoding == Encoding::compressed && pdn <= BigInt(static_cast<long>(enumeration_threshold));
  const BigInt dim = exhaustive ? max_weyl_dimension(N, d) : weyl_dimension(balanced_shape(N, d), d);
  w.n_mu = ceil_log2(dim);
  return w;
}

}  // namespace schurprep
