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

#ifndef SCHURPREP_BIGINT_HPP
#define SCHURPREP_BIGINT_HPP

#include <cstdint>
#include <gmpxx.h>

#include "schurprep/errors.hpp"

namespace schurprep {

// All combinatorial quantities (partition counts, irrep dimensions) are kept
// exact; they overflow 64 bits already at modest (d, N).
using BigInt = mpz_class;

/// ceil(log2(x)) for x >= 1.
inline int ceil_log2(const BigInt& x) {
  if (x <= 0) throw ValidationError("ceil_log2 requires a positive argument");
  if (x == 1) return 0;
  BigInt y = x - 1;
  return static_cast<int>(mpz_sizeinbase(y.get_mpz_t(), 2));
}

inline int ceil_log2_i64(std::int64_t x) { return ceil_log2(BigInt(static_cast<long>(x))); }

}  // namespace schurprep

#endif
