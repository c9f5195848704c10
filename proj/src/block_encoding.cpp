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

#include "schurprep/block_encoding.hpp"

#include <cmath>

#include "schurprep/errors.hpp"

namespace schurprep {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t log_width(std::int64_t quotient_num, std::int64_t quotient_den) {
  // ceil(log2(ceil(x/k))), clamped at zero for degenerate quotients.
  const std::int64_t q = ceil_div(quotient_num, quotient_den);
  return q <= 1 ? 0 : ceil_log2_i64(q);
}

}  // namespace

int two_adic_valuation(std::int64_t n) {
  if (n < 1) throw ValidationError("2-adic valuation needs n >= 1");
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

std::int64_t optimal_k(std::int64_t size, std::int64_t m) {
  if (size < 1 || m < 1) throw ValidationError("optimal_k requires size, m >= 1");
  const double exponent = 0.5 * std::log2(static_cast<double>(size) / (2.0 * m));
  const double rounded = std::round(exponent);  // half away from zero
  std::int64_t k = rounded <= 0 ? 1 : (std::int64_t{1} << static_cast<int>(rounded));
  const std::int64_t hi = std::max<std::int64_t>(1, size / 2);
  if (k > hi) k = hi;
  return k;
}

PrepCost prep_cost(std::int64_t L, const CostParams& params) {
  params.validate();
  if (L < 2) throw ValidationError("degenerate LCU: PREP needs L >= 2");
  PrepCost c;
  c.L = L;
  c.beta = ceil_log2_i64(L);
  c.R = static_cast<int>(std::ceil(std::log2(1.0 / params.eps_prep())));
  c.m = c.beta + c.R + params.s_sign;
  c.k1 = params.k1.value_or(optimal_k(L, c.m));
  c.k2 = params.k2.value_or(optimal_k(L, c.m));
  c.v2 = two_adic_valuation(L);

  c.te = 2 * ceil_div(L, 2 * c.k1) + static_cast<std::int64_t>(c.m) * (c.k1 - 1) +
         ceil_div(L, 2 * c.k2) + c.k2 +
         2 * (3 * (static_cast<std::int64_t>(c.beta) + 1) - 3 * c.v2 +
              2 * static_cast<std::int64_t>(params.b_r) - 9) +
         2 * c.R + 2 * c.beta;

  c.ancilla = 6 + 2 * (static_cast<std::int64_t>(c.beta) + c.R) + params.b_r +
              std::max(static_cast<std::int64_t>(c.m) * (c.k1 - 1) + log_width(L, 2 * c.k1),
                       c.k2 + log_width(L, 2 * c.k2));
  return c;
}

SelCost sel_cost(std::int64_t n_mu, std::int64_t k1p, std::int64_t k2p) {
  if (n_mu < 1) throw ValidationError("SEL needs n_mu >= 1");
  if (k1p < 1 || k2p < 1) throw ValidationError("SEL blocking parameters must be >= 1");
  SelCost c;
  c.n_mu = n_mu;
  c.k1 = k1p;
  c.k2 = k2p;
  c.te = static_cast<double>(ceil_div(n_mu, k1p)) +
         static_cast<double>(n_mu) / 2.0 * static_cast<double>(k1p - 1) +
         static_cast<double>(ceil_div(n_mu, k2p)) + static_cast<double>(k2p);
  c.ancilla = std::max(n_mu * (k1p - 1) + log_width(n_mu, k1p), k2p + log_width(n_mu, k2p));
  return c;
}

SelCost sel_cost(std::int64_t n_mu, const CostParams& params) {
  const std::int64_t m = ceil_div(n_mu, 2);
  const std::int64_t k1p = params.k1p.value_or(optimal_k(n_mu, std::max<std::int64_t>(1, m)));
  const std::int64_t k2p = params.k2p.value_or(optimal_k(n_mu, std::max<std::int64_t>(1, m)));
  return sel_cost(n_mu, k1p, k2p);
}

BlockEncodingCost rus_cost(std::int64_t L, double l1, std::int64_t n_mu,
                           const CostParams& params) {
  if (l1 < 1) throw ValidationError("l1 norm must be >= 1");
  BlockEncodingCost c;
  c.mode = "RUS";
  c.prep = prep_cost(L, params);
  c.sel = sel_cost(n_mu, params);
  c.l1 = l1;
  c.b = ceil_log2_i64(L);
  c.per_attempt_te = static_cast<double>(c.prep.te) + c.sel.te;
  c.expected_attempts = l1 * l1;
  c.total_te = c.expected_attempts * c.per_attempt_te;
  c.ancilla = std::max(c.prep.ancilla, c.sel.ancilla);
  return c;
}

BlockEncodingCost oaa_cost(std::int64_t L, double l1, std::int64_t n_mu,
                           const CostParams& params) {
  if (!(l1 > 1)) throw ValidationError("no amplification needed: l1 <= 1");
  BlockEncodingCost c;
  c.mode = "OAA";
  c.prep = prep_cost(L, params);
  c.sel = sel_cost(n_mu, params);
  c.l1 = l1;
  c.b = ceil_log2_i64(L);
  c.per_attempt_te = static_cast<double>(c.prep.te) + c.sel.te;
  c.theta = std::asin(1.0 / l1);
  c.r_star = static_cast<std::int64_t>(std::ceil((M_PI / 2 - c.theta) / (2 * c.theta)));
  c.reflection_cost = std::max<std::int64_t>(0, 2 * static_cast<std::int64_t>(c.b) - 3);
  c.exact_amplification =
      std::abs(std::sin(static_cast<double>(2 * c.r_star + 1) * c.theta) - 1.0) < 1e-12;
  c.total_te = static_cast<double>(2 * c.r_star + 1) * c.per_attempt_te +
               static_cast<double>(2 * c.r_star) * static_cast<double>(c.reflection_cost);
  c.ancilla = std::max({c.prep.ancilla, c.sel.ancilla,
                        std::max<std::int64_t>(0, static_cast<std::int64_t>(c.b) - 2)});
  return c;
}

}  // namespace schurprep
