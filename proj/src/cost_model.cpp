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

#include "schurprep/cost_model.hpp"

#include <cmath>

#include "schurprep/errors.hpp"

namespace schurprep {

namespace {

std::int64_t binom2(std::int64_t s) { return s * (s - 1) / 2; }

}  // namespace

void CostParams::validate() const {
  if (!(epsilon > 0 && epsilon < 0.5))
    throw ValidationError("epsilon must lie in (0, 1/2)");
  if (epsilon_prep && !(*epsilon_prep > 0 && *epsilon_prep < 1))
    throw ValidationError("epsilon_prep must lie in (0, 1)");
  if (b_r < 1) throw ValidationError("b_r must be >= 1");
  if (a_mcx_prov < 0) throw ValidationError("a_mcx_prov must be >= 0");
  if (s_sign != 1) throw ValidationError("the QROAM word carries exactly one sign bit");
  for (const auto& k : {k1, k2, k1p, k2p})
    if (k && *k < 1) throw ValidationError("QROAM blocking parameters must be >= 1");
}

ArithmeticCosts arithmetic_costs(int w) {
  if (w < 1) throw ValidationError("word size must be >= 1");
  ArithmeticCosts c;
  c.add = 2 * static_cast<std::int64_t>(w) - 1;
  c.mul = 2 * static_cast<std::int64_t>(w) * w + w;
  c.newton_iters = ceil_log2_i64(w) + 2;
  c.recip = c.newton_iters * (2 * c.mul + 3 * c.add);
  c.sqrt = c.newton_iters * (c.recip + c.mul + 2 * c.add);
  return c;
}

std::int64_t cordic_cost(int w, int f) {
  if (w < 1 || f < 1) throw ValidationError("cordic_cost requires w, f >= 1");
  return 3 * static_cast<std::int64_t>(f) * arithmetic_costs(w).add;
}

RotationSynthesis rotation_synthesis(double delta, const CostParams& params) {
  if (!(delta > 0 && delta < 1)) throw ValidationError("synthesis tolerance must be in (0,1)");
  RotationSynthesis r;
  r.t_dir = params.alpha_dir * std::log2(1.0 / delta) + params.beta_dir;
  r.t_cr = 2.0 * (params.alpha_dir * std::log2(2.0 / delta) + params.beta_dir);
  return r;
}

ErrorBudget error_budget(double epsilon, int d, int N) {
  if (!(epsilon > 0 && epsilon < 0.5)) throw ValidationError("epsilon must lie in (0, 1/2)");
  if (d < 2 || N < 2) throw ValidationError("error_budget requires d >= 2, N >= 2");
  ErrorBudget b;
  b.eps_rot = epsilon / 2;
  b.eps_arith = epsilon / 2;
  std::int64_t per_cg = 0;
  for (int s = 2; s <= d; ++s)
    per_cg += binom2(s) * (2 * ceil_log2_i64(s) - 1);
  b.k_rot = static_cast<std::int64_t>(N - 1) * per_cg;
  b.delta_rot = b.eps_rot / static_cast<double>(b.k_rot);
  b.eps_theta = b.eps_arith / static_cast<double>(b.k_rot);
  b.f = static_cast<int>(std::ceil(std::log2(M_PI / b.eps_theta)));
  return b;
}

WordSize word_size(int s, int N, int f) {
  if (s < 2) throw ValidationError("word_size requires s >= 2");
  WordSize ws;
  ws.integer_bits = ceil_log2_i64(2 * static_cast<std::int64_t>(N) + 2 * s + 1) + 2;
  ws.guard_bits = ceil_log2_i64(s) + 3;
  ws.f = f;
  ws.w = ws.integer_bits + f + ws.guard_bits;
  return ws;
}

RankCost rank_level_cost(int s, int d, int N, const CostParams& params) {
  params.validate();
  if (s < 2 || s > d) throw ValidationError("rank must satisfy 2 <= s <= d");
  const ErrorBudget budget = error_budget(params.epsilon, d, N);
  const RegisterWidths widths =
      register_widths(d, N, params.encoding, params.enumeration_threshold);
  const std::int64_t k_lambda_mu = widths.n_lambda + widths.n_mu;

  RankCost rc;
  rc.s = s;
  const std::int64_t n_s = ceil_log2_i64(s);
  rc.m_s = binom2(s);
  rc.e_s = 2 * n_s - 1;
  rc.k_tot = k_lambda_mu + (n_s - 1);
  rc.c_tof = std::max<std::int64_t>(1, 2 * rc.k_tot - 3);
  rc.word = word_size(s, N, budget.f);
  rc.t_cr = rotation_synthesis(budget.delta_rot, params).t_cr;

  rc.toffoli_compile = rc.m_s * rc.e_s * 2 * rc.c_tof;
  rc.t_count_compile = static_cast<double>(rc.m_s * rc.e_s) * rc.t_cr;

  const ArithmeticCosts a = arithmetic_costs(rc.word.w);
  const std::int64_t pairs = static_cast<std::int64_t>(s) * (s - 1);
  rc.c_diff = 2 * pairs * a.add;
  rc.c_entries = pairs * (8 * a.mul + a.recip + a.sqrt + 5 * a.add);
  rc.c_angles = rc.m_s * cordic_cost(rc.word.w, budget.f);
  rc.c_eval = rc.c_diff + rc.c_entries + rc.c_angles;

  rc.te = static_cast<double>(rc.toffoli_compile + rc.c_eval) + rc.t_count_compile / 7.0;
  return rc;
}

SchurCostBreakdown schur_transform_te(int d, int N, double epsilon, const CostParams& params) {
  CostParams p = params;
  p.epsilon = epsilon;
  p.validate();
  if (d < 2 || N < 2) throw ValidationError("schur_transform_te requires d >= 2, N >= 2");

  SchurCostBreakdown b;
  b.d = d;
  b.N = N;
  b.epsilon = epsilon;
  b.widths = register_widths(d, N, p.encoding, p.enumeration_threshold);
  b.budget = error_budget(epsilon, d, N);
  b.k_lambda_mu = b.widths.n_lambda + b.widths.n_mu;
  for (int s = 2; s <= d; ++s) {
    RankCost rc = rank_level_cost(s, d, N, p);
    b.toffoli_per_cg += rc.toffoli_compile + rc.c_eval;
    b.t_count_per_cg += rc.t_count_compile;
    b.ranks.push_back(std::move(rc));
  }
  b.toffoli_total = static_cast<std::int64_t>(N - 1) * b.toffoli_per_cg;
  b.t_count_total = static_cast<double>(N - 1) * b.t_count_per_cg;
  b.t_count_total_ceil = static_cast<std::int64_t>(std::ceil(b.t_count_total));
  b.te_total = static_cast<double>(b.toffoli_total) +
               static_cast<double>(b.t_count_total_ceil) / 7.0;
  return b;
}

SchurQubits schur_qubits(int d, int N, double epsilon, const CostParams& params) {
  CostParams p = params;
  p.epsilon = epsilon;
  p.validate();
  if (d < 2 || N < 2) throw ValidationError("schur_qubits requires d >= 2, N >= 2");
  const RegisterWidths w = register_widths(d, N, p.encoding, p.enumeration_threshold);
  const ErrorBudget budget = error_budget(epsilon, d, N);
  const std::int64_t k_lambda_mu = w.n_lambda + w.n_mu;

  SchurQubits q;
  q.q_sys = static_cast<std::int64_t>(w.n_system) + w.n_lambda + w.n_mu + w.n_sigma;
  for (int s = 2; s <= d; ++s) {
    const std::int64_t n_s = ceil_log2_i64(s);
    const std::int64_t a_min = std::max<std::int64_t>(0, k_lambda_mu + n_s - 3);
    const std::int64_t a_use = std::max<std::int64_t>(p.a_mcx_prov, a_min);
    const std::int64_t anc = n_s + a_use + 12 * word_size(s, N, budget.f).w;
    q.q_anc_per_rank.emplace_back(s, anc);
    q.anc_peak = std::max(q.anc_peak, anc);
  }
  q.total = q.q_sys + q.anc_peak;
  return q;
}

}  // namespace schurprep
