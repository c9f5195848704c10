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

#include "schurprep/report.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "schurprep/errors.hpp"
#include "schurprep/state.hpp"

namespace schurprep {

namespace {

using ordered_json = nlohmann::ordered_json;

// Round to 12 significant digits so serialized reports are stable.
double stable(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

}  // namespace

std::string to_string(BlockEncodingMode m) {
  return m == BlockEncodingMode::rus ? "RUS" : "OAA";
}

BlockEncodingMode mode_from_string(const std::string& s) {
  if (s == "RUS" || s == "rus") return BlockEncodingMode::rus;
  if (s == "OAA" || s == "oaa") return BlockEncodingMode::oaa;
  throw ValidationError("unknown block-encoding mode '" + s + "' (RUS|OAA)");
}

ResourceReport end_to_end(int d, int N, std::int64_t L, double epsilon, BlockEncodingMode mode,
                          const CostParams& params, std::optional<double> l1) {
  CostParams p = params;
  p.epsilon = epsilon;
  p.validate();
  ResourceReport r;
  r.d = d;
  r.N = N;
  r.L = L;
  r.epsilon = epsilon;
  r.mode = mode;
  r.l1 = l1.value_or(std::sqrt(static_cast<double>(L)));
  r.widths = register_widths(d, N, p.encoding, p.enumeration_threshold);
  r.schur = schur_transform_te(d, N, epsilon, p);
  r.schur_qubit_model = schur_qubits(d, N, epsilon, p);
  r.block = mode == BlockEncodingMode::rus ? rus_cost(L, r.l1, r.widths.n_mu, p)
                                           : oaa_cost(L, r.l1, r.widths.n_mu, p);
  r.te_block = r.block.total_te;
  r.te_schur = r.schur.te_total;
  r.te_total = r.te_block + r.te_schur;
  r.q_block_stage = static_cast<std::int64_t>(r.widths.n_lambda) + r.widths.n_mu +
                    r.widths.n_sigma + r.block.b + r.block.ancilla;
  r.q_schur_stage = r.schur_qubit_model.total;
  r.q_peak = std::max(r.q_block_stage, r.q_schur_stage);
  return r;
}

std::string ResourceReport::to_json() const {
  ordered_json j;
  j["d"] = d;
  j["N"] = N;
  j["L"] = L;
  j["epsilon"] = stable(epsilon);
  j["mode"] = schurprep::to_string(mode);
  j["encoding"] = schurprep::to_string(widths.encoding);
  j["l1"] = stable(l1);
  j["registers"] = {{"n_lambda", widths.n_lambda},
                    {"n_mu", widths.n_mu},
                    {"n_sigma", widths.n_sigma},
                    {"n_system", widths.n_system}};
  ordered_json budget;
  budget["eps_rot"] = stable(schur.budget.eps_rot);
  budget["eps_arith"] = stable(schur.budget.eps_arith);
  budget["k_rot"] = schur.budget.k_rot;
  budget["delta_rot"] = stable(schur.budget.delta_rot);
  budget["eps_theta"] = stable(schur.budget.eps_theta);
  budget["f"] = schur.budget.f;
  j["error_budget"] = budget;
  j["k_lambda_mu"] = schur.k_lambda_mu;

  ordered_json ranks = ordered_json::array();
  for (const RankCost& rc : schur.ranks) {
    ordered_json rj;
    rj["s"] = rc.s;
    rj["two_level_ops"] = rc.m_s;
    rj["enables"] = rc.e_s;
    rj["k_tot"] = rc.k_tot;
    rj["c_tof"] = rc.c_tof;
    rj["word_size"] = rc.word.w;
    rj["t_cr"] = stable(rc.t_cr);
    rj["toffoli_compile"] = rc.toffoli_compile;
    rj["t_count_compile"] = stable(rc.t_count_compile);
    rj["c_diff"] = rc.c_diff;
    rj["c_entries"] = rc.c_entries;
    rj["c_angles"] = rc.c_angles;
    rj["c_eval"] = rc.c_eval;
    rj["te"] = stable(rc.te);
    ranks.push_back(std::move(rj));
  }
  ordered_json schur_json;
  schur_json["ranks"] = std::move(ranks);
  schur_json["toffoli_per_cg"] = schur.toffoli_per_cg;
  schur_json["t_count_per_cg"] = stable(schur.t_count_per_cg);
  schur_json["toffoli_total"] = schur.toffoli_total;
  schur_json["t_count_total"] = stable(schur.t_count_total);
  schur_json["t_count_total_ceil"] = schur.t_count_total_ceil;
  schur_json["te_total"] = stable(schur.te_total);
  ordered_json anc = ordered_json::array();
  for (const auto& [s, a] : schur_qubit_model.q_anc_per_rank)
    anc.push_back({{"s", s}, {"q_anc", a}});
  schur_json["q_sys"] = schur_qubit_model.q_sys;
  schur_json["q_anc_per_rank"] = std::move(anc);
  schur_json["q_anc_peak"] = schur_qubit_model.anc_peak;
  schur_json["q_total"] = schur_qubit_model.total;
  j["inverse_schur"] = std::move(schur_json);

  ordered_json bj;
  bj["mode"] = block.mode;
  bj["prep"] = {{"L", block.prep.L},     {"beta", block.prep.beta}, {"R", block.prep.R},
                {"m", block.prep.m},     {"k1", block.prep.k1},     {"k2", block.prep.k2},
                {"v2_L", block.prep.v2}, {"te", block.prep.te},     {"ancilla", block.prep.ancilla}};
  bj["sel"] = {{"n_mu", block.sel.n_mu},
               {"k1", block.sel.k1},
               {"k2", block.sel.k2},
               {"te", stable(block.sel.te)},
               {"ancilla", block.sel.ancilla}};
  bj["b"] = block.b;
  bj["per_attempt_te"] = stable(block.per_attempt_te);
  if (mode == BlockEncodingMode::rus) {
    bj["expected_attempts"] = stable(block.expected_attempts);
  } else {
    bj["theta"] = stable(block.theta);
    bj["r_star"] = block.r_star;
    bj["reflection_cost"] = block.reflection_cost;
    bj["exact_amplification"] = block.exact_amplification;
  }
  bj["total_te"] = stable(block.total_te);
  bj["ancilla"] = block.ancilla;
  j["block_encoding"] = std::move(bj);

  j["te_block"] = stable(te_block);
  j["te_schur"] = stable(te_schur);
  j["te_total"] = stable(te_total);
  j["q_block_stage"] = q_block_stage;
  j["q_schur_stage"] = q_schur_stage;
  j["q_peak"] = q_peak;
  return j.dump(2);
}

void SweepSpec::validate() const {
  params.validate();
  if (d_axis.empty() || N_axis.empty() || L_axis.empty() || eps_axis.empty())
    throw ValidationError("sweep grid must be nonempty on every axis");
  auto strictly_increasing = [](const auto& v) {
    for (size_t i = 1; i < v.size(); ++i)
      if (!(v[i - 1] < v[i])) return false;
    return true;
  };
  if (!strictly_increasing(d_axis) || !strictly_increasing(N_axis) ||
      !strictly_increasing(L_axis) || !strictly_increasing(eps_axis))
    throw ValidationError("sweep axes must be strictly increasing");
  if (mode != "RUS" && mode != "OAA" && mode != "both")
    throw ValidationError("sweep mode must be RUS, OAA or both");
}

std::string sweep_csv(const SweepSpec& spec) {
  spec.validate();
  const bool want_rus = spec.mode != "OAA";
  const bool want_oaa = spec.mode != "RUS";
  std::string out =
      "d,N,L,epsilon,encoding,l1,n_lambda,n_mu,n_sigma,n_system,"
      "te_schur,q_schur_stage,prep_te,sel_te,per_attempt_te,"
      "rus_attempts,rus_block_te,rus_total_te,rus_q_block,rus_q_peak,"
      "oaa_r_star,oaa_block_te,oaa_total_te,oaa_q_block,oaa_q_peak\n";
  for (int d : spec.d_axis) {
    for (int N : spec.N_axis) {
      for (std::int64_t L : spec.L_axis) {
        for (double eps : spec.eps_axis) {
          const ResourceReport base =
              end_to_end(d, N, L, eps, BlockEncodingMode::oaa, spec.params);
          std::string row = std::to_string(d) + "," + std::to_string(N) + "," +
                            std::to_string(L) + "," + format_double(eps) + "," +
                            to_string(spec.params.encoding) + "," + format_double(base.l1) + "," +
                            std::to_string(base.widths.n_lambda) + "," +
                            std::to_string(base.widths.n_mu) + "," +
                            std::to_string(base.widths.n_sigma) + "," +
                            std::to_string(base.widths.n_system) + "," +
                            format_double(base.te_schur) + "," +
                            std::to_string(base.q_schur_stage) + "," +
                            std::to_string(base.block.prep.te) + "," +
                            format_double(base.block.sel.te) + "," +
                            format_double(base.block.per_attempt_te) + ",";
          if (want_rus) {
            const ResourceReport rus =
                end_to_end(d, N, L, eps, BlockEncodingMode::rus, spec.params);
            row += format_double(rus.block.expected_attempts) + "," +
                   format_double(rus.te_block) + "," + format_double(rus.te_total) + "," +
                   std::to_string(rus.q_block_stage) + "," + std::to_string(rus.q_peak) + ",";
          } else {
            row += ",,,,,";
          }
          if (want_oaa) {
            row += std::to_string(base.block.r_star) + "," + format_double(base.te_block) + "," +
                   format_double(base.te_total) + "," + std::to_string(base.q_block_stage) + "," +
                   std::to_string(base.q_peak);
          } else {
            row += ",,,,";
          }
          out += row + "\n";
        }
      }
    }
  }
  return out;
}

}  // namespace schurprep
