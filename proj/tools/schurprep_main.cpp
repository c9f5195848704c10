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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "schurprep/cg_cascade.hpp"
#include "schurprep/errors.hpp"
#include "schurprep/golden_u3.hpp"
#include "schurprep/report.hpp"
#include "schurprep/schur_basis.hpp"
#include "schurprep/task_io.hpp"

namespace {

using namespace schurprep;

int cmd_map(const std::string& taskfile, bool as_json) {
  const PreparationTask task = load_task(taskfile);
  const LabeledSuperposition sup =
      map_superposition(task.configs, task.coefficients, task.statistics, task.d,
                        task.lambda_choice);
  std::string sigma = "(";
  for (size_t i = 0; i < sup.sigma.size(); ++i)
    sigma += (i ? "," : "") + std::to_string(sup.sigma[i]);
  sigma += ")";
  if (as_json) {
    std::string out = "{\"lambda\":\"" + sup.lambda.str(task.d) + "\",\"sigma\":\"" + sigma +
                      "\",\"terms\":[";
    for (size_t i = 0; i < sup.terms.size(); ++i) {
      const LabeledTerm& t = sup.terms[i];
      const std::vector<int> z = dynkin_from_fock(t.source);
      std::string zs = "(";
      for (size_t k = 0; k < z.size(); ++k) zs += (k ? "," : "") + std::to_string(z[k]);
      zs += ")";
      if (i) out += ",";
      out += "{\"fock\":\"" + t.source.str() + "\",\"z\":\"" + zs + "\",\"gt\":\"" +
             t.mu.compressed_str() + "\",\"re\":" + format_double(t.coefficient.real()) +
             ",\"im\":" + format_double(t.coefficient.imag()) + "}";
    }
    std::cout << out << "]}" << std::endl;
    return 0;
  }
  std::cout << "lambda = " << sup.lambda.str(task.d) << "  sigma = " << sigma << "\n";
  for (const LabeledTerm& t : sup.terms) {
    const std::vector<int> z = dynkin_from_fock(t.source);
    std::string zs = "(";
    for (size_t k = 0; k < z.size(); ++k) zs += (k ? "," : "") + std::to_string(z[k]);
    zs += ")";
    std::cout << t.source.str() << "  z = " << zs << "  mu = " << t.mu.compressed_str()
              << "  c = " << format_double(t.coefficient.real());
    if (t.coefficient.imag() != 0)
      std::cout << (t.coefficient.imag() > 0 ? "+" : "") << format_double(t.coefficient.imag())
                << "i";
    std::cout << "\n";
  }
  return 0;
}

int cmd_prepare(const std::string& taskfile, const std::string& export_path, double cutoff,
                std::int64_t cap) {
  const PreparationTask task = load_task(taskfile);
  SimOptions opts;
  opts.cap = cap;
  const LabeledSuperposition sup =
      map_superposition(task.configs, task.coefficients, task.statistics, task.d,
                        task.lambda_choice);
  const DenseState state = prepare_first_quantized(sup, task.d, opts);
  std::int64_t nonzero = 0;
  for (std::int64_t i = 0; i < state.dim(); ++i)
    if (std::abs(state.amplitudes[i]) > cutoff) ++nonzero;
  std::cout << "sector lambda = " << sup.lambda.str(task.d) << "\n";
  std::cout << "dimension d^N = " << state.dim() << "\n";
  std::cout << "norm = " << format_double(state.norm()) << "\n";
  std::cout << "amplitudes above " << format_double(cutoff) << ": " << nonzero << "\n";
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw ValidationError("cannot write '" + export_path + "'");
    const bool csv = export_path.size() > 4 &&
                     export_path.compare(export_path.size() - 4, 4, ".csv") == 0;
    out << (csv ? export_state_csv(state, cutoff) : export_state_json(state, cutoff));
    std::cout << "exported to " << export_path << "\n";
  }
  return 0;
}

int run_invariant_suites(std::ostream& os) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    os << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  // Schur-Weyl dimension identity on every (d, N) with d^N <= 4096.
  {
    bool ok = true;
    for (int d = 2; d <= 64 && ok; ++d) {
      for (int N = 1; N <= 12; ++N) {
        BigInt dim = 1;
        for (int k = 0; k < N; ++k) dim *= d;
        if (dim > 4096) break;
        BigInt total = 0;
        for (const Partition& lambda : enumerate_partitions(N, d))
          total += weyl_dimension(lambda, d) * sym_group_dimension(lambda);
        if (total != dim) ok = false;
      }
    }
    check("Schur-Weyl dimension identity (d^N <= 4096)", ok);
  }

  // Fock <-> Dynkin round trip, exhaustive over compositions.
  {
    bool ok = true;
    for (int d = 2; d <= 8 && ok; ++d) {
      for (int N = 1; N <= 12; ++N) {
        std::int64_t dim = 1;
        for (int k = 0; k < N; ++k) dim *= d;
        if (dim > 4096) break;
        std::vector<int> n(static_cast<size_t>(d), 0);
        auto rec = [&](auto&& self, int mode, int left) -> void {
          if (!ok) return;
          if (mode == d - 1) {
            n[static_cast<size_t>(mode)] = left;
            const FockState f{n};
            if (fock_from_dynkin(dynkin_from_fock(f), N, d) != f) ok = false;
            return;
          }
          for (int v = 0; v <= left; ++v) {
            n[static_cast<size_t>(mode)] = v;
            self(self, mode + 1, left - v);
          }
        };
        rec(rec, 0, N);
      }
    }
    check("Fock <-> Dynkin round trip (exhaustive)", ok);
  }

  // DynkinToGT on randomized permissible weights.
  {
    bool ok = true;
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 2000 && ok; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 4);
      const int N = 1 + static_cast<int>(rng() % 6);
      const auto shapes = enumerate_partitions(N, d);
      const Partition lambda = shapes[rng() % shapes.size()];
      const auto patterns = enumerate_gt_patterns(lambda, d);
      const GTPattern target = patterns[rng() % patterns.size()];
      const std::vector<int> z = gt_weight(target).dynkin;
      try {
        const GTPattern built = dynkin_to_gt(lambda, z, d);
        if (!validate_gt(built).ok || gt_weight(built).dynkin != z) ok = false;
      } catch (const ValidationError&) {
        ok = false;
      }
    }
    check("DynkinToGT validity on randomized permissible weights", ok);
  }

  // Partition counting against enumeration.
  {
    bool ok = true;
    for (int N = 0; N <= 18 && ok; ++N)
      for (int d = 1; d <= 10; ++d)
        if (count_partitions(N, d) !=
            BigInt(static_cast<long>(enumerate_partitions(N, d).size())))
          ok = false;
    check("count_partitions equals enumeration", ok);
  }
  return failures;
}

int cmd_selftest(bool as_json) {
  const GoldenU3Report report = verify_golden_u3();
  if (as_json) {
    std::cout << report.to_json() << std::endl;
    return report.all_pass ? 0 : 3;
  }
  std::cout << (report.all_pass ? "PASS" : "FAIL") << "  golden U(3) corpus: "
            << report.summary() << "\n";
  int failures = report.all_pass ? 0 : 1;
  failures += run_invariant_suites(std::cout);
  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << std::endl;
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schurprep: first-quantized state preparation toolkit and resource estimator"};
  app.require_subcommand(1);

  std::string taskfile, export_path, out_path, config_path;
  bool as_json = false;
  double cutoff = 1e-12;
  std::int64_t cap = kDefaultDenseCap;

  auto* map_cmd = app.add_subcommand("map", "map a task file to Schur labels");
  map_cmd->add_option("taskfile", taskfile, "JSON task file")->required();
  map_cmd->add_flag("--json", as_json, "emit JSON");

  auto* prep_cmd = app.add_subcommand("prepare", "construct the first-quantized state");
  prep_cmd->add_option("taskfile", taskfile, "JSON task file")->required();
  prep_cmd->add_option("--export", export_path, "write amplitudes (.json or .csv)");
  prep_cmd->add_option("--cutoff", cutoff, "amplitude export cutoff");
  prep_cmd->add_option("--cap", cap, "dense dimension cap");

  auto* self_cmd = app.add_subcommand("selftest", "golden corpus and invariant suites");
  self_cmd->add_flag("--json", as_json, "emit the golden report as JSON");

  int est_d = 0, est_N = 0;
  std::int64_t est_L = 0;
  double est_eps = 1e-4, est_l1 = -1;
  std::string est_mode = "OAA", est_encoding;
  std::int64_t k1 = 0, k2 = 0, k1p = 0, k2p = 0;
  double eps_prep = -1;
  auto* est_cmd = app.add_subcommand("estimate", "single-point resource report (JSON)");
  est_cmd->add_option("--d", est_d, "single-particle dimension")->required();
  est_cmd->add_option("--N", est_N, "particle count")->required();
  est_cmd->add_option("--L", est_L, "number of configurations")->required();
  est_cmd->add_option("--eps", est_eps, "total error budget");
  est_cmd->add_option("--mode", est_mode, "RUS or OAA");
  est_cmd->add_option("--encoding", est_encoding, "naive|compressed|balanced-proxy");
  est_cmd->add_option("--l1", est_l1, "LCU l1 norm (default sqrt(L))");
  est_cmd->add_option("--k1", k1, "PREP QROAM blocking (compute)");
  est_cmd->add_option("--k2", k2, "PREP QROAM blocking (uncompute)");
  est_cmd->add_option("--k1p", k1p, "SEL QROAM blocking (compute)");
  est_cmd->add_option("--k2p", k2p, "SEL QROAM blocking (uncompute)");
  est_cmd->add_option("--eps-prep", eps_prep, "PREP precision (default eps)");
  est_cmd->add_option("--config", config_path, "JSON file with estimator parameters");

  std::vector<int> sweep_d, sweep_N;
  std::vector<std::int64_t> sweep_L;
  std::vector<double> sweep_eps;
  std::string sweep_mode = "both";
  auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep to CSV");
  sweep_cmd->add_option("--d", sweep_d, "d axis")->required()->delimiter(',');
  sweep_cmd->add_option("--N", sweep_N, "N axis")->required()->delimiter(',');
  sweep_cmd->add_option("--L", sweep_L, "L axis")->required()->delimiter(',');
  sweep_cmd->add_option("--eps", sweep_eps, "epsilon axis")->required()->delimiter(',');
  sweep_cmd->add_option("--mode", sweep_mode, "RUS, OAA or both");
  sweep_cmd->add_option("--encoding", est_encoding, "naive|compressed|balanced-proxy");
  sweep_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
  sweep_cmd->add_option("--config", config_path, "JSON file with estimator parameters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (map_cmd->parsed()) return cmd_map(taskfile, as_json);
    if (prep_cmd->parsed()) return cmd_prepare(taskfile, export_path, cutoff, cap);
    if (self_cmd->parsed()) return cmd_selftest(as_json);

    CostParams params;
    if (!config_path.empty()) params = load_cost_params(config_path);
    if (!est_encoding.empty()) params.encoding = encoding_from_string(est_encoding);
    if (k1 > 0) params.k1 = k1;
    if (k2 > 0) params.k2 = k2;
    if (k1p > 0) params.k1p = k1p;
    if (k2p > 0) params.k2p = k2p;
    if (eps_prep > 0) params.epsilon_prep = eps_prep;

    if (est_cmd->parsed()) {
      const ResourceReport report =
          end_to_end(est_d, est_N, est_L, est_eps, mode_from_string(est_mode), params,
                     est_l1 > 0 ? std::optional<double>(est_l1) : std::nullopt);
      std::cout << report.to_json() << std::endl;
      return 0;
    }
    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.d_axis = sweep_d;
      spec.N_axis = sweep_N;
      spec.L_axis = sweep_L;
      spec.eps_axis = sweep_eps;
      spec.mode = sweep_mode;
      spec.params = params;
      const std::string csv = sweep_csv(spec);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path);
        if (!out) throw ValidationError("cannot write '" + out_path + "'");
        out << csv;
        std::cout << "wrote " << out_path << std::endl;
      }
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << std::endl;
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << std::endl;
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant breach: " << e.what() << std::endl;
    return 3;
  }
  return 0;
}
