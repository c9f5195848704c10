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

#include "schurprep/golden_u3.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "schurprep/errors.hpp"

namespace schurprep {

namespace {

GoldenU3Entry entry(std::vector<int> fock, std::vector<int> z, std::vector<int> lambda, int x,
                    int y, int k, int sigma_tag,
                    std::vector<std::pair<std::string, int>> expansion) {
  GoldenU3Entry e;
  e.fock = std::move(fock);
  e.dynkin = std::move(z);
  e.lambda = Partition(lambda);
  e.mu = GTPattern({{k}, {x, y}, lambda});
  e.sigma_tag = sigma_tag;
  e.expansion = std::move(expansion);
  return e;
}

}  // namespace

const std::vector<GoldenU3Entry>& golden_u3_table() {
  static const std::vector<GoldenU3Entry> table = {
      // lambda = (3,0,0), fully symmetric, dim 10
      entry({0, 0, 3}, {0, -3}, {3, 0, 0}, 0, 0, 0, 0, {{"222", 1}}),
      entry({0, 1, 2}, {-1, -1}, {3, 0, 0}, 1, 0, 0, 0, {{"122", 1}, {"212", 1}, {"221", 1}}),
      entry({1, 0, 2}, {1, -2}, {3, 0, 0}, 1, 0, 1, 0, {{"022", 1}, {"202", 1}, {"220", 1}}),
      entry({0, 2, 1}, {-2, 1}, {3, 0, 0}, 2, 0, 0, 0, {{"112", 1}, {"121", 1}, {"211", 1}}),
      entry({1, 1, 1}, {0, 0}, {3, 0, 0}, 2, 0, 1, 0,
            {{"012", 1}, {"021", 1}, {"102", 1}, {"120", 1}, {"201", 1}, {"210", 1}}),
      entry({2, 0, 1}, {2, -1}, {3, 0, 0}, 2, 0, 2, 0, {{"002", 1}, {"020", 1}, {"200", 1}}),
      entry({0, 3, 0}, {-3, 3}, {3, 0, 0}, 3, 0, 0, 0, {{"111", 1}}),
      entry({1, 2, 0}, {-1, 2}, {3, 0, 0}, 3, 0, 1, 0, {{"011", 1}, {"101", 1}, {"110", 1}}),
      entry({2, 1, 0}, {1, 1}, {3, 0, 0}, 3, 0, 2, 0, {{"001", 1}, {"010", 1}, {"100", 1}}),
      entry({3, 0, 0}, {3, 0}, {3, 0, 0}, 3, 0, 3, 0, {{"000", 1}}),
      // lambda = (2,1,0), sigma = T2 copy, dim 8
      entry({1, 2, 0}, {-1, 2}, {2, 1, 0}, 2, 1, 1, 2, {{"110", 1}, {"101", -1}}),
      entry({2, 1, 0}, {1, 1}, {2, 1, 0}, 2, 1, 2, 2, {{"001", 1}, {"010", -1}}),
      entry({0, 2, 1}, {-2, 1}, {2, 1, 0}, 2, 0, 0, 2, {{"112", 1}, {"121", -1}}),
      entry({2, 0, 1}, {2, -1}, {2, 1, 0}, 2, 0, 2, 2, {{"002", 1}, {"020", -1}}),
      entry({0, 1, 2}, {-1, -1}, {2, 1, 0}, 1, 0, 0, 2, {{"122", 1}, {"212", -1}}),
      entry({1, 0, 2}, {1, -2}, {2, 1, 0}, 1, 0, 1, 2, {{"022", 1}, {"202", -1}}),
      entry({1, 1, 1}, {0, 0}, {2, 1, 0}, 2, 0, 1, 2, {{"012", 1}, {"120", -1}}),
      entry({1, 1, 1}, {0, 0}, {2, 1, 0}, 1, 1, 1, 2, {{"021", 1}, {"210", -1}}),
      // lambda = (2,1,0), sigma = T1 copy, dim 8
      entry({1, 2, 0}, {-1, 2}, {2, 1, 0}, 2, 1, 1, 1, {{"110", 1}, {"101", 1}, {"011", -2}}),
      entry({2, 1, 0}, {1, 1}, {2, 1, 0}, 2, 1, 2, 1, {{"001", 1}, {"010", 1}, {"100", -2}}),
      entry({0, 2, 1}, {-2, 1}, {2, 1, 0}, 2, 0, 0, 1, {{"112", 1}, {"121", 1}, {"211", -2}}),
      entry({2, 0, 1}, {2, -1}, {2, 1, 0}, 2, 0, 2, 1, {{"002", 1}, {"020", 1}, {"200", -2}}),
      entry({0, 1, 2}, {-1, -1}, {2, 1, 0}, 1, 0, 0, 1, {{"122", 1}, {"212", 1}, {"221", -2}}),
      entry({1, 0, 2}, {1, -2}, {2, 1, 0}, 1, 0, 1, 1, {{"022", 1}, {"202", 1}, {"220", -2}}),
      entry({1, 1, 1}, {0, 0}, {2, 1, 0}, 2, 0, 1, 1, {{"012", 1}, {"120", 1}, {"201", -2}}),
      entry({1, 1, 1}, {0, 0}, {2, 1, 0}, 1, 1, 1, 1, {{"021", 1}, {"210", 1}, {"102", -2}}),
      // lambda = (1,1,1), fully antisymmetric, dim 1
      entry({1, 1, 1}, {0, 0}, {1, 1, 1}, 1, 1, 1, 0,
            {{"012", 1}, {"021", -1}, {"102", -1}, {"120", 1}, {"201", 1}, {"210", -1}}),
  };
  return table;
}

namespace {

DenseState golden_state(const GoldenU3Entry& e, double perturbation) {
  DenseState s;
  s.d = 3;
  s.N = 3;
  s.amplitudes = StateVector::Zero(27);
  for (const auto& [digits, coeff] : e.expansion) {
    std::vector<int> dd;
    for (char c : digits) dd.push_back(c - '0');
    s.amplitudes[state_index(dd, 3)] = coeff;
  }
  if (perturbation != 0.0) s.amplitudes[0] += perturbation;
  s.amplitudes /= s.amplitudes.norm();
  return s;
}

std::string ints_str(const std::vector<int>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string sigma_name(int tag) { return tag == 0 ? "-" : tag == 1 ? "T1" : "T2"; }

}  // namespace

GoldenU3Report verify_golden_u3(double perturbation, double tolerance) {
  const SchurDecomposition dec = schur_basis_all(3, 3);
  const auto& table = golden_u3_table();

  GoldenU3Report report;
  report.total = static_cast<int>(table.size());
  report.tolerance = tolerance;

  // Constructed states grouped by (lambda, Dynkin weight).
  using BlockKey = std::pair<Partition, std::vector<int>>;
  std::map<BlockKey, std::vector<const DenseState*>> basis_blocks;
  for (const auto& sector : dec.sectors)
    for (const auto& e : sector.entries)
      basis_blocks[{sector.lambda, gt_weight(e.mu).dynkin}].push_back(&e.state);

  std::map<BlockKey, std::vector<DenseState>> table_blocks;

  bool first = true;
  for (const auto& e : table) {
    const DenseState g = golden_state(e, first ? perturbation : 0.0);
    first = false;

    // Data-entry sanity: the stated weight must match the Fock content and
    // the GT label.
    if (dynkin_from_fock(FockState{e.fock}) != e.dynkin)
      throw InternalError("golden table row has inconsistent Fock/Dynkin data");
    if (gt_weight(e.mu).dynkin != e.dynkin)
      throw InternalError("golden table row has inconsistent GT/Dynkin data");

    const BlockKey key{e.lambda, e.dynkin};
    const auto it = basis_blocks.find(key);
    GoldenU3Report::Row row;
    row.fock = FockState{e.fock}.str();
    row.lambda = e.lambda.str(3);
    row.dynkin = ints_str(e.dynkin);
    row.gt = e.mu.compressed_str();
    row.sigma = sigma_name(e.sigma_tag);
    if (it == basis_blocks.end()) {
      row.kind = "block";
      row.deviation = 1.0;
      row.pass = false;
    } else if (it->second.size() == 1) {
      row.kind = "ray";
      row.deviation = ray_distance(g, *it->second.front());
      row.pass = row.deviation < tolerance;
    } else {
      // Residual after projecting onto the constructed block.
      StateVector proj = StateVector::Zero(g.dim());
      for (const DenseState* b : it->second)
        proj += b->amplitudes * (b->amplitudes.dot(g.amplitudes));
      row.kind = "block";
      row.deviation = (g.amplitudes - proj).norm();
      row.pass = row.deviation < tolerance;
    }
    if (row.pass) ++report.matched;
    report.max_deviation = std::max(report.max_deviation, row.deviation);
    report.rows.push_back(std::move(row));
    table_blocks[key].push_back(g);
  }

  // Span equality per block: the corpus states and the constructed states
  // must project onto the same subspace.
  for (const auto& [key, golden] : table_blocks) {
    GoldenU3Report::Block blk;
    blk.lambda = key.first.str(3);
    blk.dynkin = ints_str(key.second);
    blk.table_dim = static_cast<int>(golden.size());
    const auto it = basis_blocks.find(key);
    blk.basis_dim = it == basis_blocks.end() ? 0 : static_cast<int>(it->second.size());
    if (blk.table_dim != blk.basis_dim) {
      blk.projector_distance = 1.0;
      blk.pass = false;
    } else {
      Eigen::MatrixXcd diff = Eigen::MatrixXcd::Zero(27, 27);
      for (const DenseState& gs : golden)
        diff += gs.amplitudes * gs.amplitudes.adjoint();
      for (const DenseState* b : it->second)
        diff -= b->amplitudes * b->amplitudes.adjoint();
      blk.projector_distance = diff.norm();
      blk.pass = blk.projector_distance < tolerance;
    }
    report.max_deviation = std::max(report.max_deviation, blk.projector_distance);
    report.blocks.push_back(std::move(blk));
  }

  report.all_pass = report.matched == report.total;
  for (const auto& blk : report.blocks)
    if (!blk.pass) report.all_pass = false;
  return report;
}

std::string GoldenU3Report::summary() const {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d/%d states reproduced, max deviation %.3e", matched, total,
                max_deviation);
  return buf;
}

std::string GoldenU3Report::to_json() const {
  std::string out = "{\"matched\":" + std::to_string(matched) +
                    ",\"total\":" + std::to_string(total) +
                    ",\"max_deviation\":" + format_double(max_deviation) +
                    ",\"all_pass\":" + (all_pass ? std::string("true") : std::string("false")) +
                    ",\"states\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    if (i) out += ",";
    out += "{\"fock\":\"" + r.fock + "\",\"lambda\":\"" + r.lambda + "\",\"z\":\"" + r.dynkin +
           "\",\"gt\":\"" + r.gt + "\",\"sigma\":\"" + r.sigma + "\",\"compare\":\"" + r.kind +
           "\",\"deviation\":" + format_double(r.deviation) +
           ",\"pass\":" + (r.pass ? "true" : "false") + "}";
  }
  out += "],\"blocks\":[";
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (i) out += ",";
    out += "{\"lambda\":\"" + b.lambda + "\",\"z\":\"" + b.dynkin +
           "\",\"table_dim\":" + std::to_string(b.table_dim) +
           ",\"basis_dim\":" + std::to_string(b.basis_dim) +
           ",\"projector_distance\":" + format_double(b.projector_distance) +
           ",\"pass\":" + (b.pass ? "true" : "false") + "}";
  }
  return out + "]}";
}

}  // namespace schurprep
