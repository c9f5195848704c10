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

#ifndef SCHURPREP_TASK_IO_HPP
#define SCHURPREP_TASK_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "schurprep/cost_model.hpp"
#include "schurprep/fock.hpp"
#include "schurprep/state.hpp"

namespace schurprep {

/// A preparation task parsed from the JSON schema
/// {"d", "N", "statistics", "order", "lambda", "terms": [{"occupations", "re", "im"}]}.
struct PreparationTask {
  int d = 0;
  int N = 0;
  StatisticsSector statistics;
  std::optional<Partition> lambda_choice;
  std::vector<FockState> configs;
  std::vector<cplx> coefficients;
  std::optional<CostParams> estimator;  // optional estimator overrides
};

PreparationTask parse_task(const std::string& json_text);
PreparationTask load_task(const std::string& path);

/// CostParams from a JSON object mirroring the parameter names
/// ("epsilon", "alpha_dir", "beta_dir", "b_r", "a_mcx_prov", "encoding",
///  "epsilon_prep", "k1", "k2", "k1p", "k2p", "enumeration_threshold").
CostParams parse_cost_params(const std::string& json_text);
CostParams load_cost_params(const std::string& path);

}  // namespace schurprep

#endif
