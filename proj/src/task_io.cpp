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

#include "schurprep/task_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "schurprep/errors.hpp"

namespace schurprep {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("malformed JSON input");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CostParams cost_params_from_json(const json& j) {
  CostParams p;
  if (!j.is_object()) throw ValidationError("estimator parameters must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "epsilon") p.epsilon = value.get<double>();
    else if (key == "alpha_dir") p.alpha_dir = value.get<double>();
    else if (key == "beta_dir") p.beta_dir = value.get<double>();
    else if (key == "b_r") p.b_r = value.get<int>();
    else if (key == "a_mcx_prov") p.a_mcx_prov = value.get<int>();
    else if (key == "encoding") p.encoding = encoding_from_string(value.get<std::string>());
    else if (key == "epsilon_prep") p.epsilon_prep = value.get<double>();
    else if (key == "k1") p.k1 = value.get<std::int64_t>();
    else if (key == "k2") p.k2 = value.get<std::int64_t>();
    else if (key == "k1p") p.k1p = value.get<std::int64_t>();
    else if (key == "k2p") p.k2p = value.get<std::int64_t>();
    else if (key == "enumeration_threshold") p.enumeration_threshold = value.get<std::int64_t>();
    else throw ValidationError("unknown estimator parameter '" + key + "'");
  }
  p.validate();
  return p;
}

}  // namespace

PreparationTask parse_task(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ValidationError("task must be a JSON object");
  PreparationTask task;

  if (!j.contains("d") || !j["d"].is_number_integer())
    throw ValidationError("task requires an integer field 'd'");
  task.d = j["d"].get<int>();
  if (task.d < 1) throw ValidationError("'d' must be >= 1");

  if (!j.contains("statistics") || !j["statistics"].is_string())
    throw ValidationError("task requires a string field 'statistics'");
  const std::string stat = j["statistics"].get<std::string>();

  std::optional<Partition> lambda;
  if (j.contains("lambda")) {
    if (!j["lambda"].is_array()) throw ValidationError("'lambda' must be an array of integers");
    std::vector<int> parts;
    for (const auto& v : j["lambda"]) parts.push_back(v.get<int>());
    lambda = Partition(parts);
  }

  if (stat == "boson") task.statistics = StatisticsSector::boson();
  else if (stat == "fermion") task.statistics = StatisticsSector::fermion();
  else if (stat == "paraboson" || stat == "parafermion") {
    if (!j.contains("order") || !j["order"].is_number_integer())
      throw ValidationError("parastatistics require an integer field 'order'");
    const int p = j["order"].get<int>();
    task.statistics = stat == "paraboson" ? StatisticsSector::paraboson(p)
                                          : StatisticsSector::parafermion(p);
    task.lambda_choice = lambda;
  } else if (stat == "explicit") {
    if (!lambda) throw ValidationError("explicit statistics require a 'lambda' array");
    task.statistics = StatisticsSector::explicit_lambda(*lambda);
  } else {
    throw ValidationError("unknown statistics '" + stat +
                          "' (boson|fermion|paraboson|parafermion|explicit)");
  }

  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
    throw ValidationError("task requires a nonempty 'terms' array");
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("occupations") || !term["occupations"].is_array())
      throw ValidationError("each term needs an 'occupations' array");
    FockState config;
    for (const auto& v : term["occupations"]) config.occupations.push_back(v.get<int>());
    if (config.d() != task.d)
      throw ValidationError("occupations length differs from d in " + config.str());
    const double re = term.value("re", 0.0);
    const double im = term.value("im", 0.0);
    task.configs.push_back(std::move(config));
    task.coefficients.emplace_back(re, im);
  }
  task.N = task.configs.front().total();
  if (j.contains("N") && j["N"].get<int>() != task.N)
    throw ValidationError("field 'N' contradicts the occupation sums");

  if (j.contains("estimator")) task.estimator = cost_params_from_json(j["estimator"]);
  return task;
}

PreparationTask load_task(const std::string& path) { return parse_task(read_file(path)); }

CostParams parse_cost_params(const std::string& json_text) {
  return cost_params_from_json(parse_json(json_text));
}

CostParams load_cost_params(const std::string& path) {
  return parse_cost_params(read_file(path));
}

}  // namespace schurprep
