// Copyright 2026 The pathsum Authors
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

#include "pathsum/serialize.hpp"

namespace pathsum {

using nlohmann::json;

json to_json(const NormalTable& table, const VarNamer& name) {
  json vars = json::array();
  for (Var v : table.vars) vars.push_back(name(v));
  json entries = json::array();
  for (const auto& e : table.entries) entries.push_back(e.to_string());
  return json{{"vars", vars}, {"entries", entries}};
}

json to_json(const NormalForm& form) {
  json vars = json::array();
  for (std::size_t i = 0; i < form.wires; ++i) vars.push_back("z" + std::to_string(i));
  json entries = json::array();
  for (const auto& e : form.entries) entries.push_back(e.to_string());
  return json{{"vars", vars}, {"entries", entries}};
}

json to_json(const DenseMatrix& matrix) {
  json rows = json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c).to_string());
    rows.push_back(row);
  }
  return json{{"rows", matrix.rows()}, {"cols", matrix.cols()}, {"entries", rows}};
}

json to_json(const RewriteStep& step, const VarNamer& name) {
  json vars = json::array();
  for (Var v : step.site.vars) vars.push_back(name(v));
  return json{{"rule", std::string(rule_name(step.rule))},
              {"vars", vars},
              {"factors", step.site.factors},
              {"descriptor", step.descriptor},
              {"bound_before", step.bound_before},
              {"bound_after", step.bound_after},
              {"size_before", step.size_before},
              {"size_after", step.size_after},
              {"count", step.count}};
}

json to_json(const std::vector<RewriteStep>& trace, const VarNamer& name) {
  json out = json::array();
  for (const auto& s : trace) out.push_back(to_json(s, name));
  return out;
}

std::string bit_string(std::size_t index, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t j = 0; j < width; ++j) {
    if ((index >> (width - 1 - j)) & 1) out[j] = '1';
  }
  return out;
}

}  // namespace pathsum
