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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pathsum/matrix.hpp"
#include "pathsum/normalize.hpp"
#include "pathsum/rexpr.hpp"
#include "pathsum/theories.hpp"

namespace pathsum {

/// {"vars": [names], "entries": [ring-element strings]}
nlohmann::json to_json(const NormalTable& table, const VarNamer& name = default_var_name);
/// As above with positional names z0, z1, ...
nlohmann::json to_json(const NormalForm& form);
/// {"rows": R, "cols": C, "entries": [[...], ...]}
nlohmann::json to_json(const DenseMatrix& matrix);
nlohmann::json to_json(const RewriteStep& step, const VarNamer& name = default_var_name);
nlohmann::json to_json(const std::vector<RewriteStep>& trace, const VarNamer& name = default_var_name);

/// Bit string of `index` over `width` bits, most significant first.
std::string bit_string(std::size_t index, std::size_t width);

}  // namespace pathsum
