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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pathsum {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  double budget = 0.0;
  std::string detail;
};

/// Runs criteria 1 to 8 in order and prints one PASS/FAIL line per
/// criterion to `out`.
std::vector<CriterionResult> run_acceptance(std::ostream& out, std::uint64_t seed = 20260101);

CriterionResult run_criterion(int id, std::uint64_t seed = 20260101);

/// Compares the verdict of `equivalent` with the circuit oracles on random
/// small Clifford+T pairs.
CriterionResult verify_cross_check(std::uint64_t seed = 20260101);

std::string format_result(const CriterionResult& result);

}  // namespace pathsum
