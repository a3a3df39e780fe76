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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathsum/pathsum.hpp"

namespace pathsum {

/// VarChange is the derived Clifford equation Σ_y|Ψ(y)⟩ ≡ Σ_y|Ψ(y ⊕ f)⟩.
enum class RuleId { E, H, Omega, Hgen, Hrel, Z, S, O, A, VarChange };

std::string_view rule_name(RuleId rule);

/// Where a rule fires. `vars` lists the matched bound variables:
///   E, Omega, Z, S: {y}
///   H, Hgen, Hrel:  {x, y} (Hrel keeps y and drops x)
///   A:              {y}, factors = {index of (α^y β^{¬y})^f}
///   O:              {y}, factors = the group whose copy of y is renamed
///   VarChange:      {y}, factors = {output index i}; y := y ⊕ g where
///                   output i is y ⊕ g
/// Factor indices refer to flatten_product(amplitude).
/// Pair rules list the substituted variable first, then the one carrying the
/// phase. A and VarChange name one factor or output index.
struct RuleSite {
  std::vector<Var> vars;
  std::vector<std::size_t> factors;

  friend bool operator==(const RuleSite&, const RuleSite&) = default;
};

struct RewriteStep {
  RuleId rule;
  RuleSite site;
  std::string descriptor;
  std::size_t bound_before = 0;
  std::size_t bound_after = 0;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  /// Applications folded into this step (the table-driven eliminations
  /// record one step per rule and variable).
  std::size_t count = 1;
};

/// Whether `rule` may be used on sums over `ring`: Omega needs ω, O and A
/// need a field in which 2 is invertible.
bool rule_available(RuleId rule, const Ring& ring);

/// Rewrites at `site`, or nullopt when the pattern or a side condition
/// fails. Scalars produced by the rule are folded into the amplitude. Only
/// O allocates a variable. Throws Unsupported when the rule is unavailable.
std::optional<PathSum> apply_rule(Context& ctx, RuleId rule, const PathSum& psi, const RuleSite& site);

/// Candidate sites in bound-variable order. Every returned site matches.
std::vector<RuleSite> find_sites(RuleId rule, const PathSum& psi);

enum class Strategy { None, Cliff, TH, CliffTH };

Strategy parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy strategy);

/// Applies the strategy's rules (E > H > Omega > Hgen > Hrel > Z, first
/// match in bound order) until none fires. When stuck, one VarChange pass
/// puts the outputs in echelon form and the loop resumes if it changed
/// anything.
PathSum reduce_rewrite_first(Context& ctx, const PathSum& psi, Strategy strategy,
                             std::vector<RewriteStep>* trace = nullptr);

/// Amplitude regrouped into scalar, phase polynomial, other powers and
/// remaining factors, in a fixed order.
PathSum canonical_form(const PathSum& psi);

/// Rendering of canonical_form with inputs and bound variables named by
/// position, so alpha-equivalent sums give equal keys.
std::string canonical_key(const PathSum& psi);

std::size_t sum_size(const PathSum& psi);

}  // namespace pathsum
