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

#include "pathsum/normalize.hpp"

#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

struct Opened {
  std::vector<Var> outputs;
  std::vector<Var> bound;
  RExpr amplitude;
};

void require_closed(const PathSum& psi) {
  if (!psi.is_closed()) throw InvalidPathSum("normal forms are defined on closed sums; apply to_state first");
}

void check_cap(std::size_t bits, const NormalizeConfig& config) {
  if (bits > config.max_bits) {
    throw SizeCapExceeded("normalization needs " + std::to_string(bits) + " bits, cap is " +
                          std::to_string(config.max_bits));
  }
}

/// Σ_{bound} r |f⃗⟩ ≡ Σ_{bound, y⃗, z⃗} ½^n r (−1)^{Σ y_i(z_i ⊕ f_i)} |z⃗⟩ read right to
/// left through (H); over Z the pointwise equal Π 0^{z_i ⊕ f_i} is used.
Opened open_outputs(Context& ctx, const PathSum& psi, std::vector<RewriteStep>* trace) {
  const Ring& ring = psi.ring();
  Opened out{{}, psi.bound(), psi.amplitude()};
  std::vector<RExpr> factors{psi.amplitude()};
  BoolExpr phase;
  const std::size_t n = psi.output_arity();
  for (std::size_t i = 0; i < n; ++i) {
    Var z = ctx.fresh("z");
    out.outputs.push_back(z);
    BoolExpr mismatch = BoolExpr::var(z) ^ psi.outputs()[i];
    if (ring.has_half()) {
      Var y = ctx.fresh("y");
      out.bound.push_back(y);
      phase = phase ^ (BoolExpr::var(y) * mismatch);
    } else {
      factors.push_back(RExpr::pow(RExpr::constant(ring.zero()), mismatch));
    }
  }
  if (ring.has_half() && n > 0) {
    factors.push_back(RExpr::constant(ring.half().pow(static_cast<unsigned>(n))));
    if (!phase.is_zero()) factors.push_back(RExpr::pow(RExpr::constant(ring.from_int(-1)), phase));
  }
  out.amplitude = RExpr::product(factors, ring);
  if (trace && n > 0) {
    RuleSite site{out.outputs, {}};
    trace->push_back({RuleId::H, site, "fresh outputs", psi.bound().size(), out.bound.size(), sum_size(psi),
                      out.amplitude.size() + out.bound.size() + n, n});
  }
  return out;
}

NormalForm finish(std::size_t wires, std::vector<RingElem> entries) { return NormalForm{wires, std::move(entries)}; }

}  // namespace

NormalForm normalize_ring(Context& ctx, const PathSum& psi, const NormalizeConfig& config,
                          std::vector<RewriteStep>* trace) {
  require_closed(psi);
  const Ring& ring = psi.ring();
  const std::size_t n = psi.output_arity();
  check_cap(n + psi.bound().size() + (ring.has_half() ? n : 0), config);
  Opened open = open_outputs(ctx, psi, trace);

  // (S) on every internal variable: Σ_τ r(τ), each summand normalized over
  // the outputs and added entrywise.
  const std::size_t k = open.bound.size();
  NormalizeOptions options{Theory::Ring, config.max_bits};
  std::vector<RingElem> acc(std::size_t{1} << n, ring.zero());
  std::vector<std::pair<Var, bool>> bits(k);
  for (std::size_t tau = 0; tau < (std::size_t{1} << k); ++tau) {
    for (std::size_t j = 0; j < k; ++j) bits[j] = {open.bound[j], ((tau >> (k - 1 - j)) & 1) != 0};
    NormalTable t = normalize_rexpr(rsubst_bits(open.amplitude, bits), open.outputs, options);
    for (std::size_t v = 0; v < acc.size(); ++v) acc[v] += t.entries[v];
  }
  if (trace && k > 0) {
    trace->push_back({RuleId::S, RuleSite{open.bound, {}}, "expand internal variables", k, 0,
                      open.amplitude.size() + k + n, acc.size() + n, k});
  }
  return finish(n, std::move(acc));
}

NormalForm normalize_field(Context& ctx, const PathSum& psi, const NormalizeConfig& config,
                           std::vector<RewriteStep>* trace) {
  require_closed(psi);
  const Ring& ring = psi.ring();
  if (!ring.is_field() || !ring.has_half()) {
    throw Unsupported("field normalization needs a field of characteristic other than 2, got " + ring.name());
  }
  if (!psi.amplitude().is_multiplicative()) throw Unsupported("field normalization needs a multiplicative sum");
  const std::size_t n = psi.output_arity();
  check_cap(2 * n + psi.bound().size(), config);
  Opened open = open_outputs(ctx, psi, trace);

  std::vector<Var> vars = open.outputs;
  vars.insert(vars.end(), open.bound.begin(), open.bound.end());
  NormalTable table = normalize_rexpr(open.amplitude, vars, NormalizeOptions{Theory::Field, config.max_bits});

  // Σ_y Π_w (α_{w0}^{¬y} α_{w1}^{y})^{w = x⃗}: (O) gives each of the 2^{N−1}
  // pairs its own copy of y at ½ per split, (A) sums each pair to
  // 2((α0 + α1)/2), and the 2^{2^{N−1}}/2^{2^{N−1}−1} = Π_w 2^{w = x⃗}
  // factor folds back into the entries.
  std::vector<RingElem> entries = std::move(table.entries);
  for (std::size_t remaining = open.bound.size(); remaining > 0; --remaining) {
    Var y = open.bound[remaining - 1];
    std::size_t pairs = entries.size() / 2;
    std::vector<RingElem> next;
    next.reserve(pairs);
    for (std::size_t w = 0; w < pairs; ++w) next.push_back(entries[2 * w] + entries[2 * w + 1]);
    if (trace) {
      std::size_t before = vars.size();
      if (pairs > 1) {
        trace->push_back({RuleId::O, RuleSite{{y}, {}}, "split per table pair", before, before + pairs - 1,
                          entries.size(), entries.size(), pairs - 1});
      }
      trace->push_back({RuleId::A, RuleSite{{y}, {}}, "average per table pair", before + pairs - 1, before - 1,
                        entries.size(), next.size(), pairs});
    }
    vars.pop_back();
    entries = std::move(next);
  }
  return finish(n, std::move(entries));
}

NormalForm normalize(Context& ctx, const PathSum& closed, Theory theory, const NormalizeConfig& config,
                     std::vector<RewriteStep>* trace) {
  return theory == Theory::Field ? normalize_field(ctx, closed, config, trace)
                                 : normalize_ring(ctx, closed, config, trace);
}

EquivalenceResult equivalent(Context& ctx, const PathSum& psi, const PathSum& phi, const EquivalenceConfig& config) {
  if (psi.input_arity() != phi.input_arity() || psi.output_arity() != phi.output_arity()) {
    throw ArityMismatch("operators have different shapes");
  }
  if (!(psi.ring() == phi.ring())) throw RingMismatch(psi.ring().name() + " vs " + phi.ring().name());

  EquivalenceResult result;
  PathSum lhs = reduce_rewrite_first(ctx, psi, config.strategy, &result.trace);
  PathSum rhs = reduce_rewrite_first(ctx, phi, config.strategy, &result.trace);
  if (config.strategy != Strategy::None && canonical_key(lhs) == canonical_key(rhs)) {
    result.equal = true;
    result.by_rewriting = true;
    return result;
  }

  NormalizeConfig nc{config.max_bits};
  NormalForm a = normalize(ctx, to_state(lhs), config.theory, nc, &result.trace);
  NormalForm b = normalize(ctx, to_state(rhs), config.theory, nc, &result.trace);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (!(a.entries[i] == b.entries[i])) {
      result.first_difference = i;
      result.lhs_entry = a.entries[i];
      result.rhs_entry = b.entries[i];
      break;
    }
  }
  result.equal = !result.first_difference.has_value();
  result.lhs_form = std::move(a);
  result.rhs_form = std::move(b);
  return result;
}

}  // namespace pathsum
