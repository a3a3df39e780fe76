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

#include "pathsum/theories.hpp"

#include <algorithm>
#include <array>

#include "factored.hpp"
#include "pathsum/errors.hpp"

namespace pathsum {

using detail::Factored;
using detail::Phase;

namespace {

struct View {
  Ring ring;
  std::vector<Var> inputs;
  std::vector<Var> bound;
  Factored amp;
  std::vector<BoolExpr> outputs;

  explicit View(const PathSum& psi)
      : ring(psi.ring()),
        inputs(psi.inputs()),
        bound(psi.bound()),
        amp(detail::factor_amplitude(psi.amplitude())),
        outputs(psi.outputs()) {}

  PathSum build() const { return PathSum(ring, inputs, bound, detail::rebuild(amp, ring), outputs); }

  bool is_bound(Var x) const { return std::find(bound.begin(), bound.end(), x) != bound.end(); }
  void drop(Var x) { std::erase(bound, x); }

  bool in_outputs(Var x) const {
    return std::any_of(outputs.begin(), outputs.end(), [x](const BoolExpr& f) { return f.depends_on(x); });
  }
  /// y occurs in the phase polynomial at most.
  bool phase_only(Var y) const { return !in_outputs(y) && !detail::others_mention(amp, y); }

  void substitute(Var x, const BoolExpr& g) {
    detail::substitute(amp, x, g);
    for (auto& f : outputs) f = bsubst(f, x, g);
  }
};

RingElem two(const Ring& ring) { return ring.from_int(2); }

bool outputs_mention(const PathSum& psi, Var x) {
  return std::any_of(psi.outputs().begin(), psi.outputs().end(), [x](const BoolExpr& f) { return f.depends_on(x); });
}

// E: Σ_y |Ψ⟩ → 2|Ψ⟩
std::optional<PathSum> rule_e(const PathSum& psi, Var y) {
  View v(psi);
  if (!v.is_bound(y) || !v.phase_only(y) || detail::phase_mentions(v.amp.phase, y)) return std::nullopt;
  v.amp.scalar *= two(v.ring);
  v.drop(y);
  return v.build();
}

// H: Σ_{x,y} (−1)^{y(x ⊕ f)} |Ψ(x)⟩ → 2|Ψ(f)⟩
std::optional<PathSum> rule_h(const PathSum& psi, Var x, Var y) {
  View v(psi);
  if (x == y || !v.is_bound(x) || !v.is_bound(y) || !v.phase_only(y)) return std::nullopt;
  auto big_f = detail::as_boolean(detail::part_of(v.amp.phase, y));
  if (!big_f) return std::nullopt;
  Cofactors c = split_on(*big_f, x);
  if (!c.with.is_one()) return std::nullopt;
  detail::drop_part(v.amp.phase, y);
  v.substitute(x, c.without);
  v.amp.scalar *= two(v.ring);
  v.drop(x);
  v.drop(y);
  return v.build();
}

// ω: Σ_y i^y (−1)^{yf} |Ψ⟩ → ω√2 (−i)^{f} |Ψ⟩, f read as its integer lift
std::optional<PathSum> rule_omega(const PathSum& psi, Var y) {
  View v(psi);
  if (!v.is_bound(y) || !v.phase_only(y)) return std::nullopt;
  Phase q = detail::part_of(v.amp.phase, y);
  auto c0 = q.find(Monomial{});
  if (c0 == q.end() || (c0->second != 2 && c0->second != 6)) return std::nullopt;
  c0->second = static_cast<std::uint8_t>((c0->second + 6) % 8);
  if (c0->second == 0) q.erase(c0);
  auto f = detail::as_boolean(q);
  if (!f) return std::nullopt;
  detail::drop_part(v.amp.phase, y);
  v.amp.scalar *= v.ring.one() + v.ring.imag();
  detail::add_lift(v.amp.phase, 6, *f);
  v.drop(y);
  return v.build();
}

// Hgen: Σ_{y,x} (−1)^{y(x·g ⊕ g·f ⊕ 1)} |Ψ(x)⟩ → Σ_y (−1)^{y(g ⊕ 1)} |Ψ(1 ⊕ f)⟩
std::optional<PathSum> rule_hgen(const PathSum& psi, Var x, Var y) {
  View v(psi);
  if (x == y || !v.is_bound(x) || !v.is_bound(y) || !v.phase_only(y)) return std::nullopt;
  auto big_f = detail::as_boolean(detail::part_of(v.amp.phase, y));
  if (!big_f || !big_f->depends_on(x)) return std::nullopt;
  Cofactors c = split_on(*big_f, x);
  // F = x·g ⊕ g·f ⊕ 1 for some f exactly when B ⊕ 1 vanishes off g.
  if (!(bnot(c.without) * bnot(c.with)).is_zero()) return std::nullopt;
  detail::drop_part(v.amp.phase, y);
  detail::add_lift(v.amp.phase, 4, bnot(c.with), Monomial{y});
  v.substitute(x, c.without);
  v.drop(x);
  return v.build();
}

// Hrel: Σ_{y,x} (−1)^{y·f ⊕ x·g} |Ψ⟩ → 2 Σ_y (−1)^{y(f ⊕ g ⊕ f·g)} |Ψ⟩
std::optional<PathSum> rule_hrel(const PathSum& psi, Var x, Var y) {
  View v(psi);
  if (x == y || !v.is_bound(x) || !v.is_bound(y) || !v.phase_only(x) || !v.phase_only(y)) return std::nullopt;
  auto f = detail::as_boolean(detail::part_of(v.amp.phase, y));
  auto g = detail::as_boolean(detail::part_of(v.amp.phase, x));
  if (!f || !g || f->depends_on(x) || g->depends_on(y)) return std::nullopt;
  detail::drop_part(v.amp.phase, y);
  detail::drop_part(v.amp.phase, x);
  detail::add_lift(v.amp.phase, 4, *f ^ *g ^ (*f * *g), Monomial{y});
  v.amp.scalar *= two(v.ring);
  v.drop(x);
  return v.build();
}

// Z: Σ_y (−1)^y |Ψ⟩ → 0
std::optional<PathSum> rule_z(const PathSum& psi, Var y) {
  View v(psi);
  if (!v.is_bound(y) || !v.phase_only(y)) return std::nullopt;
  Phase q = detail::part_of(v.amp.phase, y);
  if (q.size() != 1 || !q.begin()->first.empty() || q.begin()->second != 4) return std::nullopt;
  v.drop(y);
  return PathSum(v.ring, v.inputs, v.bound, RExpr::constant(v.ring.zero()), v.outputs);
}

// S: Σ_y r(y) |Ψ⟩ → (r(0) + r(1)) |Ψ⟩
std::optional<PathSum> rule_s(const PathSum& psi, Var y) {
  if (!psi.is_bound(y) || outputs_mention(psi, y)) return std::nullopt;
  RExpr amp = RExpr::add(rsubst(psi.amplitude(), y, BoolExpr::zero()), rsubst(psi.amplitude(), y, BoolExpr::one()));
  std::vector<Var> bound = psi.bound();
  std::erase(bound, y);
  return PathSum(psi.ring(), psi.inputs(), bound, amp, psi.outputs());
}

struct AverageMatch {
  RingElem alpha;  // coefficient of y
  RingElem beta;   // coefficient of ¬y
};

std::optional<AverageMatch> match_average(const RExpr& factor, Var y) {
  if (factor.kind() != RExpr::Kind::Pow || factor.exponent().depends_on(y)) return std::nullopt;
  const RExpr& base = factor.base();
  if (base.kind() != RExpr::Kind::Mul) return std::nullopt;
  const RExpr& l = base.lhs();
  const RExpr& r = base.rhs();
  auto is_const_pow = [](const RExpr& e) {
    return e.kind() == RExpr::Kind::Pow && e.base().kind() == RExpr::Kind::Const;
  };
  if (!is_const_pow(l) || !is_const_pow(r)) return std::nullopt;
  BoolExpr yes = BoolExpr::var(y);
  BoolExpr no = bnot(yes);
  if (l.exponent() == yes && r.exponent() == no) return AverageMatch{l.base().value(), r.base().value()};
  if (l.exponent() == no && r.exponent() == yes) return AverageMatch{r.base().value(), l.base().value()};
  return std::nullopt;
}

// A: Σ_y (α^y β^{¬y})^f |Ψ⟩ → 2((α + β)/2)^f |Ψ⟩
std::optional<PathSum> rule_a(const PathSum& psi, Var y, std::size_t index) {
  if (!psi.is_bound(y) || outputs_mention(psi, y)) return std::nullopt;
  auto factors = flatten_product(psi.amplitude());
  if (index >= factors.size()) return std::nullopt;
  auto m = match_average(factors[index], y);
  if (!m) return std::nullopt;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != index && factors[i].depends_on(y)) return std::nullopt;
  }
  const Ring& ring = psi.ring();
  RExpr avg = RExpr::pow(RExpr::constant((m->alpha + m->beta) * ring.half()), factors[index].exponent());
  factors[index] = RExpr::mul(RExpr::constant(two(ring)), avg);
  std::vector<Var> bound = psi.bound();
  std::erase(bound, y);
  return PathSum(ring, psi.inputs(), bound, RExpr::product(factors, ring), psi.outputs());
}

// O, directed: Σ_y G1(y) G2(y) |Ψ⟩ → ½ Σ_{y,z} G1(y) G2(z) |Ψ⟩ where every
// factor of G1 and of G2 is b(y)^e with pairwise disjoint exponents.
bool ortho_shape(const std::vector<RExpr>& factors, Var y, const std::vector<std::size_t>& group) {
  if (group.empty()) return false;
  std::vector<bool> in_group(factors.size(), false);
  for (auto i : group) {
    if (i >= factors.size() || in_group[i] || !factors[i].depends_on(y)) return false;
    in_group[i] = true;
  }
  std::vector<const BoolExpr*> left;
  std::vector<const BoolExpr*> right;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].depends_on(y)) continue;
    if (factors[i].kind() != RExpr::Kind::Pow || factors[i].exponent().depends_on(y)) return false;
    (in_group[i] ? right : left).push_back(&factors[i].exponent());
  }
  if (left.empty()) return false;
  for (const auto* a : left) {
    for (const auto* b : right) {
      if (!(*a * *b).is_zero()) return false;
    }
  }
  return true;
}

std::optional<PathSum> rule_o(Context& ctx, const PathSum& psi, Var y, const std::vector<std::size_t>& group) {
  if (!psi.is_bound(y) || outputs_mention(psi, y)) return std::nullopt;
  auto factors = flatten_product(psi.amplitude());
  if (!ortho_shape(factors, y, group)) return std::nullopt;
  Var z = ctx.fresh("y");
  for (auto i : group) factors[i] = rrename(factors[i], {{y.id, z}});
  const Ring& ring = psi.ring();
  RExpr amp = RExpr::mul(RExpr::constant(ring.half()), RExpr::product(factors, ring));
  std::vector<Var> bound = psi.bound();
  bound.insert(std::find(bound.begin(), bound.end(), y) + 1, z);
  return PathSum(ring, psi.inputs(), bound, amp, psi.outputs());
}

// Σ_y |Ψ(y)⟩ → Σ_y |Ψ(y ⊕ g)⟩ with output i = y ⊕ g
std::optional<PathSum> rule_var_change(const PathSum& psi, Var y, std::size_t output) {
  if (!psi.is_bound(y) || output >= psi.outputs().size()) return std::nullopt;
  Cofactors c = split_on(psi.outputs()[output], y);
  if (!c.with.is_one() || c.without.is_zero()) return std::nullopt;
  BoolExpr shifted = BoolExpr::var(y) ^ c.without;
  std::vector<BoolExpr> outputs;
  for (const auto& f : psi.outputs()) outputs.push_back(bsubst(f, y, shifted));
  return PathSum(psi.ring(), psi.inputs(), psi.bound(), rsubst(psi.amplitude(), y, shifted), outputs);
}

bool pair_rule(RuleId rule) { return rule == RuleId::H || rule == RuleId::Hgen || rule == RuleId::Hrel; }

/// Sites in bound order; stops after `limit` matches.
std::vector<RuleSite> sites(Context* ctx, RuleId rule, const PathSum& psi, std::size_t limit) {
  std::vector<RuleSite> out;
  if (!rule_available(rule, psi.ring())) return out;
  const auto& bound = psi.bound();
  auto accept = [&](RuleSite site) {
    out.push_back(std::move(site));
    return out.size() >= limit;
  };
  std::vector<RExpr> factors;
  if (rule == RuleId::A || rule == RuleId::O) factors = flatten_product(psi.amplitude());
  for (Var y : bound) {
    if (pair_rule(rule)) {
      for (Var x : bound) {
        if (x == y) continue;
        std::optional<PathSum> r;
        if (rule == RuleId::H) r = rule_h(psi, x, y);
        if (rule == RuleId::Hgen) r = rule_hgen(psi, x, y);
        if (rule == RuleId::Hrel) r = rule_hrel(psi, x, y);
        if (r && accept({{x, y}, {}})) return out;
      }
      continue;
    }
    if (rule == RuleId::A) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (rule_a(psi, y, i) && accept({{y}, {i}})) return out;
      }
      continue;
    }
    if (rule == RuleId::VarChange) {
      for (std::size_t i = 0; i < psi.outputs().size(); ++i) {
        if (rule_var_change(psi, y, i) && accept({{y}, {i}})) return out;
      }
      continue;
    }
    if (rule == RuleId::O) {
      std::vector<std::size_t> group;
      for (std::size_t i = factors.size(); i-- > 0;) {
        if (factors[i].depends_on(y)) {
          group.push_back(i);
          break;
        }
      }
      if (ortho_shape(factors, y, group) && !outputs_mention(psi, y) && accept({{y}, group})) return out;
      continue;
    }
    std::optional<PathSum> r;
    switch (rule) {
      case RuleId::E: r = rule_e(psi, y); break;
      case RuleId::Omega: r = rule_omega(psi, y); break;
      case RuleId::Z: r = rule_z(psi, y); break;
      case RuleId::S: r = rule_s(psi, y); break;
      default: break;
    }
    if (r && accept({{y}, {}})) return out;
  }
  (void)ctx;
  return out;
}

std::string describe(const RuleSite& site, const VarNamer& name) {
  std::string out;
  for (Var v : site.vars) {
    if (!out.empty()) out += ",";
    out += name(v);
  }
  if (!site.factors.empty()) {
    out += " @";
    for (auto i : site.factors) out += " " + std::to_string(i);
  }
  return out;
}

std::vector<RuleId> strategy_rules(Strategy s) {
  switch (s) {
    case Strategy::None: return {};
    case Strategy::Cliff: return {RuleId::E, RuleId::H, RuleId::Omega};
    case Strategy::TH: return {RuleId::E, RuleId::H, RuleId::Hgen, RuleId::Hrel, RuleId::Z};
    case Strategy::CliffTH: return {RuleId::E, RuleId::H, RuleId::Omega, RuleId::Hgen, RuleId::Hrel, RuleId::Z};
  }
  return {};
}

/// Makes output i equal to a fresh pivot y_i wherever some non-pivot bound
/// variable occurs linearly in it. Returns whether anything changed.
bool echelon_pass(const Context& ctx, PathSum& cur, std::vector<RewriteStep>* trace) {
  std::vector<Var> pivots;
  bool changed = false;
  for (std::size_t i = 0; i < cur.outputs().size(); ++i) {
    for (Var y : cur.bound()) {
      if (std::find(pivots.begin(), pivots.end(), y) != pivots.end()) continue;
      Cofactors c = split_on(cur.outputs()[i], y);
      if (!c.with.is_one()) continue;
      pivots.push_back(y);
      if (!c.without.is_zero()) {
        RuleSite site{{y}, {i}};
        auto next = rule_var_change(cur, y, i);
        if (trace) {
          trace->push_back({RuleId::VarChange, site, describe(site, ctx.namer()), cur.bound().size(),
                            next->bound().size(), sum_size(cur), sum_size(*next), 1});
        }
        cur = canonical_form(*next);
        changed = true;
      }
      break;
    }
  }
  return changed;
}

}  // namespace

std::string_view rule_name(RuleId rule) {
  static constexpr std::array<std::string_view, 10> names = {"E", "H",  "Omega", "Hgen", "Hrel",
                                                             "Z", "S",  "O",     "A",    "VarChange"};
  return names[static_cast<std::size_t>(rule)];
}

bool rule_available(RuleId rule, const Ring& ring) {
  switch (rule) {
    case RuleId::Omega: return ring.has_omega();
    case RuleId::O:
    case RuleId::A: return ring.is_field() && ring.has_half();
    default: return true;
  }
}

std::optional<PathSum> apply_rule(Context& ctx, RuleId rule, const PathSum& psi, const RuleSite& site) {
  if (!rule_available(rule, psi.ring())) {
    throw Unsupported("rule " + std::string(rule_name(rule)) + " is unavailable over " + psi.ring().name());
  }
  const auto& v = site.vars;
  std::size_t want = pair_rule(rule) ? 2 : 1;
  if (v.size() != want) return std::nullopt;
  switch (rule) {
    case RuleId::E: return rule_e(psi, v[0]);
    case RuleId::H: return rule_h(psi, v[0], v[1]);
    case RuleId::Omega: return rule_omega(psi, v[0]);
    case RuleId::Hgen: return rule_hgen(psi, v[0], v[1]);
    case RuleId::Hrel: return rule_hrel(psi, v[0], v[1]);
    case RuleId::Z: return rule_z(psi, v[0]);
    case RuleId::S: return rule_s(psi, v[0]);
    case RuleId::A:
      if (site.factors.size() != 1) return std::nullopt;
      return rule_a(psi, v[0], site.factors[0]);
    case RuleId::O: return rule_o(ctx, psi, v[0], site.factors);
    case RuleId::VarChange:
      if (site.factors.size() != 1) return std::nullopt;
      return rule_var_change(psi, v[0], site.factors[0]);
  }
  return std::nullopt;
}

std::vector<RuleSite> find_sites(RuleId rule, const PathSum& psi) {
  return sites(nullptr, rule, psi, static_cast<std::size_t>(-1));
}

Strategy parse_strategy(std::string_view name) {
  if (name == "none") return Strategy::None;
  if (name == "cliff") return Strategy::Cliff;
  if (name == "th") return Strategy::TH;
  if (name == "cliff+th") return Strategy::CliffTH;
  throw Unsupported("unknown strategy '" + std::string(name) + "'");
}

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::None: return "none";
    case Strategy::Cliff: return "cliff";
    case Strategy::TH: return "th";
    case Strategy::CliffTH: return "cliff+th";
  }
  return "none";
}

std::size_t sum_size(const PathSum& psi) {
  std::size_t n = psi.bound().size() + psi.amplitude().size();
  for (const auto& f : psi.outputs()) n += f.size();
  return n;
}

PathSum reduce_rewrite_first(Context& ctx, const PathSum& psi, Strategy strategy, std::vector<RewriteStep>* trace) {
  auto rules = strategy_rules(strategy);
  PathSum cur = rules.empty() ? psi : canonical_form(psi);
  bool progress = true;
  bool echelon = true;
  while (progress) {
    progress = false;
    for (RuleId rule : rules) {
      auto found = sites(&ctx, rule, cur, 1);
      if (found.empty()) continue;
      auto next = apply_rule(ctx, rule, cur, found.front());
      if (!next) throw Error("internal: site reported for " + std::string(rule_name(rule)) + " does not match");
      if (trace) {
        trace->push_back({rule, found.front(), describe(found.front(), ctx.namer()), cur.bound().size(),
                          next->bound().size(), sum_size(cur), sum_size(*next), 1});
      }
      cur = std::move(*next);
      progress = true;
      echelon = true;
      break;
    }
    if (!progress && echelon && !rules.empty()) {
      echelon = false;
      progress = echelon_pass(ctx, cur, trace);
    }
  }
  return cur;
}

PathSum canonical_form(const PathSum& psi) {
  View v(psi);
  return v.build();
}

std::string canonical_key(const PathSum& psi) {
  std::unordered_map<std::uint32_t, Var> renaming;
  const std::uint32_t n_in = static_cast<std::uint32_t>(psi.inputs().size());
  std::vector<Var> inputs;
  std::vector<Var> bound;
  for (std::uint32_t i = 0; i < n_in; ++i) {
    renaming[psi.inputs()[i].id] = Var{i};
    inputs.push_back(Var{i});
  }
  for (std::uint32_t j = 0; j < psi.bound().size(); ++j) {
    renaming[psi.bound()[j].id] = Var{n_in + j};
    bound.push_back(Var{n_in + j});
  }
  std::vector<BoolExpr> outputs;
  for (const auto& f : psi.outputs()) outputs.push_back(brename(f, renaming));
  PathSum renamed(psi.ring(), inputs, bound, rrename(psi.amplitude(), renaming), outputs);
  VarNamer name = [n_in](Var x) {
    return x.id < n_in ? "x" + std::to_string(x.id) : "y" + std::to_string(x.id - n_in);
  };
  return psi.ring().name() + " " + to_string(canonical_form(renamed), name);
}

}  // namespace pathsum
