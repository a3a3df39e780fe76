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

#include "pathsum/generators.hpp"

#include <algorithm>

#include "pathsum/errors.hpp"

namespace pathsum::gen {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long pick_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

std::vector<Var> fresh(Context& ctx, std::size_t n, const char* hint) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ctx.fresh(hint));
  return out;
}

std::vector<Var> join(std::initializer_list<std::span<const Var>> parts) {
  std::vector<Var> out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<BoolExpr> outputs_over(Rng& rng, std::span<const Var> vars, std::size_t lo = 1, std::size_t hi = 3) {
  std::vector<BoolExpr> out;
  std::size_t n = pick(rng, lo, hi);
  for (std::size_t i = 0; i < n; ++i) out.push_back(boolexpr(rng, vars, 2, 2));
  return out;
}

RExpr sign(const Ring& ring, const BoolExpr& f) { return RExpr::pow(RExpr::constant(ring.from_int(-1)), f); }

/// Shared frame of a rule instance: the variables the rule does not touch.
struct Frame {
  std::vector<Var> inputs;
  std::vector<Var> rest;
  std::vector<Var> env() const { return join({inputs, rest}); }
};

Frame frame(Context& ctx, Rng& rng, std::size_t max_rest) {
  return Frame{fresh(ctx, pick(rng, 0, 2), "x"), fresh(ctx, pick(rng, 0, max_rest), "w")};
}

std::vector<Var> with_inserted(Rng& rng, std::vector<Var> bound, std::initializer_list<Var> extra) {
  for (Var v : extra) bound.insert(bound.begin() + static_cast<std::ptrdiff_t>(pick(rng, 0, bound.size())), v);
  return bound;
}

std::optional<RuleInstance> attempt(Context& ctx, Rng& rng, RuleId rule, const Ring& ring) {
  const bool full = rule == RuleId::S || (rule != RuleId::A && rule != RuleId::O && pick(rng, 0, 3) == 0);
  switch (rule) {
    case RuleId::E: {
      Frame fr = frame(ctx, rng, 4);
      Var y = ctx.fresh("y");
      auto env = fr.env();
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {y}), rexpr(rng, ring, env, 2, full),
                outputs_over(rng, env));
      return RuleInstance{s, {{y}, {}}};
    }
    case RuleId::H: {
      Frame fr = frame(ctx, rng, 3);
      Var x = ctx.fresh("x");
      Var y = ctx.fresh("y");
      auto env = fr.env();
      std::vector<Var> with_x = join({env, std::span<const Var>(&x, 1)});
      BoolExpr f = boolexpr(rng, env);
      RExpr amp = rexpr(rng, ring, with_x, 2, full) * sign(ring, BoolExpr::var(y) * (BoolExpr::var(x) ^ f));
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {x, y}), amp, outputs_over(rng, with_x));
      return RuleInstance{s, {{x, y}, {}}};
    }
    case RuleId::Omega: {
      Frame fr = frame(ctx, rng, 4);
      Var y = ctx.fresh("y");
      auto env = fr.env();
      BoolExpr f = boolexpr(rng, env);
      RExpr amp = rexpr(rng, ring, env, 2, full) * RExpr::pow(RExpr::constant(ring.imag()), BoolExpr::var(y)) *
                  sign(ring, BoolExpr::var(y) * f);
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {y}), amp, outputs_over(rng, env));
      return RuleInstance{s, {{y}, {}}};
    }
    case RuleId::Hgen: {
      Frame fr = frame(ctx, rng, 3);
      Var x = ctx.fresh("x");
      Var y = ctx.fresh("y");
      auto env = fr.env();
      std::vector<Var> with_x = join({env, std::span<const Var>(&x, 1)});
      BoolExpr g = boolexpr(rng, env);
      BoolExpr f = boolexpr(rng, env);
      BoolExpr big_f = (BoolExpr::var(x) * g) ^ (g * f) ^ BoolExpr::one();
      RExpr amp = rexpr(rng, ring, with_x, 2, full) * sign(ring, BoolExpr::var(y) * big_f);
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {x, y}), amp, outputs_over(rng, with_x));
      return RuleInstance{s, {{x, y}, {}}};
    }
    case RuleId::Hrel: {
      Frame fr = frame(ctx, rng, 3);
      Var x = ctx.fresh("x");
      Var y = ctx.fresh("y");
      auto env = fr.env();
      BoolExpr f = boolexpr(rng, env);
      BoolExpr g = boolexpr(rng, env);
      RExpr amp = rexpr(rng, ring, env, 2, full) * sign(ring, (BoolExpr::var(y) * f) ^ (BoolExpr::var(x) * g));
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {x, y}), amp, outputs_over(rng, env));
      return RuleInstance{s, {{x, y}, {}}};
    }
    case RuleId::Z: {
      Frame fr = frame(ctx, rng, 3);
      Var y = ctx.fresh("y");
      auto env = fr.env();
      std::vector<Var> bound = with_inserted(rng, fr.rest, {y});
      if (coin(rng)) bound = with_inserted(rng, bound, {ctx.fresh("x")});
      RExpr amp = rexpr(rng, ring, env, 2, full) * sign(ring, BoolExpr::var(y));
      PathSum s(ring, fr.inputs, bound, amp, outputs_over(rng, env));
      return RuleInstance{s, {{y}, {}}};
    }
    case RuleId::S: {
      Frame fr = frame(ctx, rng, 4);
      Var y = ctx.fresh("y");
      auto env = fr.env();
      std::vector<Var> with_y = join({env, std::span<const Var>(&y, 1)});
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {y}), rexpr(rng, ring, with_y, 3, true),
                outputs_over(rng, env));
      return RuleInstance{s, {{y}, {}}};
    }
    case RuleId::A: {
      Frame fr = frame(ctx, rng, 4);
      Var y = ctx.fresh("y");
      auto env = fr.env();
      BoolExpr yes = BoolExpr::var(y);
      RExpr a = RExpr::pow(RExpr::constant(element(rng, ring)), yes);
      RExpr b = RExpr::pow(RExpr::constant(element(rng, ring)), bnot(yes));
      RExpr factor = RExpr::pow(coin(rng) ? a * b : b * a, boolexpr(rng, env));
      auto left = flatten_product(rexpr(rng, ring, env, 2, false));
      auto right = flatten_product(rexpr(rng, ring, env, 2, false));
      std::size_t index = left.size();
      left.push_back(factor);
      left.insert(left.end(), right.begin(), right.end());
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {y}), RExpr::product(left, ring),
                outputs_over(rng, env));
      return RuleInstance{s, {{y}, {index}}};
    }
    case RuleId::O: {
      Frame fr = frame(ctx, rng, 4);
      Var y = ctx.fresh("y");
      auto env = fr.env();
      if (env.empty()) env.push_back(fr.rest.emplace_back(ctx.fresh("w")));
      std::shuffle(env.begin(), env.end(), rng);
      std::size_t width = std::min<std::size_t>(env.size(), pick(rng, 1, 2));
      std::vector<BoolExpr> selector;
      for (std::size_t i = 0; i < width; ++i) selector.push_back(BoolExpr::var(env[i]));
      std::vector<std::size_t> points(std::size_t{1} << width);
      for (std::size_t i = 0; i < points.size(); ++i) points[i] = i;
      std::shuffle(points.begin(), points.end(), rng);
      std::size_t used = pick(rng, 2, points.size());
      std::vector<Var> with_y = join({env, std::span<const Var>(&y, 1)});

      std::vector<RExpr> factors = flatten_product(rexpr(rng, ring, env, 1, false));
      std::vector<std::pair<RExpr, bool>> grouped;
      for (std::size_t p = 0; p < used; ++p) {
        std::vector<BoolExpr> bits;
        for (std::size_t i = 0; i < width; ++i) bits.push_back(BoolExpr::constant((points[p] >> i) & 1));
        BoolExpr e = eq_indicator(selector, bits);
        if (coin(rng)) e = e * boolexpr(rng, env, 1, 1);
        RExpr base = RExpr::pow(RExpr::constant(element(rng, ring, false)), coin(rng) ? BoolExpr::var(y)
                                                                                      : bnot(BoolExpr::var(y)));
        if (coin(rng)) base = base * rexpr(rng, ring, with_y, 1, false);
        grouped.emplace_back(RExpr::pow(base, e), p == 0 ? false : p == 1 ? true : coin(rng));
      }
      std::shuffle(grouped.begin(), grouped.end(), rng);
      std::vector<std::size_t> group;
      for (auto& [f, second] : grouped) {
        if (second) group.push_back(factors.size());
        factors.push_back(f);
      }
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {y}), RExpr::product(factors, ring),
                outputs_over(rng, env));
      return RuleInstance{s, {{y}, group}};
    }
    case RuleId::VarChange: {
      Frame fr = frame(ctx, rng, 4);
      Var y = ctx.fresh("y");
      auto env = fr.env();
      std::vector<Var> with_y = join({env, std::span<const Var>(&y, 1)});
      auto outs = outputs_over(rng, with_y);
      std::size_t i = pick(rng, 0, outs.size() - 1);
      BoolExpr g = boolexpr(rng, env);
      if (g.is_zero()) g = BoolExpr::one();
      outs[i] = BoolExpr::var(y) ^ g;
      PathSum s(ring, fr.inputs, with_inserted(rng, fr.rest, {y}), rexpr(rng, ring, with_y, 2, full), outs);
      return RuleInstance{s, {{y}, {i}}};
    }
  }
  return std::nullopt;
}

}  // namespace

BoolExpr boolexpr(Rng& rng, std::span<const Var> vars, std::size_t max_terms, std::size_t max_degree) {
  std::vector<Monomial> ms;
  std::size_t terms = pick(rng, 0, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    if (!vars.empty()) {
      std::size_t degree = pick(rng, 0, max_degree);
      for (std::size_t d = 0; d < degree; ++d) m.push_back(vars[pick(rng, 0, vars.size() - 1)]);
    }
    ms.push_back(std::move(m));
  }
  return BoolExpr::from_monomials(std::move(ms));
}

RingElem element(Rng& rng, const Ring& ring, bool allow_zero) {
  for (;;) {
    RingElem out = ring.zero();
    switch (ring.kind()) {
      case RingKind::Integer:
        out = ring.from_int(pick_int(rng, -3, 3));
        break;
      case RingKind::Rational:
        out = RingElem(ring, mpq_class(pick_int(rng, -4, 4), static_cast<unsigned long>(pick_int(rng, 1, 3))));
        break;
      case RingKind::DyadicCyclotomic8:
      case RingKind::CyclotomicField8:
        if (coin(rng)) {
          out = ring.omega_pow(static_cast<int>(pick_int(rng, 0, 7)));
          if (coin(rng)) out *= ring.inv_sqrt2();
        } else if (ring.kind() == RingKind::DyadicCyclotomic8) {
          DyadicOmega d;
          for (auto& c : d.c) c = pick_int(rng, -2, 2);
          d.k = static_cast<unsigned>(pick(rng, 0, 2));
          out = RingElem(ring, d);
        } else {
          RationalOmega q;
          for (auto& c : q.c) c = mpq_class(pick_int(rng, -3, 3), static_cast<unsigned long>(pick_int(rng, 1, 3)));
          for (auto& c : q.c) c.canonicalize();
          out = RingElem(ring, q);
        }
        break;
      case RingKind::PrimeField:
        out = ring.from_int(pick_int(rng, 0, static_cast<long>(ring.modulus()) - 1));
        break;
    }
    if (allow_zero || !out.is_zero()) return out;
  }
}

RExpr rexpr(Rng& rng, const Ring& ring, std::span<const Var> vars, std::size_t depth, bool allow_add) {
  if (depth == 0 || pick(rng, 0, 3) == 0) {
    if (coin(rng)) return RExpr::constant(element(rng, ring));
    return RExpr::pow(RExpr::constant(element(rng, ring)), boolexpr(rng, vars));
  }
  std::size_t choice = pick(rng, 0, allow_add ? 2 : 1);
  if (choice == 0) return rexpr(rng, ring, vars, depth - 1, allow_add) * rexpr(rng, ring, vars, depth - 1, allow_add);
  if (choice == 1) return RExpr::pow(rexpr(rng, ring, vars, depth - 1, allow_add), boolexpr(rng, vars));
  return rexpr(rng, ring, vars, depth - 1, allow_add) + rexpr(rng, ring, vars, depth - 1, allow_add);
}

PathSum closed_sum(Context& ctx, Rng& rng, const Ring& ring, std::size_t max_outputs, std::size_t max_bound,
                   bool multiplicative) {
  auto bound = fresh(ctx, pick(rng, 0, max_bound), "y");
  std::vector<BoolExpr> outputs;
  std::size_t n = pick(rng, 1, max_outputs);
  for (std::size_t i = 0; i < n; ++i) outputs.push_back(boolexpr(rng, bound, 3, 2));
  return PathSum(ring, {}, bound, rexpr(rng, ring, bound, 3, !multiplicative), outputs);
}

PathSum open_sum(Context& ctx, Rng& rng, const Ring& ring, std::size_t max_bound, bool multiplicative) {
  auto inputs = fresh(ctx, pick(rng, 1, 2), "x");
  auto bound = fresh(ctx, pick(rng, 0, max_bound), "y");
  auto env = join({inputs, bound});
  std::vector<BoolExpr> outputs;
  std::size_t n = pick(rng, 1, 2);
  for (std::size_t i = 0; i < n; ++i) outputs.push_back(boolexpr(rng, env, 3, 2));
  return PathSum(ring, inputs, bound, rexpr(rng, ring, env, 3, !multiplicative), outputs);
}

RuleInstance rule_instance(Context& ctx, Rng& rng, RuleId rule, const Ring& ring) {
  if (!rule_available(rule, ring)) {
    throw Unsupported("rule " + std::string(rule_name(rule)) + " is unavailable over " + ring.name());
  }
  for (int tries = 0; tries < 1000; ++tries) {
    auto inst = attempt(ctx, rng, rule, ring);
    if (!inst) continue;
    Context probe = ctx;
    if (apply_rule(probe, rule, inst->sum, inst->site)) return *inst;
  }
  throw Error("could not generate a matching instance of " + std::string(rule_name(rule)));
}

Circuit clifford_circuit(Rng& rng, std::size_t n_qubits, std::size_t max_gates) {
  Circuit c;
  c.n_qubits = n_qubits;
  std::size_t count = pick(rng, 0, max_gates);
  for (std::size_t g = 0; g < count; ++g) {
    GateOp op;
    std::size_t kind = n_qubits > 1 ? pick(rng, 0, 2) : pick(rng, 0, 1);
    std::size_t a = pick(rng, 0, n_qubits - 1);
    if (kind == 0) {
      op.name = "H";
      op.qubits = {a};
    } else if (kind == 1) {
      op.name = "S";
      op.qubits = {a};
    } else {
      std::size_t b = (a + pick(rng, 1, n_qubits - 1)) % n_qubits;
      op.name = "CX";
      op.qubits = {a, b};
    }
    c.gates.push_back(std::move(op));
  }
  return c;
}

Circuit pad_with_identities(Rng& rng, const Circuit& circuit, std::size_t count) {
  Circuit out = circuit;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t a = pick(rng, 0, out.n_qubits - 1);
    std::vector<GateOp> block;
    switch (out.n_qubits > 1 ? pick(rng, 0, 3) : pick(rng, 0, 2)) {
      case 0:
        block = {GateOp{"I", {a}, {}, 0, 0, 0}};
        break;
      case 1:
        block = {GateOp{"H", {a}, {}, 0, 0, 0}, GateOp{"H", {a}, {}, 0, 0, 0}};
        break;
      case 2:
        block.assign(4, GateOp{"S", {a}, {}, 0, 0, 0});
        break;
      default: {
        std::size_t b = (a + pick(rng, 1, out.n_qubits - 1)) % out.n_qubits;
        block.assign(2, GateOp{"CX", {a, b}, {}, 0, 0, 0});
      }
    }
    auto at = out.gates.begin() + static_cast<std::ptrdiff_t>(pick(rng, 0, out.gates.size()));
    out.gates.insert(at, block.begin(), block.end());
  }
  return out;
}

DenseMatrix matrix(Rng& rng, const Ring& ring, std::size_t rows, std::size_t cols) {
  DenseMatrix out(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = element(rng, ring);
  }
  return out;
}

}  // namespace pathsum::gen
