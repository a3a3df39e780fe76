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

#include <bit>

#include "pathsum/errors.hpp"
#include "pathsum/matrix.hpp"
#include "pathsum/pathsum.hpp"

namespace pathsum {

namespace {

RExpr constant(const RingElem& a) { return RExpr::constant(a); }

RExpr power(const RingElem& a, const BoolExpr& f) { return RExpr::pow(RExpr::constant(a), f); }

BoolExpr var(Var x) { return BoolExpr::var(x); }

std::vector<Var> fresh_vars(Context& ctx, std::size_t count, const std::string& hint) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(ctx.fresh(hint));
  return out;
}

const RingElem& require_alpha(const RingElem* alpha, const Ring& ring) {
  if (alpha == nullptr) throw Unsupported("generator needs a ring parameter");
  if (!(alpha->ring() == ring)) throw RingMismatch("parameter from " + alpha->ring().name());
  return *alpha;
}

}  // namespace

PathSum gate(Context& ctx, const Ring& ring, GateKind kind, const RingElem* alpha, std::size_t n, std::size_t m) {
  switch (kind) {
    case GateKind::I:
      return identity(ctx, ring, 1);
    case GateKind::X: {
      Var x = ctx.fresh("x");
      return PathSum(ring, {x}, {}, constant(ring.one()), {bnot(var(x))});
    }
    case GateKind::Z: {
      Var x = ctx.fresh("x");
      return PathSum(ring, {x}, {}, power(ring.from_int(-1), var(x)), {var(x)});
    }
    case GateKind::S: {
      Var x = ctx.fresh("x");
      return PathSum(ring, {x}, {}, power(ring.imag(), var(x)), {var(x)});
    }
    case GateKind::T: {
      Var x = ctx.fresh("x");
      return PathSum(ring, {x}, {}, power(ring.omega(), var(x)), {var(x)});
    }
    case GateKind::H: {
      Var x = ctx.fresh("x");
      Var y = ctx.fresh("y");
      RExpr amp = constant(ring.inv_sqrt2()) * power(ring.from_int(-1), var(x) * var(y));
      return PathSum(ring, {x}, {y}, amp, {var(y)});
    }
    case GateKind::CX: {
      Var a = ctx.fresh("x");
      Var b = ctx.fresh("x");
      return PathSum(ring, {a, b}, {}, constant(ring.one()), {var(a), var(a) ^ var(b)});
    }
    case GateKind::CCX: {
      Var a = ctx.fresh("x");
      Var b = ctx.fresh("x");
      Var c = ctx.fresh("x");
      return PathSum(ring, {a, b, c}, {}, constant(ring.one()), {var(a), var(b), var(c) ^ (var(a) * var(b))});
    }
    case GateKind::CH: {
      // Σ_y 0^{¬x1(x2⊕y)} (1/√2)^{x1} (−1)^{x1 x2 y} |x1 y⟩
      Var x1 = ctx.fresh("x");
      Var x2 = ctx.fresh("x");
      Var y = ctx.fresh("y");
      RExpr amp = power(ring.zero(), bnot(var(x1)) * (var(x2) ^ var(y))) * power(ring.inv_sqrt2(), var(x1)) *
                  power(ring.from_int(-1), var(x1) * var(x2) * var(y));
      return PathSum(ring, {x1, x2}, {y}, amp, {var(x1), var(y)});
    }
    case GateKind::ZSpider: {
      // Σ_{y⃗, z} 2^{-n} α^z (−1)^{Σ y_i(x_i ⊕ z)} |z⋯z⟩
      const RingElem& a = require_alpha(alpha, ring);
      auto xs = fresh_vars(ctx, n, "x");
      auto ys = fresh_vars(ctx, n, "y");
      Var z = ctx.fresh("z");
      BoolExpr phase;
      for (std::size_t i = 0; i < n; ++i) phase = phase ^ (var(ys[i]) * (var(xs[i]) ^ var(z)));
      RExpr amp = power(a, var(z));
      if (n > 0) amp = constant(ring.half().pow(static_cast<unsigned>(n))) * amp;
      if (!phase.is_zero()) amp = amp * power(ring.from_int(-1), phase);
      std::vector<Var> bound = ys;
      bound.push_back(z);
      return PathSum(ring, xs, bound, amp, std::vector<BoolExpr>(m, var(z)));
    }
    case GateKind::HBox: {
      // Σ_{y⃗} α^{x1⋯xn y1⋯ym} |y⃗⟩
      const RingElem& a = require_alpha(alpha, ring);
      auto xs = fresh_vars(ctx, n, "x");
      auto ys = fresh_vars(ctx, m, "y");
      Monomial mono(xs.begin(), xs.end());
      mono.insert(mono.end(), ys.begin(), ys.end());
      std::vector<BoolExpr> outputs;
      for (Var y : ys) outputs.push_back(var(y));
      return PathSum(ring, xs, ys, power(a, BoolExpr::from_monomials({mono})), outputs);
    }
    case GateKind::Cup: {
      Var y = ctx.fresh("y");
      return PathSum(ring, {}, {y}, constant(ring.one()), {var(y), var(y)});
    }
    case GateKind::Cap: {
      // ε|xy⟩ = ½ Σ_z (−1)^{z(x⊕y)}
      Var x = ctx.fresh("x");
      Var y = ctx.fresh("x");
      Var z = ctx.fresh("z");
      RExpr amp = constant(ring.half()) * power(ring.from_int(-1), var(z) * (var(x) ^ var(y)));
      return PathSum(ring, {x, y}, {z}, amp, {});
    }
  }
  throw Unsupported("unknown gate");
}

PathSum controlled_h_balanced(Context& ctx, const Ring& ring) {
  // (1/√2) Σ_y ω^{(1−x1)(2y−1)} (−1)^{x1 x2 y} |x1, (1⊕x1)x2 ⊕ x1 y⟩, with
  // ω^{(1−x1)(2y−1)} written as (ω^{-1} i^{y})^{¬x1}.
  Var x1 = ctx.fresh("x");
  Var x2 = ctx.fresh("x");
  Var y = ctx.fresh("y");
  RExpr phase = RExpr::pow(constant(ring.omega_pow(-1)) * power(ring.imag(), var(y)), bnot(var(x1)));
  RExpr amp = constant(ring.inv_sqrt2()) * phase * power(ring.from_int(-1), var(x1) * var(x2) * var(y));
  return PathSum(ring, {x1, x2}, {y}, amp, {var(x1), (bnot(var(x1)) * var(x2)) ^ (var(x1) * var(y))});
}

PathSum x_spider(Context& ctx, const Ring& ring, const RingElem& alpha, std::size_t n, std::size_t m,
                 const RingElem& scalar) {
  auto xs = fresh_vars(ctx, n, "x");
  Var y = ctx.fresh("y");
  auto zs = fresh_vars(ctx, m, "z");
  BoolExpr in_parity;
  for (Var x : xs) in_parity = in_parity ^ var(x);
  BoolExpr out_parity;
  for (Var z : zs) out_parity = out_parity ^ var(z);
  RExpr amp = constant(scalar) * power(alpha, var(y)) * power(ring.from_int(-1), var(y) * in_parity) *
              power(ring.from_int(-1), var(y) * out_parity);
  std::vector<Var> bound{y};
  bound.insert(bound.end(), zs.begin(), zs.end());
  std::vector<BoolExpr> outputs;
  for (Var z : zs) outputs.push_back(var(z));
  return PathSum(ring, xs, bound, amp, outputs);
}

PathSum from_matrix(Context& ctx, const DenseMatrix& a) {
  if (!std::has_single_bit(a.rows()) || !std::has_single_bit(a.cols())) {
    throw ArityMismatch("from_matrix: dimensions " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " are not powers of two");
  }
  const auto n_out = static_cast<std::size_t>(std::countr_zero(a.rows()));
  const auto n_in = static_cast<std::size_t>(std::countr_zero(a.cols()));
  auto xs = fresh_vars(ctx, n_in, "x");
  auto ys = fresh_vars(ctx, n_out, "y");
  NormalTable table;
  table.vars = xs;
  table.vars.insert(table.vars.end(), ys.begin(), ys.end());
  table.entries = vectorize(a);
  std::vector<BoolExpr> outputs;
  for (Var y : ys) outputs.push_back(var(y));
  return PathSum(a.ring(), xs, ys, table_to_rexpr(table), outputs);
}

}  // namespace pathsum
