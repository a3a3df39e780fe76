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

#include "pathsum/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "pathsum/circuit.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/generators.hpp"
#include "pathsum/normalize.hpp"
#include "pathsum/oracle.hpp"
#include "pathsum/serialize.hpp"
#include "pathsum/theories.hpp"

namespace pathsum {

namespace {

using gen::Rng;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

RExpr konst(const Ring& ring, long n) { return RExpr::constant(ring.from_int(n)); }
RExpr neg(const RExpr& r) { return konst(r.ring(), -1) * r; }
RExpr power(const RExpr& r, const BoolExpr& f) { return RExpr::pow(r, f); }

BoolExpr var(Var x) { return BoolExpr::var(x); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Var> fresh_vars(Context& ctx, std::size_t n, const char* hint) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(ctx.fresh(hint));
  return out;
}

Assignment assignment(std::span<const Var> vars, std::size_t index) {
  Assignment sigma;
  for (std::size_t i = 0; i < vars.size(); ++i) sigma.set(vars[i], (index >> (vars.size() - 1 - i)) & 1U);
  return sigma;
}

std::vector<RingElem> pointwise(const RExpr& r, std::span<const Var> vars) {
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < (std::size_t{1} << vars.size()); ++i) out.push_back(reval(r, assignment(vars, i)));
  return out;
}

DenseMatrix scaled(const DenseMatrix& a, const RingElem& s) {
  std::vector<RingElem> entries;
  for (const auto& e : a.entries()) entries.push_back(e * s);
  return DenseMatrix(a.rows(), a.cols(), std::move(entries));
}

std::string vector_key(const std::vector<RingElem>& v) {
  std::string key;
  for (const auto& e : v) key += e.to_string() + ";";
  return key;
}

// Golden controlled-H normal form.
void golden_ch(Outcome& out, Rng&) {
  Ring ring = Ring::dyadic_cyclotomic8();
  Context ctx;
  auto form = normalize(ctx, to_state(gate(ctx, ring, GateKind::CH)), Theory::Ring);
  std::vector<RingElem> expected(16, ring.zero());
  auto h = ring.inv_sqrt2();
  expected[0b0000] = ring.one();
  expected[0b0101] = ring.one();
  expected[0b1010] = h;
  expected[0b1011] = h;
  expected[0b1110] = h;
  expected[0b1111] = -h;
  out.require(form.wires == 4, "wire count");
  out.require(form.entries == expected, "entries");
  std::size_t nonzero = 0;
  for (const auto& e : form.entries) nonzero += e.is_zero() ? 0 : 1;
  out.detail << nonzero << " nonzero entries";
}

// Golden TX.
void golden_tx(Outcome& out, Rng&) {
  Ring ring = Ring::dyadic_cyclotomic8();
  Context ctx;
  auto tx = compose(ctx, gate(ctx, ring, GateKind::T), gate(ctx, ring, GateKind::X));
  out.require(tx.input_arity() == 1 && tx.output_arity() == 1, "arity");
  out.require(tx.bound().empty(), "no bound variables");
  if (!out.passed) return;
  for (int b = 0; b < 2; ++b) {
    Assignment sigma;
    sigma.set(tx.inputs()[0], b == 1);
    out.require(reval(tx.amplitude(), sigma) == ring.omega_pow(1 - b), "amplitude omega^(1-x)");
    out.require(beval(tx.outputs()[0], sigma) == (b == 0), "output 1+x");
  }
  auto m = dense_matrix(tx);
  out.require(m(1, 0) == ring.omega() && m(0, 1) == ring.one() && m(0, 0).is_zero() && m(1, 1).is_zero(),
              "oracle matrix");
  out.detail << "TX = " << to_string(tx, ctx.namer());
}

// Rule soundness.
void rule_soundness(Outcome& out, Rng& rng) {
  const std::vector<RuleId> rules = {RuleId::E,    RuleId::H, RuleId::Omega, RuleId::Hgen, RuleId::Hrel,
                                     RuleId::Z,    RuleId::S, RuleId::O,     RuleId::A};
  const Ring dyadic = Ring::dyadic_cyclotomic8();
  const Ring integers = Ring::integers();
  const Ring field = Ring::cyclotomic_field8();
  const Ring f7 = Ring::prime_field(7);
  std::size_t total = 0;
  for (RuleId rule : rules) {
    for (int i = 0; i < 1000; ++i) {
      Ring ring = dyadic;
      if (rule == RuleId::O || rule == RuleId::A) ring = i % 2 ? f7 : field;
      if (rule == RuleId::S && i % 2) ring = integers;
      Context ctx;
      auto inst = gen::rule_instance(ctx, rng, rule, ring);
      std::string where = std::string(rule_name(rule)) + " #" + std::to_string(i);
      out.require(inst.sum.output_arity() <= 3 && inst.sum.bound().size() <= 5, where + " size bounds");
      auto after = apply_rule(ctx, rule, inst.sum, inst.site);
      out.require(after.has_value(), where + " matches");
      if (!after) continue;
      out.require(matrices_equal(dense_matrix(inst.sum), dense_matrix(*after)), where + " oracle");
      ++total;
    }
  }
  out.detail << total << " instances over " << rules.size() << " rules";
}

// Normal forms of closed sums against the oracle. Multiplicative sums go
// through the field normalizer and are cross-checked with the ring one.
void completeness(Outcome& out, Rng& rng, const std::vector<Ring>& rings, bool multiplicative) {
  std::size_t groups = 0;
  std::size_t shared = 0;
  for (const Ring& ring : rings) {
    std::map<std::string, std::string> by_oracle;
    for (int i = 0; i < 500; ++i) {
      Context ctx;
      auto psi = gen::closed_sum(ctx, rng, ring, 3, 5, multiplicative);
      std::string where = ring.name() + " #" + std::to_string(i);
      auto oracle = dense_matrix(psi);
      auto column = vectorize(oracle);
      NormalForm form = multiplicative ? normalize_field(ctx, psi) : normalize_ring(ctx, psi);
      out.require(form.entries == column, where + " equals oracle");
      if (multiplicative) out.require(normalize_ring(ctx, psi) == form, where + " ring agrees");
      auto dump = to_json(form).dump();
      auto canonical = normalize(ctx, from_matrix(ctx, oracle), multiplicative ? Theory::Field : Theory::Ring);
      out.require(to_json(canonical).dump() == dump, where + " serialized form of the oracle sum");
      auto [it, inserted] = by_oracle.emplace(vector_key(column), dump);
      if (!inserted) {
        ++shared;
        out.require(it->second == dump, where + " uniqueness");
      }
    }
    groups += by_oracle.size();
  }
  out.detail << rings.size() * 500 << " sums, " << groups << " distinct vectors, " << shared
             << " sums sharing a vector";
}

void ring_completeness(Outcome& out, Rng& rng) {
  completeness(out, rng, {Ring::integers(), Ring::rationals(), Ring::dyadic_cyclotomic8()}, false);
}

void field_completeness(Outcome& out, Rng& rng) {
  completeness(out, rng, {Ring::rationals(), Ring::cyclotomic_field8(), Ring::prime_field(7)}, true);
}

struct Axiom {
  std::string name;
  bool field = false;
  /// Printed form known to be unsound; must fail on some instance.
  bool misprint = false;
  std::function<std::pair<RExpr, RExpr>(Rng&, const Ring&, std::span<const Var>)> make;
};

RExpr any_r(Rng& rng, const Ring& ring, std::span<const Var> vars, bool field) {
  return gen::rexpr(rng, ring, vars, 2, !field);
}

/// A product of powers of units together with its inverse square.
std::pair<RExpr, RExpr> unit_and_inverse_square(Rng& rng, const Ring& ring, std::span<const Var> vars) {
  std::vector<RExpr> a;
  std::vector<RExpr> inv2;
  for (std::size_t i = pick(rng, 1, 3); i > 0; --i) {
    auto alpha = gen::element(rng, ring, false);
    auto f = gen::boolexpr(rng, vars);
    a.push_back(power(RExpr::constant(alpha), f));
    inv2.push_back(power(RExpr::constant(alpha.inv().pow(2)), f));
  }
  return {RExpr::product(a, ring), RExpr::product(inv2, ring)};
}

std::vector<Axiom> axioms() {
  using V = std::span<const Var>;
  auto b = [](Rng& rng, V vars) { return gen::boolexpr(rng, vars); };
  std::vector<Axiom> out;
  auto both = [&](std::string name, auto make) {
    out.push_back({name, false, false, [make](Rng& rng, const Ring& ring, V vars) { return make(rng, ring, vars, false); }});
    out.push_back({name, true, false, [make](Rng& rng, const Ring& ring, V vars) { return make(rng, ring, vars, true); }});
  };
  auto ring_only = [&](std::string name, auto make, bool misprint = false) {
    out.push_back({name, false, misprint, make});
  };

  ring_only("(r1 + r2) + r3 = r1 + (r2 + r3)", [](Rng& rng, const Ring& ring, V vars) {
    auto r1 = any_r(rng, ring, vars, false), r2 = any_r(rng, ring, vars, false), r3 = any_r(rng, ring, vars, false);
    return std::pair{(r1 + r2) + r3, r1 + (r2 + r3)};
  });
  ring_only("r1 + r2 = r2 + r1", [](Rng& rng, const Ring& ring, V vars) {
    auto r1 = any_r(rng, ring, vars, false), r2 = any_r(rng, ring, vars, false);
    return std::pair{r1 + r2, r2 + r1};
  });
  ring_only("r + 0 = r", [](Rng& rng, const Ring& ring, V vars) {
    auto r = any_r(rng, ring, vars, false);
    return std::pair{r + konst(ring, 0), r};
  });
  ring_only("r - r = 0", [](Rng& rng, const Ring& ring, V vars) {
    auto r = any_r(rng, ring, vars, false);
    return std::pair{r + neg(r), konst(ring, 0)};
  });
  both("(a1 a2) a3 = a1 (a2 a3)", [](Rng& rng, const Ring& ring, V vars, bool field) {
    auto r1 = any_r(rng, ring, vars, field), r2 = any_r(rng, ring, vars, field), r3 = any_r(rng, ring, vars, field);
    return std::pair{(r1 * r2) * r3, r1 * (r2 * r3)};
  });
  both("a1 a2 = a2 a1", [](Rng& rng, const Ring& ring, V vars, bool field) {
    auto r1 = any_r(rng, ring, vars, field), r2 = any_r(rng, ring, vars, field);
    return std::pair{r1 * r2, r2 * r1};
  });
  both("a 1 = a", [](Rng& rng, const Ring& ring, V vars, bool field) {
    auto r = any_r(rng, ring, vars, field);
    return std::pair{r * konst(ring, 1), r};
  });
  ring_only("r1 (r2 + r3) = r1 r2 + r1 r3", [](Rng& rng, const Ring& ring, V vars) {
    auto r1 = any_r(rng, ring, vars, false), r2 = any_r(rng, ring, vars, false), r3 = any_r(rng, ring, vars, false);
    return std::pair{r1 * (r2 + r3), r1 * r2 + r1 * r3};
  });
  both("a^0 = 1", [](Rng& rng, const Ring& ring, V vars, bool field) {
    return std::pair{power(any_r(rng, ring, vars, field), BoolExpr::zero()), konst(ring, 1)};
  });
  both("1^f = 1", [b](Rng& rng, const Ring& ring, V vars, bool) {
    return std::pair{power(konst(ring, 1), b(rng, vars)), konst(ring, 1)};
  });
  both("a^1 = a", [](Rng& rng, const Ring& ring, V vars, bool field) {
    auto r = any_r(rng, ring, vars, field);
    return std::pair{power(r, BoolExpr::one()), r};
  });
  both("a = a^f a^(1+f)", [b](Rng& rng, const Ring& ring, V vars, bool field) {
    auto r = any_r(rng, ring, vars, field);
    auto f = b(rng, vars);
    return std::pair{r, power(r, f) * power(r, bnot(f))};
  });
  ring_only("r^(f1+f2) = r^f1 + r^f2 - (2r - 1)^(f1 f2)", [b](Rng& rng, const Ring& ring, V vars) {
    auto r = any_r(rng, ring, vars, false);
    auto f1 = b(rng, vars), f2 = b(rng, vars);
    return std::pair{power(r, f1 ^ f2),
                     power(r, f1) + power(r, f2) + neg(power(konst(ring, 2) * r + konst(ring, -1), f1 * f2))};
  });
  ring_only(
      "printed: r^(f1+f2) = r^f1 + r^f2 - (2r)^(f1 f2)",
      [b](Rng& rng, const Ring& ring, V vars) {
        auto r = any_r(rng, ring, vars, false);
        auto f1 = b(rng, vars), f2 = b(rng, vars);
        return std::pair{power(r, f1 ^ f2), power(r, f1) + power(r, f2) + neg(power(konst(ring, 2) * r, f1 * f2))};
      },
      true);
  out.push_back({"a^(f1+f2) = a^f1 a^f2 (a^-2)^(f1 f2)", true, false, [b](Rng& rng, const Ring& ring, V vars) {
                   auto [a, inv2] = unit_and_inverse_square(rng, ring, vars);
                   auto f1 = b(rng, vars), f2 = b(rng, vars);
                   return std::pair{power(a, f1 ^ f2), power(a, f1) * power(a, f2) * power(inv2, f1 * f2)};
                 }});
  both("a^(f1 f2) = (a^f1)^f2", [b](Rng& rng, const Ring& ring, V vars, bool field) {
    auto r = any_r(rng, ring, vars, field);
    auto f1 = b(rng, vars), f2 = b(rng, vars);
    return std::pair{power(r, f1 * f2), power(power(r, f1), f2)};
  });
  both("a1^f a2^f = (a1 a2)^f", [b](Rng& rng, const Ring& ring, V vars, bool field) {
    auto r1 = any_r(rng, ring, vars, field), r2 = any_r(rng, ring, vars, field);
    auto f = b(rng, vars);
    return std::pair{power(r1, f) * power(r2, f), power(r1 * r2, f)};
  });
  ring_only("r1^f r2^(1+f) = r1^f + r2^(1+f) - 1", [b](Rng& rng, const Ring& ring, V vars) {
    auto r1 = any_r(rng, ring, vars, false), r2 = any_r(rng, ring, vars, false);
    auto f = b(rng, vars);
    return std::pair{power(r1, f) * power(r2, bnot(f)), power(r1, f) + power(r2, bnot(f)) + konst(ring, -1)};
  });
  ring_only("r1^f + r2^f = (r1 + r2)^f + 0^f", [b](Rng& rng, const Ring& ring, V vars) {
    auto r1 = any_r(rng, ring, vars, false), r2 = any_r(rng, ring, vars, false);
    auto f = b(rng, vars);
    return std::pair{power(r1, f) + power(r2, f), power(r1 + r2, f) + power(konst(ring, 0), f)};
  });
  ring_only(
      "printed: r1^f + r2^f = (r1 + r2)^f + 0^(1+f)",
      [b](Rng& rng, const Ring& ring, V vars) {
        auto r1 = any_r(rng, ring, vars, false), r2 = any_r(rng, ring, vars, false);
        auto f = b(rng, vars);
        return std::pair{power(r1, f) + power(r2, f), power(r1 + r2, f) + power(konst(ring, 0), bnot(f))};
      },
      true);
  return out;
}

// Expression normalization and the expression axioms.
void expressions(Outcome& out, Rng& rng) {
  struct Setting {
    Ring ring;
    Theory theory;
  };
  const std::vector<Setting> settings = {{Ring::integers(), Theory::Ring},
                                         {Ring::dyadic_cyclotomic8(), Theory::Ring},
                                         {Ring::cyclotomic_field8(), Theory::Field},
                                         {Ring::prime_field(7), Theory::Field}};
  for (int i = 0; i < 1000; ++i) {
    const auto& s = settings[static_cast<std::size_t>(i) % settings.size()];
    Context ctx;
    auto vars = fresh_vars(ctx, pick(rng, 1, 4), "x");
    auto r = gen::rexpr(rng, s.ring, vars, 3, s.theory == Theory::Ring);
    auto table = normalize_rexpr(r, vars, NormalizeOptions{s.theory, 20});
    out.require(table.vars == vars && table.entries == pointwise(r, vars),
                "expression #" + std::to_string(i) + " " + to_string(r, ctx.namer()));
  }

  const std::vector<Ring> ring_rings = {Ring::integers(), Ring::dyadic_cyclotomic8()};
  const std::vector<Ring> field_rings = {Ring::cyclotomic_field8(), Ring::prime_field(7)};
  std::size_t checked = 0;
  std::size_t refuted = 0;
  for (const auto& axiom : axioms()) {
    bool counterexample = false;
    for (const Ring& ring : axiom.field ? field_rings : ring_rings) {
      Theory theory = axiom.field ? Theory::Field : Theory::Ring;
      for (int i = 0; i < 100; ++i) {
        Context ctx;
        auto vars = fresh_vars(ctx, pick(rng, 1, 4), "x");
        auto [lhs, rhs] = axiom.make(rng, ring, vars);
        bool same = pointwise(lhs, vars) == pointwise(rhs, vars);
        if (axiom.misprint) {
          counterexample = counterexample || !same;
          continue;
        }
        std::string where = axiom.name + " over " + ring.name();
        out.require(same, where + " pointwise");
        NormalizeOptions options{theory, 20};
        out.require(normalize_rexpr(lhs, vars, options) == normalize_rexpr(rhs, vars, options),
                    where + " normal forms");
        ++checked;
      }
    }
    if (axiom.misprint) {
      out.require(counterexample, axiom.name + " has a counterexample");
      refuted += counterexample ? 1 : 0;
    }
  }
  out.detail << "1000 expressions, " << checked << " axiom instances, " << refuted << " printed forms refuted";
}

// Clifford miters reduce to the identity under the Clifford rules alone.
void clifford(Outcome& out, Rng& rng) {
  const Ring ring = Ring::dyadic_cyclotomic8();
  std::string identity_key;
  {
    Context ctx;
    identity_key = canonical_key(identity(ctx, ring, 4));
  }
  auto miter = [&](const Circuit& a, const Circuit& b) {
    Circuit m = a;
    auto inv = inverse(b);
    m.gates.insert(m.gates.end(), inv.gates.begin(), inv.gates.end());
    return m;
  };
  auto reduced_key = [&](const Circuit& c, std::vector<RewriteStep>& trace) {
    Context ctx;
    return canonical_key(reduce_rewrite_first(ctx, circuit_to_pathsum(ctx, c, ring), Strategy::Cliff, &trace));
  };
  std::size_t fallbacks = 0;
  std::size_t steps = 0;
  for (int i = 0; i < 100; ++i) {
    auto c = gen::clifford_circuit(rng, 4, 30);
    auto padded = gen::pad_with_identities(rng, c, pick(rng, 1, 6));
    std::vector<RewriteStep> trace;
    bool equal = reduced_key(miter(padded, c), trace) == identity_key;
    for (const auto& step : trace) {
      out.require(step.rule == RuleId::E || step.rule == RuleId::H || step.rule == RuleId::Omega ||
                      step.rule == RuleId::VarChange,
                  "pair #" + std::to_string(i) + " used " + std::string(rule_name(step.rule)));
    }
    steps += trace.size();
    if (!equal) ++fallbacks;
    out.require(equal, "pair #" + std::to_string(i) + " reduced to the identity");
    out.require(matrices_equal(circuit_matrix(padded, ring), circuit_matrix(c, ring)),
                "pair #" + std::to_string(i) + " oracle agrees");

    auto broken = padded;
    auto at = broken.gates.begin() + static_cast<std::ptrdiff_t>(pick(rng, 0, broken.gates.size()));
    broken.gates.insert(at, GateOp{"Z", {pick(rng, 0, 3)}, {}, 0, 0, 0});
    std::vector<RewriteStep> ignored;
    out.require(reduced_key(miter(broken, c), ignored) != identity_key, "control #" + std::to_string(i));
    out.require(!matrices_equal(circuit_matrix(broken, ring), circuit_matrix(c, ring)),
                "control #" + std::to_string(i) + " oracle");
  }
  out.detail << "100 pairs, " << fallbacks << " fallbacks, " << steps << " rewrite steps, 100 controls rejected";
}

// Encoding cross-checks.
void encodings(Outcome& out, Rng&) {
  {
    Ring ring = Ring::dyadic_cyclotomic8();
    Context ctx;
    out.require(matrices_equal(dense_matrix(controlled_h_balanced(ctx, ring)), dense_matrix(gate(ctx, ring, GateKind::CH))),
                "balanced controlled-H");
  }
  {
    Ring ring = Ring::dyadic_cyclotomic8();
    std::size_t cases = 0;
    for (const auto& alpha : {ring.omega(), ring.from_int(3), ring.zero()}) {
      for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t m = 0; m <= 2; ++m) {
          Context ctx;
          auto hadamards = [&](std::size_t k) {
            auto h = identity(ctx, ring, 0);
            for (std::size_t j = 0; j < k; ++j) h = tensor(ctx, h, gate(ctx, ring, GateKind::H));
            return h;
          };
          auto lhs = compose(ctx, hadamards(m), compose(ctx, gate(ctx, ring, GateKind::ZSpider, &alpha, n, m), hadamards(n)));
          auto lhs_m = dense_matrix(lhs);
          auto s = ring.one();
          auto literal = ring.one();
          for (std::size_t j = 0; j < n + m; ++j) {
            s *= ring.inv_sqrt2();
            literal *= ring.half();
          }
          std::string where = "spider n=" + std::to_string(n) + " m=" + std::to_string(m) + " alpha=" + alpha.to_string();
          out.require(matrices_equal(lhs_m, dense_matrix(x_spider(ctx, ring, alpha, n, m, s))), where);
          auto literal_m = dense_matrix(x_spider(ctx, ring, alpha, n, m, literal));
          out.require(matrices_equal(literal_m, scaled(lhs_m, s)), where + " literal scalar ratio");
          if (n + m > 0 && !alpha.is_zero()) out.require(!matrices_equal(literal_m, lhs_m), where + " literal differs");
          ++cases;
        }
      }
    }
    out.detail << cases << " spider cases; ";
  }
  {
    Ring ring = Ring::rationals();
    Context ctx;
    Var x = ctx.fresh("x");
    Var y1 = ctx.fresh("y");
    Var y2 = ctx.fresh("y");
    Var z = ctx.fresh("z");
    auto encode = [&](const BoolExpr& f, const BoolExpr& g) {
      auto e = bnot(var(x)) * bnot(f) ^ var(x) * bnot(g);
      auto amp = RExpr::constant(ring.half()) * power(konst(ring, -1), var(z) * e);
      return PathSum(ring, {}, {x, y1, y2, z}, amp, {var(x)});
    };
    auto one = BoolExpr::one();
    auto f1 = var(y1) * var(y2);
    auto g1 = var(y1) ^ var(y2) ^ var(y1) * var(y2);
    auto f2 = (one ^ var(y1)) * (one ^ var(y2));
    auto g2 = one ^ var(y1) * var(y2);
    out.require(f1 != f2 && g1 != g2, "distinct encodings");
    DenseMatrix target(2, 1, {ring.from_int(1), ring.from_int(3)});
    for (Theory theory : {Theory::Ring, Theory::Field}) {
      auto a = normalize(ctx, encode(f1, g1), theory);
      auto b = normalize(ctx, encode(f2, g2), theory);
      auto t = normalize(ctx, from_matrix(ctx, target), theory);
      out.require(a.entries == target.entries(), "odd-prime state entries");
      out.require(to_json(a).dump() == to_json(b).dump() && to_json(a).dump() == to_json(t).dump(),
                  "odd-prime state normal forms");
    }
    out.detail << "odd-prime state [1, 3]";
  }
}

struct Criterion {
  const char* title;
  double budget;
  void (*run)(Outcome&, Rng&);
};

const Criterion kCriteria[] = {
    {"golden controlled-H normal form", 1.0, golden_ch},
    {"golden TX", 1.0, golden_tx},
    {"rule soundness", 60.0, rule_soundness},
    {"ring normal forms against the oracle", 120.0, ring_completeness},
    {"field normal forms against the oracle", 120.0, field_completeness},
    {"expression normal forms and axioms", 30.0, expressions},
    {"Clifford rewrite-first equivalence", 60.0, clifford},
    {"encoding cross-checks", 10.0, encodings},
};

Circuit random_circuit(Rng& rng, std::size_t n_qubits, std::size_t max_gates) {
  static const char* const kNames[] = {"H", "S", "T", "X", "Z", "CX"};
  Circuit c;
  c.n_qubits = n_qubits;
  for (std::size_t g = pick(rng, 0, max_gates); g > 0; --g) {
    GateOp op;
    op.name = kNames[pick(rng, 0, n_qubits > 1 ? 5 : 4)];
    std::size_t a = pick(rng, 0, n_qubits - 1);
    op.qubits = {a};
    if (op.name == "CX") op.qubits.push_back((a + pick(rng, 1, n_qubits - 1)) % n_qubits);
    c.gates.push_back(std::move(op));
  }
  return c;
}

// Verdicts of `equivalent` against the circuit oracles.
void verify_verdicts(Outcome& out, Rng& rng) {
  const Ring ring = Ring::dyadic_cyclotomic8();
  std::size_t equal_pairs = 0;
  for (int i = 0; i < 200; ++i) {
    auto a = random_circuit(rng, 2, 6);
    auto b = i % 2 ? random_circuit(rng, 2, 6) : gen::pad_with_identities(rng, a, pick(rng, 1, 2));
    Context ctx;
    auto result = equivalent(ctx, circuit_to_pathsum(ctx, a, ring), circuit_to_pathsum(ctx, b, ring),
                             EquivalenceConfig{Theory::Ring, Strategy::CliffTH, 20});
    bool expected = matrices_equal(circuit_matrix(a, ring), circuit_matrix(b, ring));
    std::string where = "pair #" + std::to_string(i);
    out.require(result.equal == expected, where + " verdict");
    if (!result.equal) {
      out.require(result.first_difference && result.lhs_entry && result.rhs_entry && !(*result.lhs_entry == *result.rhs_entry),
                  where + " counterexample");
    }
    equal_pairs += expected ? 1 : 0;
  }
  out.detail << "200 pairs, " << equal_pairs << " equal";
}

}  // namespace

CriterionResult verify_cross_check(std::uint64_t seed) {
  CriterionResult result;
  result.title = "verify verdicts against the oracle";
  result.budget = 60.0;
  Outcome outcome;
  Rng rng(seed);
  auto start = std::chrono::steady_clock::now();
  try {
    verify_verdicts(outcome, rng);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds > result.budget) outcome.require(false, "over time budget");
  result.passed = outcome.passed;
  result.detail = outcome.detail.str();
  return result;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > 8) throw Error("no criterion " + std::to_string(id));
  const Criterion& criterion = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = criterion.title;
  result.budget = criterion.budget;
  Outcome outcome;
  Rng rng(seed + static_cast<std::uint64_t>(id));
  auto start = std::chrono::steady_clock::now();
  try {
    criterion.run(outcome, rng);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds > result.budget) outcome.require(false, "over time budget");
  result.passed = outcome.passed;
  result.detail = outcome.detail.str();
  return result;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  if (r.id > 0) {
    s << "criterion " << r.id << ": ";
  } else {
    s << "cross-check: ";
  }
  s << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "  (" << r.seconds
    << " s of " << r.budget << " s)  " << r.detail;
  return s.str();
}

std::vector<CriterionResult> run_acceptance(std::ostream& out, std::uint64_t seed) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 8; ++id) {
    results.push_back(run_criterion(id, seed));
    out << format_result(results.back()) << std::endl;
  }
  return results;
}

}  // namespace pathsum
