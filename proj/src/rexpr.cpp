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

#include "pathsum/rexpr.hpp"

#include <algorithm>
#include <iterator>

#include "pathsum/errors.hpp"

namespace pathsum {

struct RExpr::Node {
  Kind kind;
  Ring ring;
  bool has_add = false;
  std::optional<RingElem> value;
  std::optional<RExpr> lhs;
  std::optional<RExpr> rhs;
  BoolExpr exponent;
  std::vector<Var> free_vars;
  std::size_t size = 1;
};

namespace {

std::vector<Var> merge_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RExpr RExpr::constant(RingElem value) {
  Ring ring = value.ring();
  return RExpr(std::make_shared<const Node>(Node{Kind::Const, ring, false, std::move(value), {}, {}, {}, {}, 1}));
}

RExpr RExpr::pow(RExpr base, BoolExpr exponent) {
  Ring ring = base.ring();
  bool has_add = !base.is_multiplicative();
  auto fv = merge_vars(base.free_vars(), exponent.free_vars());
  std::size_t size = base.size() + 1;
  return RExpr(std::make_shared<const Node>(
      Node{Kind::Pow, ring, has_add, std::nullopt, std::move(base), std::nullopt, std::move(exponent), std::move(fv), size}));
}

RExpr RExpr::mul(RExpr lhs, RExpr rhs) {
  if (!(lhs.ring() == rhs.ring())) {
    throw RingMismatch("product of " + lhs.ring().name() + " and " + rhs.ring().name() + " expressions");
  }
  Ring ring = lhs.ring();
  bool has_add = !lhs.is_multiplicative() || !rhs.is_multiplicative();
  auto fv = merge_vars(lhs.free_vars(), rhs.free_vars());
  std::size_t size = lhs.size() + rhs.size() + 1;
  return RExpr(std::make_shared<const Node>(
      Node{Kind::Mul, ring, has_add, std::nullopt, std::move(lhs), std::move(rhs), {}, std::move(fv), size}));
}

RExpr RExpr::add(RExpr lhs, RExpr rhs) {
  if (!(lhs.ring() == rhs.ring())) {
    throw RingMismatch("sum of " + lhs.ring().name() + " and " + rhs.ring().name() + " expressions");
  }
  Ring ring = lhs.ring();
  auto fv = merge_vars(lhs.free_vars(), rhs.free_vars());
  std::size_t size = lhs.size() + rhs.size() + 1;
  return RExpr(std::make_shared<const Node>(
      Node{Kind::Add, ring, true, std::nullopt, std::move(lhs), std::move(rhs), {}, std::move(fv), size}));
}

RExpr RExpr::product(std::span<const RExpr> factors, const Ring& ring) {
  if (factors.empty()) return constant(ring.one());
  RExpr acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i]);
  return acc;
}

RExpr::Kind RExpr::kind() const { return node_->kind; }
const Ring& RExpr::ring() const { return node_->ring; }
AmplitudeMode RExpr::mode() const {
  return node_->has_add ? AmplitudeMode::Full : AmplitudeMode::Multiplicative;
}
const RingElem& RExpr::value() const { return *node_->value; }
const RExpr& RExpr::base() const { return *node_->lhs; }
const BoolExpr& RExpr::exponent() const { return node_->exponent; }
const RExpr& RExpr::lhs() const { return *node_->lhs; }
const RExpr& RExpr::rhs() const { return *node_->rhs; }
const std::vector<Var>& RExpr::free_vars() const { return node_->free_vars; }
std::size_t RExpr::size() const { return node_->size; }

bool RExpr::depends_on(Var x) const {
  const auto& fv = node_->free_vars;
  return std::binary_search(fv.begin(), fv.end(), x);
}

RingElem reval(const RExpr& r, const Assignment& sigma) {
  switch (r.kind()) {
    case RExpr::Kind::Const:
      return r.value();
    case RExpr::Kind::Pow: {
      RingElem base = reval(r.base(), sigma);
      return beval(r.exponent(), sigma) ? base : r.ring().one();
    }
    case RExpr::Kind::Mul:
      return reval(r.lhs(), sigma) * reval(r.rhs(), sigma);
    case RExpr::Kind::Add:
      return reval(r.lhs(), sigma) + reval(r.rhs(), sigma);
  }
  throw Error("unreachable");
}

RExpr rsubst(const RExpr& r, Var x, const BoolExpr& g) {
  if (!r.depends_on(x)) return r;
  switch (r.kind()) {
    case RExpr::Kind::Const:
      return r;
    case RExpr::Kind::Pow:
      return RExpr::pow(rsubst(r.base(), x, g), bsubst(r.exponent(), x, g));
    case RExpr::Kind::Mul:
      return RExpr::mul(rsubst(r.lhs(), x, g), rsubst(r.rhs(), x, g));
    case RExpr::Kind::Add:
      return RExpr::add(rsubst(r.lhs(), x, g), rsubst(r.rhs(), x, g));
  }
  throw Error("unreachable");
}

RExpr rsubst_bits(const RExpr& r, std::span<const std::pair<Var, bool>> bits) {
  bool touched = std::any_of(bits.begin(), bits.end(), [&](const auto& b) { return r.depends_on(b.first); });
  if (!touched) return r;
  switch (r.kind()) {
    case RExpr::Kind::Const:
      return r;
    case RExpr::Kind::Pow: {
      BoolExpr e = r.exponent();
      for (const auto& [x, bit] : bits) e = bsubst(e, x, BoolExpr::constant(bit));
      return RExpr::pow(rsubst_bits(r.base(), bits), std::move(e));
    }
    case RExpr::Kind::Mul:
      return RExpr::mul(rsubst_bits(r.lhs(), bits), rsubst_bits(r.rhs(), bits));
    case RExpr::Kind::Add:
      return RExpr::add(rsubst_bits(r.lhs(), bits), rsubst_bits(r.rhs(), bits));
  }
  throw Error("unreachable");
}

RExpr rrename(const RExpr& r, const std::unordered_map<std::uint32_t, Var>& renaming) {
  if (r.free_vars().empty()) return r;
  switch (r.kind()) {
    case RExpr::Kind::Const:
      return r;
    case RExpr::Kind::Pow:
      return RExpr::pow(rrename(r.base(), renaming), brename(r.exponent(), renaming));
    case RExpr::Kind::Mul:
      return RExpr::mul(rrename(r.lhs(), renaming), rrename(r.rhs(), renaming));
    case RExpr::Kind::Add:
      return RExpr::add(rrename(r.lhs(), renaming), rrename(r.rhs(), renaming));
  }
  throw Error("unreachable");
}

std::vector<RExpr> flatten_product(const RExpr& r) {
  std::vector<RExpr> out;
  std::vector<RExpr> stack{r};
  while (!stack.empty()) {
    RExpr top = stack.back();
    stack.pop_back();
    if (top.kind() == RExpr::Kind::Mul) {
      stack.push_back(top.rhs());
      stack.push_back(top.lhs());
    } else {
      out.push_back(top);
    }
  }
  return out;
}

std::string to_string(const RExpr& r, const VarNamer& name) {
  switch (r.kind()) {
    case RExpr::Kind::Const:
      return r.value().to_string();
    case RExpr::Kind::Pow:
      return "[" + to_string(r.base(), name) + "]^{" + to_string(r.exponent(), name) + "}";
    case RExpr::Kind::Mul:
      return to_string(r.lhs(), name) + " * " + to_string(r.rhs(), name);
    case RExpr::Kind::Add:
      return "(" + to_string(r.lhs(), name) + " + " + to_string(r.rhs(), name) + ")";
  }
  return "?";
}

RExpr table_to_rexpr(const NormalTable& table) {
  const std::size_t m = table.vars.size();
  if (table.entries.size() != (std::size_t{1} << m)) {
    throw InvalidPathSum("normal table has " + std::to_string(table.entries.size()) + " entries for " +
                         std::to_string(m) + " variables");
  }
  std::vector<BoolExpr> vars;
  vars.reserve(m);
  for (Var v : table.vars) vars.push_back(BoolExpr::var(v));
  std::vector<RExpr> factors;
  factors.reserve(table.entries.size());
  for (std::size_t index = 0; index < table.entries.size(); ++index) {
    std::vector<BoolExpr> bits;
    bits.reserve(m);
    for (std::size_t j = 0; j < m; ++j) bits.push_back(BoolExpr::constant((index >> (m - 1 - j)) & 1));
    factors.push_back(RExpr::pow(RExpr::constant(table.entries[index]), eq_indicator(bits, vars)));
  }
  return RExpr::product(factors, table.entries.front().ring());
}

RExpr lift(const BoolExpr& f, const Ring& ring) { return RExpr::pow(RExpr::constant(ring.zero()), bnot(f)); }

RExpr phase_to_amplitude(std::span<const PhaseTerm> polynomial, unsigned k, const Ring& ring) {
  if (k > 3) throw Unsupported("root of unity of order 2^" + std::to_string(k) + " is not supported");
  if (k >= 2 && !ring.has_omega()) {
    throw Unsupported("root of unity of order 2^" + std::to_string(k) + " is not an element of " + ring.name());
  }
  const std::uint32_t order = 1u << k;
  const int step = 8 / static_cast<int>(order);
  std::vector<RExpr> factors;
  for (const auto& term : polynomial) {
    std::uint32_t c = term.coefficient % order;
    if (c == 0) continue;
    RingElem zeta_c = ring.omega_pow(step * static_cast<int>(c));
    factors.push_back(RExpr::pow(RExpr::constant(zeta_c), BoolExpr::from_monomials({term.monomial})));
  }
  return RExpr::product(factors, ring);
}

}  // namespace pathsum
