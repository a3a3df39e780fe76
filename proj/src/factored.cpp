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

#include "factored.hpp"

#include <algorithm>

namespace pathsum::detail {

Monomial monomial_union(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<unsigned> root_index(const RingElem& a) {
  const Ring& ring = a.ring();
  if (a.is_one()) return 0u;
  if (a == ring.from_int(-1)) return 4u;
  if (!ring.has_omega()) return std::nullopt;
  for (unsigned k = 1; k < 8; ++k) {
    if (k != 4 && a == ring.omega_pow(static_cast<int>(k))) return k;
  }
  return std::nullopt;
}

namespace {

void bump(Phase& phase, const Monomial& m, unsigned c) {
  c %= 8;
  if (c == 0) return;
  auto [it, inserted] = phase.try_emplace(m, 0);
  it->second = static_cast<std::uint8_t>((it->second + c) % 8);
  if (it->second == 0) phase.erase(it);
}

void factor_into(Factored& out, const RExpr& r, const BoolExpr& acc) {
  if (acc.is_zero()) return;
  switch (r.kind()) {
    case RExpr::Kind::Const: {
      if (acc.is_one()) {
        out.scalar *= r.value();
      } else if (auto k = root_index(r.value())) {
        add_lift(out.phase, *k, acc);
      } else {
        out.atoms.push_back({r.value(), acc});
      }
      return;
    }
    case RExpr::Kind::Pow:
      factor_into(out, r.base(), acc * r.exponent());
      return;
    case RExpr::Kind::Mul:
      factor_into(out, r.lhs(), acc);
      factor_into(out, r.rhs(), acc);
      return;
    case RExpr::Kind::Add:
      out.opaque.push_back(acc.is_one() ? r : RExpr::pow(r, acc));
      return;
  }
}

}  // namespace

void add_lift(Phase& phase, unsigned c, const BoolExpr& f, const Monomial& times) {
  c %= 8;
  if (c == 0) return;
  const auto& ms = f.monomials();
  // f = ⊕ m_i lifts to Σ_S (−2)^{|S|−1} Π_{i∈S} m_i; subsets above size 3 vanish mod 8.
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Monomial mi = monomial_union(ms[i], times);
    bump(phase, mi, c);
    if (c % 2 != 0 || c == 2 || c == 6) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        Monomial mij = monomial_union(mi, ms[j]);
        bump(phase, mij, 6 * c);
        if (c % 2 != 0) {
          for (std::size_t k = j + 1; k < ms.size(); ++k) bump(phase, monomial_union(mij, ms[k]), 4 * c);
        }
      }
    }
  }
}

Factored factor_amplitude(const RExpr& r) {
  Factored out{r.ring().one(), {}, {}, {}};
  factor_into(out, r, BoolExpr::one());
  return out;
}

RExpr rebuild(const Factored& f, const Ring& ring) {
  if (f.scalar.is_zero()) return RExpr::constant(ring.zero());
  RingElem scalar = f.scalar;
  std::vector<Atom> atoms;
  for (const auto& a : f.atoms) {
    if (a.exponent.is_zero() || a.base.is_one()) continue;
    if (a.exponent.is_one()) {
      scalar *= a.base;
      continue;
    }
    atoms.push_back(a);
  }
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    std::string sa = a.base.to_string();
    std::string sb = b.base.to_string();
    if (sa != sb) return sa < sb;
    return a.exponent < b.exponent;
  });

  std::vector<Monomial> sign;
  std::vector<std::pair<unsigned, Monomial>> residual;
  for (const auto& [m, c] : f.phase) {
    if (m.empty()) {
      scalar *= ring.omega_pow(c);
      continue;
    }
    if (c & 4) sign.push_back(m);
    if (c % 4 != 0) residual.emplace_back(c % 4, m);
  }
  if (scalar.is_zero()) return RExpr::constant(ring.zero());
  std::vector<RExpr> factors;
  if (!scalar.is_one()) factors.push_back(RExpr::constant(scalar));
  BoolExpr sign_expr = BoolExpr::from_monomials(sign);
  if (!sign_expr.is_zero()) factors.push_back(RExpr::pow(RExpr::constant(ring.from_int(-1)), sign_expr));
  for (const auto& [c, m] : residual) {
    factors.push_back(RExpr::pow(RExpr::constant(ring.omega_pow(static_cast<int>(c))), BoolExpr::from_monomials({m})));
  }
  for (const auto& a : atoms) factors.push_back(RExpr::pow(RExpr::constant(a.base), a.exponent));
  factors.insert(factors.end(), f.opaque.begin(), f.opaque.end());
  return RExpr::product(factors, ring);
}

Phase part_of(const Phase& phase, Var y) {
  Phase out;
  for (const auto& [m, c] : phase) {
    if (!std::binary_search(m.begin(), m.end(), y)) continue;
    Monomial rest;
    for (Var v : m) {
      if (v != y) rest.push_back(v);
    }
    bump(out, rest, c);
  }
  return out;
}

void drop_part(Phase& phase, Var y) {
  std::erase_if(phase, [y](const auto& kv) { return std::binary_search(kv.first.begin(), kv.first.end(), y); });
}

bool phase_mentions(const Phase& phase, Var x) {
  return std::any_of(phase.begin(), phase.end(),
                     [x](const auto& kv) { return std::binary_search(kv.first.begin(), kv.first.end(), x); });
}

bool others_mention(const Factored& f, Var x) {
  for (const auto& a : f.atoms) {
    if (a.exponent.depends_on(x)) return true;
  }
  for (const auto& r : f.opaque) {
    if (r.depends_on(x)) return true;
  }
  return false;
}

std::optional<BoolExpr> as_boolean(const Phase& q) {
  std::vector<Monomial> ms;
  for (const auto& [m, c] : q) {
    if (c != 4) return std::nullopt;
    ms.push_back(m);
  }
  return BoolExpr::from_monomials(std::move(ms));
}

void substitute(Factored& f, Var x, const BoolExpr& g) {
  Phase touched = part_of(f.phase, x);
  drop_part(f.phase, x);
  for (const auto& [m, c] : touched) add_lift(f.phase, c, g, m);
  for (auto& a : f.atoms) a.exponent = bsubst(a.exponent, x, g);
  for (auto& r : f.opaque) r = rsubst(r, x, g);
}

}  // namespace pathsum::detail
