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

#include "pathsum/boolexpr.hpp"

#include <algorithm>
#include <iterator>

#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

// Sorts a list of canonical monomials and cancels equal pairs.
std::vector<Monomial> cancel_pairs(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end());
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(monomials[i]));
    i = j;
  }
  return out;
}

Monomial monomial_union(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BoolExpr BoolExpr::one() { return BoolExpr(std::vector<Monomial>{Monomial{}}); }

BoolExpr BoolExpr::var(Var x) { return BoolExpr(std::vector<Monomial>{Monomial{x}}); }

BoolExpr BoolExpr::from_monomials(std::vector<Monomial> monomials) {
  for (auto& m : monomials) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  return BoolExpr(cancel_pairs(std::move(monomials)));
}

std::optional<bool> BoolExpr::constant_value() const {
  if (is_zero()) return false;
  if (is_one()) return true;
  return std::nullopt;
}

std::optional<Var> BoolExpr::as_var() const {
  if (monomials_.size() == 1 && monomials_[0].size() == 1) return monomials_[0][0];
  return std::nullopt;
}

bool BoolExpr::depends_on(Var x) const {
  for (const auto& m : monomials_) {
    if (std::binary_search(m.begin(), m.end(), x)) return true;
  }
  return false;
}

std::vector<Var> BoolExpr::free_vars() const {
  std::vector<Var> out;
  for (const auto& m : monomials_) out.insert(out.end(), m.begin(), m.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BoolExpr bxor(const BoolExpr& f, const BoolExpr& g) {
  std::vector<Monomial> out;
  out.reserve(f.size() + g.size());
  std::set_symmetric_difference(f.monomials_.begin(), f.monomials_.end(), g.monomials_.begin(),
                                g.monomials_.end(), std::back_inserter(out));
  return BoolExpr(std::move(out));
}

BoolExpr bmul(const BoolExpr& f, const BoolExpr& g) {
  if (f.is_zero() || g.is_zero()) return BoolExpr::zero();
  if (f.is_one()) return g;
  if (g.is_one()) return f;
  std::vector<Monomial> products;
  products.reserve(f.size() * g.size());
  for (const auto& a : f.monomials_) {
    for (const auto& b : g.monomials_) products.push_back(monomial_union(a, b));
  }
  return BoolExpr(cancel_pairs(std::move(products)));
}

BoolExpr bnot(const BoolExpr& f) { return bxor(BoolExpr::one(), f); }

Cofactors split_on(const BoolExpr& f, Var x) {
  std::vector<Monomial> with;
  std::vector<Monomial> without;
  for (const auto& m : f.monomials()) {
    auto it = std::lower_bound(m.begin(), m.end(), x);
    if (it != m.end() && *it == x) {
      Monomial rest;
      rest.reserve(m.size() - 1);
      rest.insert(rest.end(), m.begin(), it);
      rest.insert(rest.end(), std::next(it), m.end());
      with.push_back(std::move(rest));
    } else {
      without.push_back(m);
    }
  }
  // Removing x from distinct monomials that all contained x keeps them
  // distinct, so only sorting is needed.
  return {BoolExpr::from_monomials(std::move(with)), BoolExpr::from_monomials(std::move(without))};
}

BoolExpr bsubst(const BoolExpr& f, Var x, const BoolExpr& g) {
  if (!f.depends_on(x)) return f;
  auto [with, without] = split_on(f, x);
  return bxor(bmul(g, with), without);
}

BoolExpr brename(const BoolExpr& f, const std::unordered_map<std::uint32_t, Var>& renaming) {
  std::vector<Monomial> out;
  out.reserve(f.size());
  for (const auto& m : f.monomials()) {
    Monomial r;
    r.reserve(m.size());
    for (Var v : m) {
      auto it = renaming.find(v.id);
      r.push_back(it == renaming.end() ? v : it->second);
    }
    out.push_back(std::move(r));
  }
  return BoolExpr::from_monomials(std::move(out));
}

void Assignment::set(Var x, bool value) {
  if (x.id >= bits_.size()) bits_.resize(x.id + 1, -1);
  bits_[x.id] = value ? 1 : 0;
}

void Assignment::unset(Var x) {
  if (x.id < bits_.size()) bits_[x.id] = -1;
}

bool Assignment::get(Var x) const {
  if (!has(x)) throw UnassignedVariable("unassigned variable " + default_var_name(x));
  return bits_[x.id] == 1;
}

bool beval(const BoolExpr& f, const Assignment& sigma) {
  bool acc = false;
  for (const auto& m : f.monomials()) {
    bool term = true;
    for (Var v : m) {
      // Every variable is looked up so unassigned ones are always reported.
      term = sigma.get(v) && term;
    }
    acc ^= term;
  }
  return acc;
}

BoolExpr eq_indicator(std::span<const BoolExpr> u, std::span<const BoolExpr> v) {
  if (u.size() != v.size()) {
    throw ArityMismatch("eq_indicator: lengths " + std::to_string(u.size()) + " and " +
                        std::to_string(v.size()));
  }
  BoolExpr acc = BoolExpr::one();
  for (std::size_t i = 0; i < u.size() && !acc.is_zero(); ++i) {
    acc = bmul(acc, bxor(u[i], bnot(v[i])));
  }
  return acc;
}

std::string default_var_name(Var x) { return "x" + std::to_string(x.id); }

std::string to_string(const BoolExpr& f, const VarNamer& name) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& m : f.monomials()) {
    if (!out.empty()) out += " + ";
    if (m.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += "*";
      out += name(m[i]);
    }
  }
  return out;
}

}  // namespace pathsum
