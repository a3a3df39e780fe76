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
#include <map>
#include <optional>
#include <vector>

#include "pathsum/boolexpr.hpp"
#include "pathsum/rexpr.hpp"
#include "pathsum/ring.hpp"

namespace pathsum::detail {

/// Z8-valued multilinear polynomial: ω^{P} with P = Σ c_m·m mod 8.
using Phase = std::map<Monomial, std::uint8_t>;

struct Atom {
  RingElem base;
  BoolExpr exponent;
};

/// An amplitude read as scalar · ω^{P} · Π base^{exponent} · Π opaque, with
/// powers distributed over products. In rings without ω the phase only
/// carries multiples of 4.
struct Factored {
  RingElem scalar;
  Phase phase;
  std::vector<Atom> atoms;
  std::vector<RExpr> opaque;
};

Monomial monomial_union(const Monomial& a, const Monomial& b);

/// k with a = ω^k, if any.
std::optional<unsigned> root_index(const RingElem& a);

/// Adds c·lift(f)·times to `phase`, lift(f) being the integer-valued lift of
/// f reduced mod 8.
void add_lift(Phase& phase, unsigned c, const BoolExpr& f, const Monomial& times = {});

Factored factor_amplitude(const RExpr& r);
RExpr rebuild(const Factored& f, const Ring& ring);

/// Q with P = y·Q + (terms without y).
Phase part_of(const Phase& phase, Var y);
void drop_part(Phase& phase, Var y);
bool phase_mentions(const Phase& phase, Var x);
/// Atoms or opaque factors mention x.
bool others_mention(const Factored& f, Var x);

/// The Boolean F with Q = 4F, when every coefficient is 0 or 4.
std::optional<BoolExpr> as_boolean(const Phase& q);

void substitute(Factored& f, Var x, const BoolExpr& g);

}  // namespace pathsum::detail
