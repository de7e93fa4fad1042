// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "cfgpoly/poly.hpp"

namespace cfgpoly {

enum class MonomialOrder {
  // Graded reverse lexicographic with the first variable largest.
  kGrevlex,
  // Degree in the first variable decides, ties broken by grevlex. Eliminates
  // the first variable.
  kEliminateFirst,
};

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::kGrevlex;
  // Upper bound on S-polynomials reduced; kBudgetExceeded beyond it.
  std::size_t pair_budget = 200000;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Reduced Groebner basis: monic, inter-reduced, sorted by increasing leading
// monomial. All generators must share one VarSet of at most 16 variables. The
// zero ideal gives an empty basis and the unit ideal gives {1}.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const GroebnerOptions& opts = {},
                                 GroebnerStats* stats = nullptr);

// Remainder of f under full reduction by `basis`.
Poly reduce(const Poly& f, const std::vector<Poly>& basis,
            MonomialOrder order = MonomialOrder::kGrevlex);

// Buchberger's criterion without shortcuts: every S-polynomial of `basis`
// reduces to zero.
bool verify_groebner(const std::vector<Poly>& basis, MonomialOrder order = MonomialOrder::kGrevlex);

// Leading monomial of a nonzero polynomial under `order`.
Exponents leading_monomial(const Poly& p, MonomialOrder order);

}  // namespace cfgpoly
