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
#include <optional>
#include <vector>

#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/groebner.hpp"
#include "cfgpoly/poly.hpp"

namespace cfgpoly {

// Generators over a fixed VarSet; all ideal operations use grevlex.
struct Ideal {
  VarSet vars;
  std::vector<Poly> gens;

  Ideal() = default;
  explicit Ideal(VarSet v) : vars(std::move(v)) {}
  // Throws kVarSetMismatch if a generator lives over another VarSet.
  Ideal(VarSet v, std::vector<Poly> g);
};

// Ideal whose generators are the reduced Groebner basis.
Ideal groebner(const Ideal& i, const GroebnerOptions& opts = {});

bool ideal_equal(const Ideal& a, const Ideal& b);
bool contains(const Ideal& i, const Poly& f);
// Every generator of b lies in a.
bool contains(const Ideal& a, const Ideal& b);

// a and b must share a VarSet. Computed as the t-free part of
// <t a, (1 - t) b> under an order eliminating t.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);

// I : f, via (I intersected with <f>) / f.
Ideal quotient(const Ideal& i, const Poly& f);

// Exact quotient p / f; throws kInvalidInput if f does not divide p.
Poly divide_exact(const Poly& p, const Poly& f);

Ideal product(const Ideal& a, const Ideal& b);

// All (r-1) x (r-1) minors of q.
Ideal submaximal_minors_ideal(const SymbolicForm& q);

// Basis of the linear forms in a homogeneous ideal: the degree-1 elements of
// its reduced Groebner basis.
std::vector<LinearForm> linear_part(const Ideal& i);

// Number of reduced Groebner basis elements of each degree (index = degree).
std::vector<std::size_t> degree_counts(const Ideal& i);

// Hilbert function dim_K (K[x]/I)_d for d = 0..d_max, from the leading
// monomials of the reduced basis.
std::vector<std::size_t> hilbert_function(const Ideal& i, unsigned d_max);

struct Fingerprint {
  // Lexicographically least degree_counts over all orderings of the variables.
  std::vector<std::size_t> degree_counts;
  // Hilbert function of K[x]/I in degrees 0..5 (independent of coordinates).
  std::vector<std::size_t> hilbert;
  // Dimension of the space of linear forms in I : J, minimized over the
  // variables J = x_e (sorted ascending).
  std::vector<std::size_t> colon_linear_dims;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Necessary-condition separator for the submaximal minors ideal of q. Throws
// kUnsupportedShape unless q is 3 x 3 or a 4 x 4 form in 6 variables.
Fingerprint separating_invariant(const SymbolicForm& q);

}  // namespace cfgpoly
