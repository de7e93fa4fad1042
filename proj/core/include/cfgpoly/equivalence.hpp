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

#include "cfgpoly/cert.hpp"
#include "cfgpoly/configuration.hpp"

namespace cfgpoly {

struct ReductionReport {
  Configuration original;
  Configuration reduced;
  std::vector<std::size_t> f;  // indices into original.ground_set()
  std::size_t nu = 0;
  ContactCert cert;            // psi_original ~ psi_reduced
  std::size_t bound = 0;       // C(r + 1, 2)
};

// Restricts W to F = F_2 of the greedy filtration. Every product w^i * w^j
// is determined by its F-coordinates, so with H a basis of W^{*2} and
// V = (H_F)^{-1} H one gets psi_W(x) = psi_{W_F}(V x) on the nose (lambda = 1).
ReductionReport reduce_variables(const Configuration& w);

struct DropResult {
  std::size_t element = 0;
  Configuration reduced;  // W restricted to E \ {element}
  ContactCert cert;       // psi_W ~ psi_reduced
};

// Looks for a constant vector v != 0 with sum_e v_e d(psi_W)/dx_e = 0. For the
// first element e (in ground-set order) carried by such a v, psi_W is
// invariant under translation along v, so x_e can be eliminated.
std::optional<DropResult> try_drop_variable(const Configuration& w);

// Basis of {v : sum_e v_e d(psi)/dx_e = 0}, one row per vector.
RatMatrix derivation_kernel(const Poly& psi);

}  // namespace cfgpoly
