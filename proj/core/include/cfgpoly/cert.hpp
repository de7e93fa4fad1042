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

#include "cfgpoly/matrix.hpp"
#include "cfgpoly/poly.hpp"
#include "cfgpoly/rational.hpp"

namespace cfgpoly {

// Witness that phi and psi are linearly contact equivalent:
//
//   phi(t) = lambda * psi(ell * t),   t in K^p.
//
// phi is read in the coordinates source_vars and psi in target_vars; each list
// names a prefix of the p coordinates and the remaining coordinates are
// redundant variables on which the polynomial does not depend.
struct ContactCert {
  std::size_t p = 0;
  RatMatrix ell;
  Rat lambda = 1;
  VarSet source_vars;
  VarSet target_vars;
};

// Validates and builds a certificate. Throws kDimensionMismatch unless ell is
// square and both VarSets fit in p = ell.rows(), kSingularMatrix if ell is not
// invertible, and kInvalidInput when lambda is zero.
ContactCert make_cert(RatMatrix ell, Rat lambda, VarSet source_vars, VarSet target_vars);

ContactCert identity_cert(const VarSet& source_vars, const VarSet& target_vars);

// True iff phi = lambda * (psi o ell) after lifting both polynomials to p
// coordinates. Variables of phi (psi) that actually occur must belong to
// source_vars (target_vars); otherwise throws kDimensionMismatch.
bool check_cert(const Poly& phi, const Poly& psi, const ContactCert& cert);

// From phi ~ psi (c1) and psi ~ chi (c2) build phi ~ chi. The target names of
// c1 and the source names of c2 must agree on their common prefix.
ContactCert compose_certs(const ContactCert& c1, const ContactCert& c2);

// From phi ~ psi build psi ~ phi.
ContactCert invert_cert(const ContactCert& c);

// psi o ell, expressed in the source coordinates of c (the source names
// followed by placeholders up to p).
Poly pull_back(const Poly& psi, const ContactCert& c);

// Same certificate with ell padded by the identity to p' >= p coordinates.
ContactCert pad_cert(const ContactCert& c, std::size_t p);

}  // namespace cfgpoly
