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

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "cfgpoly/cert.hpp"
#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/configuration.hpp"
#include "cfgpoly/ideals.hpp"

namespace cfgpoly {

struct FamilyParams {
  Rat a1 = 1;
  Rat a2 = 1;
  Rat b1 = 1;
  Rat b2 = 1;

  Rat m() const { return a1 / b1; }
};

// The normalized 4 x 6 matrix
//   1 0 0 0 1  1
//   0 1 0 0 a1 b1
//   0 0 1 0 a2 0
//   0 0 0 1 0  b2
// Throws kZeroParameter if a1 a2 b1 b2 = 0.
Configuration family_config(const FamilyParams& p);

// Q_m over y1..y6; throws kZeroM for m = 0.
SymbolicForm q_m(const Rat& m);
Poly psi_m(const Rat& m);

// psi_A(x) = a1^2 a2^2 b2^2 psi_m(ell x) with
//   y1 = x1 + x5 + x6,        y2 = (x2 + a1^2 x5 + b1^2 x6) / a1^2,
//   y3 = (x3 + a2^2 x5) / a2^2, y4 = (x4 + b2^2 x6) / b2^2,
//   y5 = x5,                  y6 = b1 x6 / a1.
ContactCert lemma54_cert(const FamilyParams& p);

// psi_m ~ psi_{1/m}: back through lemma54_cert(m, 1, 1, 1), swap x3 <-> x4 and
// x5 <-> x6, then forward through lemma54_cert(1, 1, m, 1).
ContactCert inversion_cert(const Rat& m);

// The three ideals whose intersection is I_2(Q_m), over y1..y6.
std::array<Ideal, 3> prime_components(const Rat& m);

struct FamilyEvidence {
  Rat m;
  bool intersection_equal = false;
  // (I_2(Q_m) : y4) : y3 coincides with the first component.
  bool first_component_recovered = false;
  // Its linear part, normalized to y1-coefficient 1.
  LinearForm linear_form;
  bool linear_shape_ok = false;  // (1, m, 0, 0, -(m+1), -(m+1))
  Rat recovered_m;
  std::pair<Rat, Rat> invariant;  // {m, 1/m} as (min, max)
};

struct FamilyEvidenceReport {
  std::vector<FamilyEvidence> entries;  // sorted by m
  // For every pair m != m': recovered invariants coincide iff m m' = 1.
  bool invariants_separate = true;
  bool all_ok = false;
};

// Throws kZeroM if some m is zero.
FamilyEvidenceReport family_evidence_report(std::vector<Rat> m_list);
FamilyEvidence family_evidence(const Rat& m);

// family_config(m, 1, 1, 1) followed by k coloops labelled 7, 8, ...
Configuration coloop_tower(const Rat& m, std::size_t k);
// psi_m * y7 ... y_{6+k} over y1..y_{6+k}.
Poly psi_m_k(const Rat& m, std::size_t k);
// lemma54_cert(m, 1, 1, 1) extended by the identity on the coloop variables.
ContactCert tower_cert(const Rat& m, std::size_t k);

}  // namespace cfgpoly
