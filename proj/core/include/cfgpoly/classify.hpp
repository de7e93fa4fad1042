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
#include <string_view>
#include <vector>

#include "cfgpoly/cert.hpp"
#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/configuration.hpp"

namespace cfgpoly {

enum class ClassId {
  kRank0,           // psi = 1
  kRank1,           // y1
  kProduct2,        // y1 y2
  kConic,           // y1 y2 - y3^2
  kR3D3,            // y1 y2 y3
  kR4OneZero,       // (y1 y2 - y4^2) y3
  kR4AllNonzero,    // det Q_{1,1}, irreducible cubic in 4 variables
  kR5Dependent,     // det Q_0
  kR5Independent,   // det Q_{1,1} in 5 variables
  kR6Generic,       // generic symmetric 3 x 3 determinant
  kProduct,         // y1 ... yr, any rank
  kCompleteGraph,   // Kirchhoff polynomial of K_{r+1}, any rank
};

std::string_view class_name(ClassId id);
std::optional<ClassId> parse_class_id(std::string_view name);

struct ClassLabel {
  std::size_t rank = 0;
  std::size_t r2 = 0;
  ClassId id = ClassId::kRank0;
  Poly normal_form;
  // psi_W ~ normal_form, psi_W in the variables of W.
  std::optional<ContactCert> cert;

  // r2 = 4: psi splits off a linear factor iff the matroid is disconnected.
  std::optional<bool> matroid_connected;
  // r2 = 5: the dependent branch has a non-uniform matroid, and its
  // submaximal minors ideal is the pull-back of the two-component
  // intersection <y1y2-y4^2, y3, y5> and <y1y3-y5^2, y2, y4>.
  std::optional<bool> matroid_uniform;
  std::optional<bool> two_component_minors;
  bool cross_check_ok = true;
};

struct ClassifyOptions {
  // Run the Groebner-based check on I_2 for r2 = 5.
  bool ideal_cross_check = true;
};

// Symmetric matrix of linear forms in y1..yk whose determinant is the normal
// form of the class. Not available for kProduct and kCompleteGraph.
SymbolicForm normal_form_matrix(ClassId id);
Poly normal_form(ClassId id);

// A configuration that lands in the class (normalized, already reduced).
Configuration class_representative(ClassId id);

// Certificate psi_q ~ det n from a congruence: with R = t q t^T, every y_k
// must occur alone as some entry of n, and substituting y_k := that entry of R
// must turn n into R entrywise. Then det q = det(t)^-2 det n(ell x).
// Throws kInternal if R does not have the shape of n.
ContactCert congruence_cert(const SymbolicForm& q, const RatMatrix& t, const SymbolicForm& n);

// The four substitutions S1..S4 taking the triangle polynomial
// x1x2 + x2x3 + x3x1 to x1x2 - x3^2: shift, completing the square, scaling
// and a hyperbolic rotation. The product S1 S2 S3 S4 is the full change.
std::vector<RatMatrix> conic_steps();

// Certificate for (y1 y2 - y3^2) ~ (triangle polynomial): phi in nf_vars, psi in
// k3_vars.
ContactCert conic_cert(const VarSet& nf_vars, const VarSet& k3_vars);

// Throws kWrongRank unless rank 2.
ClassLabel classify_rank2(const Configuration& w);
// Throws kWrongRank unless rank 3.
ClassLabel classify_rank3(const Configuration& w, const ClassifyOptions& opts = {});
// Ranks 0..3; throws kWrongRank above.
ClassLabel classify(const Configuration& w, const ClassifyOptions& opts = {});

// Product class when r2 = r, complete-graph class when r2 = C(r + 1, 2).
std::optional<ClassLabel> extremal_class(const Configuration& w);

// Kirchhoff polynomial of K_{r+1} with edges y1.. in the order used by
// cone_graph_model: {vi, vj} for i < j, then {vi, v0}.
Poly complete_graph_polynomial(std::size_t r);

}  // namespace cfgpoly
