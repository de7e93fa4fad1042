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
#include <string>
#include <utility>
#include <vector>

#include "cfgpoly/cert.hpp"
#include "cfgpoly/configuration.hpp"
#include "cfgpoly/matrix.hpp"
#include "cfgpoly/poly.hpp"

namespace cfgpoly {

// Symmetric r x r matrix of linear forms over one VarSet.
class SymbolicForm {
 public:
  SymbolicForm() = default;
  SymbolicForm(VarSet vars, std::size_t size);

  // Row-major list of entries; throws kInvalidInput unless it is symmetric.
  static SymbolicForm from_entries(VarSet vars, std::size_t size, std::vector<LinearForm> entries);

  const VarSet& vars() const { return vars_; }
  std::size_t size() const { return size_; }
  const LinearForm& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }
  // Sets (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, LinearForm f);

  // Coefficient matrix C_e = (coefficient of vars[e] in entry (i, j)).
  RatMatrix coefficient_matrix(std::size_t e) const;
  PolyMatrix to_poly_matrix() const;

  friend bool operator==(const SymbolicForm&, const SymbolicForm&) = default;

 private:
  VarSet vars_;
  std::size_t size_ = 0;
  std::vector<LinearForm> entries_;
};

// Q_A with entry (i, j) = sum_e x_e a_ie a_je, from the canonical RREF basis.
SymbolicForm configuration_form(const Configuration& w);
// Same for an explicit matrix whose columns are indexed by vars.
SymbolicForm configuration_form(const RatMatrix& a, const VarSet& vars);

// det Q of the canonical basis.
Poly psi_det(const Configuration& w);
Poly psi_of_matrix(const RatMatrix& a, const VarSet& vars);
Poly form_determinant(const SymbolicForm& q);

// sum over bases B of det(A_B)^2 x^B, from the canonical basis. Throws
// kTooManyBases beyond the enumeration cap.
Poly psi_basis_expansion(const Configuration& w);

// sum over bases B of x^B.
Poly matroid_polynomial(const MatroidView& m);

struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  // Ground-set labels of the edges; "1".."m" when empty.
  std::vector<std::string> edge_labels;
};

struct KirchhoffResult {
  Configuration config;
  Poly psi;
};

// Incidence configuration of g: edge {u, v} with u before v in the vertex list
// gets +1 at u and -1 at v, and the row of the last vertex is deleted. Loop
// edges become loops of the matroid. Throws kDisconnectedGraph if g is not
// connected and kInvalidInput on unknown endpoints or a bad label list.
KirchhoffResult kirchhoff(const GraphSpec& g);

// Columns (w_e^i)_i with first nonzero entry positive, such that
// configuration_form(result, q.vars()) == q. Throws kNotAConfigurationForm if
// some C_e is not of the form w w^T with w rational.
RatMatrix reconstruct_matrix(const SymbolicForm& q);
// Ground-set labels are the variable names with a leading "x" removed from
// names of the form "x<digits>".
Configuration reconstruct_from_form(const SymbolicForm& q);

struct ConeModel {
  GraphSpec graph;
  ContactCert cert;  // psi_W(x) = psi_{G*}(ell x)
};

// When the nonzero products w^i * w^j (i <= j) of the canonical basis are
// linearly independent: G on v1..vr has an edge {vi, vj} for every nonzero
// off-diagonal product and G* is its cone with apex v0 listed last. Edges of
// G* are labelled g1.. (edges of G first, then vi--v0). The substitution
//   g_{ij} = -<x, w^i * w^j>,   g_{i0} = <x, w^i * (w^1 + ... + w^r)>
// turns the reduced Laplacian of G* into Q_W.
std::optional<ConeModel> cone_graph_model(const Configuration& w);

}  // namespace cfgpoly
