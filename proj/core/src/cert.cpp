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

#include "cfgpoly/cert.hpp"

#include <algorithm>
#include <string>

#include "cfgpoly/error.hpp"

namespace cfgpoly {

namespace {

// Coordinate names for a certificate side: the given names followed by
// placeholders that cannot clash with user variables.
VarSet coordinates(const VarSet& named, std::size_t p) {
  std::vector<std::string> names = named.names();
  for (std::size_t k = names.size(); k < p; ++k) names.push_back("#" + std::to_string(k + 1));
  return VarSet(std::move(names));
}

// Lifts p into the coordinates by name, ignoring variables that do not occur.
Poly to_coordinates(const Poly& p, const VarSet& coords, const char* side) {
  Poly out(coords);
  std::vector<std::size_t> where(p.vars().size(), coords.size());
  std::vector<bool> used(p.vars().size(), false);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (!used[i]) continue;
    auto idx = coords.index_of(p.vars()[i]);
    if (!idx) {
      throw Error(Errc::kDimensionMismatch, std::string("check_cert: ") + side +
                                                " variable '" + p.vars()[i] +
                                                "' is not covered by the certificate");
    }
    where[i] = *idx;
  }
  Exponents t(coords.size());
  for (const auto& [e, c] : p.terms()) {
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t[where[i]] += e[i];
    }
    out.add_term(t, c);
  }
  return out;
}

}  // namespace

ContactCert make_cert(RatMatrix ell, Rat lambda, VarSet source_vars, VarSet target_vars) {
  if (!ell.is_square() || source_vars.size() > ell.rows() || target_vars.size() > ell.rows()) {
    throw Error(Errc::kDimensionMismatch, "certificate: ell must be p x p with p >= |vars|");
  }
  if (is_zero(lambda)) throw Error(Errc::kInvalidInput, "certificate: lambda must be nonzero");
  if (ell.rows() > 0) (void)invert(ell);
  ContactCert c;
  c.p = ell.rows();
  c.ell = std::move(ell);
  c.lambda = std::move(lambda);
  c.source_vars = std::move(source_vars);
  c.target_vars = std::move(target_vars);
  return c;
}

ContactCert identity_cert(const VarSet& source_vars, const VarSet& target_vars) {
  const std::size_t p = std::max(source_vars.size(), target_vars.size());
  return make_cert(RatMatrix::identity(p), 1, source_vars, target_vars);
}

bool check_cert(const Poly& phi, const Poly& psi, const ContactCert& cert) {
  if (!cert.ell.is_square() || cert.ell.rows() != cert.p || cert.source_vars.size() > cert.p ||
      cert.target_vars.size() > cert.p) {
    throw Error(Errc::kDimensionMismatch, "check_cert: malformed certificate");
  }
  if (is_zero(cert.lambda)) return false;
  if (cert.p > 0 && is_zero(determinant(cert.ell))) {
    throw Error(Errc::kSingularMatrix, "check_cert: ell is singular");
  }
  const VarSet xs = coordinates(cert.source_vars, cert.p);
  const VarSet ys = coordinates(cert.target_vars, cert.p);
  const Poly lhs = to_coordinates(phi, xs, "source");
  const Poly rhs_target = to_coordinates(psi, ys, "target");
  if (cert.p == 0) return lhs.terms() == (rhs_target * cert.lambda).terms();
  // Cheap rejection before the substitution: a linear change preserves degrees.
  const Homogeneity h1 = is_homogeneous(lhs);
  const Homogeneity h2 = is_homogeneous(rhs_target);
  if (h1.homogeneous && h2.homogeneous && !lhs.is_zero() && !rhs_target.is_zero() &&
      h1.degree != h2.degree) {
    return false;
  }
  const Poly rhs = substitute_linear(rhs_target, cert.ell, xs) * cert.lambda;
  return lhs == rhs;
}

Poly pull_back(const Poly& psi, const ContactCert& c) {
  const VarSet xs = coordinates(c.source_vars, c.p);
  return substitute_linear(to_coordinates(psi, coordinates(c.target_vars, c.p), "target"), c.ell,
                           xs);
}

ContactCert pad_cert(const ContactCert& c, std::size_t p) {
  if (p < c.p) throw Error(Errc::kDimensionMismatch, "pad_cert: cannot shrink a certificate");
  ContactCert out = c;
  out.ell = c.ell.pad_identity(p);
  out.p = p;
  return out;
}

ContactCert compose_certs(const ContactCert& c1, const ContactCert& c2) {
  const std::size_t common = std::min(c1.target_vars.size(), c2.source_vars.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (c1.target_vars[i] != c2.source_vars[i]) {
      throw Error(Errc::kDimensionMismatch, "compose_certs: intermediate variables disagree ('" +
                                                c1.target_vars[i] + "' vs '" +
                                                c2.source_vars[i] + "')");
    }
  }
  const std::size_t p = std::max(c1.p, c2.p);
  const RatMatrix l1 = c1.ell.pad_identity(p);
  const RatMatrix l2 = c2.ell.pad_identity(p);
  return make_cert(l2 * l1, c1.lambda * c2.lambda, c1.source_vars, c2.target_vars);
}

ContactCert invert_cert(const ContactCert& c) {
  RatMatrix inv = c.p > 0 ? invert(c.ell) : c.ell;
  return make_cert(std::move(inv), Rat(1) / c.lambda, c.target_vars, c.source_vars);
}

}  // namespace cfgpoly
