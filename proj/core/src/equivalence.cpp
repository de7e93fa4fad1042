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

#include "cfgpoly/equivalence.hpp"

#include <map>

#include "cfgpoly/combinatorics.hpp"
#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/error.hpp"

namespace cfgpoly {

ReductionReport reduce_variables(const Configuration& w) {
  ReductionReport rep;
  rep.original = w;
  const std::size_t r = w.rank();
  const std::size_t n = w.size();
  rep.bound = binomial(r + 1, 2);
  if (r == 0) {
    rep.reduced = Configuration({}, RatMatrix());
    rep.cert = make_cert(RatMatrix::identity(n), 1, w.variables(), VarSet());
    return rep;
  }
  const HadamardProfile prof = hadamard_dims(w, 2);
  rep.f = prof.filtration[1];
  rep.nu = rep.f.size();
  rep.reduced = restrict(w, rep.f);

  const RatMatrix h = hadamard_power(w, 2).basis();
  const RatMatrix v = invert(h.select_columns(rep.f)) * h;
  rep.cert = make_cert(complete_to_invertible(v), 1, w.variables(), rep.reduced.variables());
  return rep;
}

RatMatrix derivation_kernel(const Poly& psi) {
  const std::size_t n = psi.vars().size();
  std::map<Exponents, std::size_t, GrevlexGreater> rows;
  std::vector<Poly> partials;
  for (std::size_t e = 0; e < n; ++e) {
    partials.push_back(derivative(psi, e));
    for (const auto& [m, c] : partials.back().terms()) rows.emplace(m, rows.size());
  }
  RatMatrix jac(rows.size(), n);
  for (std::size_t e = 0; e < n; ++e) {
    for (const auto& [m, c] : partials[e].terms()) jac(rows.at(m), e) = c;
  }
  return kernel_basis(jac);
}

std::optional<DropResult> try_drop_variable(const Configuration& w) {
  const std::size_t n = w.size();
  const Poly psi = psi_det(w);
  const RatMatrix kernel = derivation_kernel(psi);
  if (kernel.rows() == 0) return std::nullopt;

  std::size_t e = n;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
      if (!is_zero(kernel(k, c))) {
        e = c;
        row = k;
        break;
      }
    }
  }
  std::vector<Rat> v(kernel.row(row).begin(), kernel.row(row).end());
  const Rat pivot = v[e];
  for (auto& c : v) c /= pivot;

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != e) keep.push_back(i);
  }
  DropResult out;
  out.element = e;
  out.reduced = restrict(w, keep);
  if (out.reduced.rank() != w.rank()) {
    throw Error(Errc::kInternal, "try_drop_variable: element carried by the kernel is a coloop");
  }

  // psi(t) = psi(t - t_e v), and the right side no longer involves x_e; it is
  // the form of the projected basis rows, a square multiple of the canonical
  // psi of W restricted to E \ {e}.
  const Poly projected = psi_of_matrix(w.basis().select_columns(keep), out.reduced.variables());
  const Poly canonical = psi_det(out.reduced);
  const Rat lambda = projected.leading_coefficient() / canonical.leading_coefficient();

  RatMatrix ell(n, n);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    ell(k, keep[k]) = 1;
    ell(k, e) = -v[keep[k]];
  }
  ell(n - 1, e) = 1;
  out.cert = make_cert(std::move(ell), lambda, w.variables(), out.reduced.variables());
  return out;
}

}  // namespace cfgpoly
