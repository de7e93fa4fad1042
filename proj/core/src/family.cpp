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

#include "cfgpoly/family.hpp"

#include <algorithm>

#include "cfgpoly/error.hpp"

namespace cfgpoly {

namespace {

void require_params(const FamilyParams& p) {
  if (is_zero(p.a1) || is_zero(p.a2) || is_zero(p.b1) || is_zero(p.b2)) {
    throw Error(Errc::kZeroParameter, "family parameters must satisfy a1 a2 b1 b2 != 0");
  }
}

void require_m(const Rat& m) {
  if (is_zero(m)) throw Error(Errc::kZeroM, "m must be nonzero");
}

const VarSet& ys() {
  static const VarSet y = VarSet::numbered("y", 6);
  return y;
}

Poly yv(std::size_t i) { return Poly::variable(ys(), i - 1); }

}  // namespace

Configuration family_config(const FamilyParams& p) {
  require_params(p);
  RatMatrix a = RatMatrix::from_ints(
      {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
  a(1, 4) = p.a1;
  a(1, 5) = p.b1;
  a(2, 4) = p.a2;
  a(3, 5) = p.b2;
  return Configuration(a);
}

SymbolicForm q_m(const Rat& m) {
  require_m(m);
  const VarSet& y = ys();
  auto v = [&](std::size_t i) { return LinearForm::variable(y, i - 1); };
  SymbolicForm q(y, 4);
  q.set(0, 0, v(1));
  q.set(1, 1, v(2));
  q.set(2, 2, v(3));
  q.set(3, 3, v(4));
  q.set(0, 1, v(5) + v(6));
  q.set(0, 2, v(5));
  q.set(0, 3, m * v(6));
  q.set(1, 2, v(5));
  q.set(1, 3, v(6));
  return q;
}

Poly psi_m(const Rat& m) { return form_determinant(q_m(m)); }

ContactCert lemma54_cert(const FamilyParams& p) {
  require_params(p);
  const Rat a1sq = p.a1 * p.a1;
  const Rat a2sq = p.a2 * p.a2;
  const Rat b1sq = p.b1 * p.b1;
  const Rat b2sq = p.b2 * p.b2;
  RatMatrix ell(6, 6);
  ell(0, 0) = 1;
  ell(0, 4) = 1;
  ell(0, 5) = 1;
  ell(1, 1) = 1 / a1sq;
  ell(1, 4) = 1;
  ell(1, 5) = b1sq / a1sq;
  ell(2, 2) = 1 / a2sq;
  ell(2, 4) = 1;
  ell(3, 3) = 1 / b2sq;
  ell(3, 5) = 1;
  ell(4, 4) = 1;
  ell(5, 5) = p.b1 / p.a1;
  return make_cert(std::move(ell), a1sq * a2sq * b2sq, family_config(p).variables(), ys());
}

ContactCert inversion_cert(const Rat& m) {
  require_m(m);
  const ContactCert forward_m = lemma54_cert({m, 1, 1, 1});
  const ContactCert forward_inv = lemma54_cert({1, 1, m, 1});
  RatMatrix swap(6, 6);
  const std::array<std::size_t, 6> image{0, 1, 3, 2, 5, 4};
  for (std::size_t i = 0; i < 6; ++i) swap(i, image[i]) = 1;
  const ContactCert relabel =
      make_cert(std::move(swap), 1, forward_m.source_vars, forward_inv.source_vars);
  return compose_certs(compose_certs(invert_cert(forward_m), relabel), forward_inv);
}

std::array<Ideal, 3> prime_components(const Rat& m) {
  require_m(m);
  const VarSet& y = ys();
  const Rat m1 = m + 1;
  Ideal p1(y, {yv(1) + m * yv(2) - m1 * yv(5) - m1 * yv(6),
               yv(2) * yv(4) - yv(4) * yv(5) - yv(4) * yv(6) + (m - 1) * yv(6) * yv(6),
               m * yv(2) * yv(3) - yv(3) * yv(5) + (1 - m) * yv(5) * yv(5) - yv(3) * yv(6)});
  Ideal p2(y, {yv(6), yv(4),
               yv(1) * yv(2) * yv(3) -
                   yv(5) * yv(5) * (yv(1) + yv(2) + yv(3) - Rat(2) * yv(5))});
  Ideal p3(y, {yv(5), yv(3),
               yv(1) * yv(2) * yv(4) -
                   yv(6) * yv(6) * (yv(1) + (m * m) * yv(2) + yv(4) - (2 * m) * yv(6))});
  return {p1, p2, p3};
}

FamilyEvidence family_evidence(const Rat& m) {
  require_m(m);
  FamilyEvidence entry;
  entry.m = m;
  const Ideal minors = groebner(submaximal_minors_ideal(q_m(m)));
  const auto comps = prime_components(m);
  entry.intersection_equal =
      ideal_equal(minors, intersect(std::vector<Ideal>(comps.begin(), comps.end())));

  const Ideal first = quotient(quotient(minors, yv(4)), yv(3));
  entry.first_component_recovered = ideal_equal(first, comps[0]);
  const auto lin = linear_part(first);
  if (lin.size() == 1 && !is_zero(lin[0].coeffs[0])) {
    entry.linear_form = lin[0];
    entry.linear_form *= 1 / lin[0].coeffs[0];
    const auto& c = entry.linear_form.coeffs;
    entry.recovered_m = c[1];
    const Rat m1 = m + 1;
    entry.linear_shape_ok = c[0] == 1 && c[1] == m && is_zero(c[2]) && is_zero(c[3]) &&
                            c[4] == -m1 && c[5] == -m1;
    if (!is_zero(entry.recovered_m)) {
      const Rat inv = 1 / entry.recovered_m;
      entry.invariant = std::minmax(entry.recovered_m, inv);
    }
  }
  return entry;
}

FamilyEvidenceReport family_evidence_report(std::vector<Rat> m_list) {
  for (const auto& m : m_list) require_m(m);
  std::sort(m_list.begin(), m_list.end());
  m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());
  FamilyEvidenceReport report;
  bool ok = true;
  for (const auto& m : m_list) {
    report.entries.push_back(family_evidence(m));
    const auto& e = report.entries.back();
    ok = ok && e.intersection_equal && e.first_component_recovered && e.linear_shape_ok;
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < report.entries.size(); ++j) {
      const auto& a = report.entries[i];
      const auto& b = report.entries[j];
      const bool reciprocal = a.m * b.m == 1;
      if ((a.invariant == b.invariant) != reciprocal) report.invariants_separate = false;
    }
  }
  report.all_ok = ok && report.invariants_separate;
  return report;
}

Configuration coloop_tower(const Rat& m, std::size_t k) {
  require_m(m);
  Configuration w = family_config({m, 1, 1, 1});
  for (std::size_t i = 0; i < k; ++i) w = extend_by_coloop(w, std::to_string(7 + i));
  return w;
}

Poly psi_m_k(const Rat& m, std::size_t k) {
  const VarSet y = VarSet::numbered("y", 6 + k);
  Poly out = lift(psi_m(m), y);
  for (std::size_t i = 0; i < k; ++i) out = out * Poly::variable(y, 6 + i);
  return out;
}

ContactCert tower_cert(const Rat& m, std::size_t k) {
  const ContactCert base = lemma54_cert({m, 1, 1, 1});
  return make_cert(base.ell.pad_identity(6 + k), base.lambda, coloop_tower(m, k).variables(),
                   VarSet::numbered("y", 6 + k));
}

}  // namespace cfgpoly
