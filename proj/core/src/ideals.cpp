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

#include "cfgpoly/ideals.hpp"

#include <algorithm>
#include <numeric>

#include "cfgpoly/combinatorics.hpp"
#include "cfgpoly/error.hpp"

namespace cfgpoly {

namespace {

void require_same(const VarSet& a, const VarSet& b, const char* what) {
  if (!(a == b)) throw Error(Errc::kVarSetMismatch, std::string(what) + ": VarSets differ");
}

// Inserts a new first variable (exponent zero) in front of p's variables.
Poly with_leading_var(const Poly& p, const VarSet& ext) {
  Poly out(ext);
  Exponents e(ext.size());
  for (const auto& [m, c] : p.terms()) {
    e[0] = 0;
    std::copy(m.begin(), m.end(), e.begin() + 1);
    out.add_term(e, c);
  }
  return out;
}

Poly drop_leading_var(const Poly& p, const VarSet& vars) {
  Poly out(vars);
  for (const auto& [m, c] : p.terms()) out.add_term(Exponents(m.begin() + 1, m.end()), c);
  return out;
}

// Same polynomial with the variables listed in the order perm.
Poly permute(const Poly& p, const VarSet& permuted, const std::vector<std::size_t>& perm) {
  Poly out(permuted);
  Exponents e(perm.size());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < perm.size(); ++k) e[k] = m[perm[k]];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

Ideal::Ideal(VarSet v, std::vector<Poly> g) : vars(std::move(v)), gens(std::move(g)) {
  for (const auto& p : gens) require_same(p.vars(), vars, "ideal generator");
}

Ideal groebner(const Ideal& i, const GroebnerOptions& opts) {
  GroebnerOptions o = opts;
  o.order = MonomialOrder::kGrevlex;
  return Ideal(i.vars, groebner_basis(i.gens, o));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same(a.vars, b.vars, "ideal_equal");
  return groebner(a).gens == groebner(b).gens;
}

bool contains(const Ideal& i, const Poly& f) {
  require_same(i.vars, f.vars(), "contains");
  return reduce(f, groebner(i).gens).is_zero();
}

bool contains(const Ideal& a, const Ideal& b) {
  require_same(a.vars, b.vars, "contains");
  const auto gb = groebner(a).gens;
  return std::all_of(b.gens.begin(), b.gens.end(),
                     [&](const Poly& f) { return reduce(f, gb).is_zero(); });
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a.vars, b.vars, "intersect");
  std::vector<std::string> names{"#t"};
  names.insert(names.end(), a.vars.names().begin(), a.vars.names().end());
  const VarSet ext(std::move(names));
  const Poly t = Poly::variable(ext, 0);
  const Poly one_minus_t = Poly::constant(ext, 1) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.gens) gens.push_back(t * with_leading_var(f, ext));
  for (const auto& f : b.gens) gens.push_back(one_minus_t * with_leading_var(f, ext));
  GroebnerOptions opts;
  opts.order = MonomialOrder::kEliminateFirst;
  std::vector<Poly> kept;
  for (const auto& g : groebner_basis(gens, opts)) {
    const bool t_free = std::all_of(g.terms().begin(), g.terms().end(),
                                    [](const auto& term) { return term.first[0] == 0; });
    if (t_free) kept.push_back(drop_leading_var(g, a.vars));
  }
  return groebner(Ideal(a.vars, std::move(kept)));
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error(Errc::kInvalidInput, "intersect: no ideals");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
  return groebner(acc);
}

Poly divide_exact(const Poly& p, const Poly& f) {
  require_same(p.vars(), f.vars(), "divide_exact");
  if (f.is_zero()) throw Error(Errc::kInvalidInput, "divide_exact: division by zero");
  Poly q(p.vars());
  Poly r = p;
  const Exponents& lf = f.leading_monomial();
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_monomial();
    Exponents m(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lf[i]) throw Error(Errc::kInvalidInput, "divide_exact: not divisible");
      m[i] = lr[i] - lf[i];
    }
    const Poly t = Poly::monomial(p.vars(), m, r.leading_coefficient() / f.leading_coefficient());
    q += t;
    r -= t * f;
  }
  return q;
}

Ideal quotient(const Ideal& i, const Poly& f) {
  require_same(i.vars, f.vars(), "quotient");
  if (f.is_zero()) return Ideal(i.vars, {Poly::constant(i.vars, 1)});
  const Ideal both = intersect(i, Ideal(i.vars, {f}));
  std::vector<Poly> gens;
  for (const auto& g : both.gens) gens.push_back(divide_exact(g, f));
  return groebner(Ideal(i.vars, std::move(gens)));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same(a.vars, b.vars, "product");
  std::vector<Poly> gens;
  for (const auto& f : a.gens)
    for (const auto& g : b.gens) gens.push_back(f * g);
  return Ideal(a.vars, std::move(gens));
}

Ideal submaximal_minors_ideal(const SymbolicForm& q) {
  if (q.size() == 0) return Ideal(q.vars());
  return Ideal(q.vars(), minors(q.to_poly_matrix(), q.size() - 1));
}

std::vector<LinearForm> linear_part(const Ideal& i) {
  std::vector<LinearForm> out;
  for (const auto& g : groebner(i).gens) {
    const Homogeneity h = is_homogeneous(g);
    if (h.homogeneous && h.degree == 1) out.push_back(to_linear_form(g));
  }
  return out;
}

std::vector<std::size_t> degree_counts(const Ideal& i) {
  std::vector<std::size_t> counts;
  for (const auto& g : groebner(i).gens) {
    const std::size_t d = g.degree();
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return counts;
}

std::vector<std::size_t> hilbert_function(const Ideal& i, unsigned d_max) {
  std::vector<Exponents> leads;
  for (const auto& g : groebner(i).gens) leads.push_back(g.leading_monomial());
  const std::size_t n = i.vars.size();
  std::vector<std::size_t> out;
  for (unsigned d = 0; d <= d_max; ++d) {
    std::size_t count = 0;
    for (const auto& ms : multisets(n, d)) {
      Exponents e(n, 0);
      for (std::size_t v : ms) ++e[v];
      const bool standard = std::none_of(leads.begin(), leads.end(), [&](const Exponents& l) {
        for (std::size_t k = 0; k < n; ++k) {
          if (l[k] > e[k]) return false;
        }
        return true;
      });
      if (standard) ++count;
    }
    out.push_back(count);
  }
  return out;
}

Fingerprint separating_invariant(const SymbolicForm& q) {
  const bool rank3 = q.size() == 3;
  const bool family = q.size() == 4 && q.vars().size() == 6;
  if (!rank3 && !family) {
    throw Error(Errc::kUnsupportedShape,
                "separating_invariant: expected a 3 x 3 form or a 4 x 4 form in 6 variables");
  }
  const Ideal ideal = groebner(submaximal_minors_ideal(q));
  const std::size_t n = q.vars().size();
  Fingerprint fp;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool first = true;
  do {
    std::vector<std::string> names;
    for (std::size_t k : perm) names.push_back(q.vars()[k]);
    const VarSet permuted(std::move(names));
    std::vector<Poly> gens;
    for (const auto& g : ideal.gens) gens.push_back(permute(g, permuted, perm));
    auto counts = degree_counts(Ideal(permuted, std::move(gens)));
    if (first || counts < fp.degree_counts) fp.degree_counts = std::move(counts);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));

  fp.hilbert = hilbert_function(ideal, 5);
  for (std::size_t e = 0; e < n; ++e) {
    fp.colon_linear_dims.push_back(
        linear_part(quotient(ideal, Poly::variable(q.vars(), e))).size());
  }
  std::sort(fp.colon_linear_dims.begin(), fp.colon_linear_dims.end());
  return fp;
}

}  // namespace cfgpoly
