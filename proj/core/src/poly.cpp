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

#include "cfgpoly/poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cfgpoly/combinatorics.hpp"
#include "cfgpoly/error.hpp"

namespace cfgpoly {

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(Errc::kInvalidInput, "empty variable name");
    if (!seen.insert(n).second) {
      throw Error(Errc::kInvalidInput, "duplicate variable name '" + n + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet VarSet::numbered(std::string_view prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(first + i));
  }
  return VarSet(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto& n = *names_;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == name) return i;
  }
  return std::nullopt;
}

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

int grevlex_compare(const Exponents& a, const Exponents& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Poly Poly::constant(const VarSet& vars, const Rat& c) {
  Poly p(vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

Poly Poly::variable(const VarSet& vars, std::size_t index) {
  Exponents e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(vars, std::move(e));
}

Poly Poly::monomial(const VarSet& vars, Exponents exps, const Rat& c) {
  if (exps.size() != vars.size()) {
    throw Error(Errc::kDimensionMismatch, "exponent vector length differs from VarSet");
  }
  Poly p(vars);
  p.add_term(exps, c);
  return p;
}

Rat Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (cfgpoly::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (cfgpoly::is_zero(it->second)) terms_.erase(it);
  }
}

std::uint32_t Poly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Poly::require_same_vars(const Poly& q) const {
  if (!(vars_ == q.vars_)) {
    throw Error(Errc::kVarSetMismatch, "polynomials over different variable sets");
  }
}

Poly& Poly::operator+=(const Poly& q) {
  require_same_vars(q);
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  require_same_vars(q);
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (cfgpoly::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  p.require_same_vars(q);
  Poly out(p.vars());
  Exponents e(p.vars().size());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

Poly scale(const Poly& p, const Rat& c) { return p * c; }

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(p.vars(), 1);
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly derivative(const Poly& p, std::size_t index) {
  Poly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e.at(index) == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

Poly lift(const Poly& p, const VarSet& target) {
  std::vector<std::size_t> where(p.vars().size());
  for (std::size_t i = 0; i < where.size(); ++i) {
    auto idx = target.index_of(p.vars()[i]);
    if (!idx) {
      throw Error(Errc::kVarSetMismatch,
                  "variable '" + p.vars()[i] + "' missing from target VarSet");
    }
    where[i] = *idx;
  }
  Poly out(target);
  Exponents t(target.size());
  for (const auto& [e, c] : p.terms()) {
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[where[i]] += e[i];
    out.add_term(t, c);
  }
  return out;
}

Poly rename(const Poly& p, const VarSet& vars) {
  if (vars.size() != p.vars().size()) {
    throw Error(Errc::kDimensionMismatch, "rename: VarSet sizes differ");
  }
  Poly out(vars);
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

Poly substitute_linear(const Poly& p, const RatMatrix& ell, const VarSet& target) {
  const std::size_t n = target.size();
  if (ell.rows() != n || ell.cols() != n || p.vars().size() > n) {
    throw Error(Errc::kDimensionMismatch, "substitute_linear: ell must be |target| square");
  }
  const std::size_t nv = p.vars().size();
  std::vector<Poly> images;
  images.reserve(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    Poly img(target);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(ell(i, j))) img += Poly::variable(target, j) * ell(i, j);
    }
    images.push_back(std::move(img));
  }
  // powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<Poly>> powers(nv);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly::constant(target, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * images[i]);
    return pw[k];
  };
  Poly out(target);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < nv && !term.is_zero(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Homogeneity is_homogeneous(const Poly& p) {
  Homogeneity h;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const auto d = total_degree(e);
    if (first) {
      h.degree = d;
      first = false;
    } else if (d != h.degree) {
      h.homogeneous = false;
      h.degree = 0;
      return h;
    }
  }
  return h;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading_coefficient());
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += p.vars()[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

LinearForm::LinearForm(VarSet v, std::vector<Rat> c) : vars(std::move(v)), coeffs(std::move(c)) {
  if (coeffs.size() != vars.size()) {
    throw Error(Errc::kDimensionMismatch, "LinearForm coefficient count differs from VarSet");
  }
}

LinearForm LinearForm::variable(const VarSet& vars, std::size_t index) {
  LinearForm f(vars);
  f.coeffs.at(index) = 1;
  return f;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rat& c) { return cfgpoly::is_zero(c); });
}

Poly LinearForm::to_poly() const {
  Poly p(vars);
  Exponents e(vars.size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (cfgpoly::is_zero(coeffs[i])) continue;
    e[i] = 1;
    p.add_term(e, coeffs[i]);
    e[i] = 0;
  }
  return p;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (!(vars == o.vars)) {
    throw Error(Errc::kVarSetMismatch, "linear forms over different variable sets");
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rat& c) {
  for (auto& v : coeffs) v *= c;
  return *this;
}

LinearForm to_linear_form(const Poly& p) {
  LinearForm f(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != 1) {
      throw Error(Errc::kInvalidInput, "not a homogeneous linear form: " + to_string(p));
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 1) f.coeffs[i] = c;
    }
  }
  return f;
}

PolyMatrix::PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(vars_)) {}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix s(vars_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

Poly det_poly(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::kDimensionMismatch, "det_poly: matrix not square");
  }
  const std::size_t n = m.rows();
  if (n > 30) throw Error(Errc::kDimensionMismatch, "det_poly: matrix too large");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(m(i, j).vars() == m.vars())) {
        throw Error(Errc::kVarSetMismatch, "det_poly: entries over different variable sets");
      }
  std::unordered_map<std::uint32_t, Poly> memo;
  // det of rows [n - |mask|, n) restricted to the columns in mask.
  auto rec = [&](auto&& self, std::uint32_t mask) -> Poly {
    if (mask == 0) return Poly::constant(m.vars(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    Poly acc(m.vars());
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      const Poly& entry = m(row, j);
      if (!entry.is_zero()) {
        Poly sub = self(self, mask & ~(1u << j));
        if (!sub.is_zero()) {
          Poly term = entry * sub;
          if (position % 2 == 0) acc += term; else acc -= term;
        }
      }
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  const std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return rec(rec, full);
}

std::vector<Poly> minors(const PolyMatrix& m, std::size_t k) {
  if (k > m.rows() || k > m.cols()) {
    throw Error(Errc::kDimensionMismatch, "minors: k exceeds matrix size");
  }
  std::vector<Poly> out;
  const auto row_sets = combinations(m.rows(), k);
  const auto col_sets = combinations(m.cols(), k);
  for (const auto& r : row_sets)
    for (const auto& c : col_sets) out.push_back(det_poly(m.submatrix(r, c)));
  return out;
}

}  // namespace cfgpoly
