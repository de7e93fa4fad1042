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
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfgpoly/matrix.hpp"
#include "cfgpoly/rational.hpp"

namespace cfgpoly {

// Ordered list of distinct variable names. The order is the coordinate order
// used by linear substitutions and the tiebreak of the monomial order
// (first variable is largest). Copies share storage.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);

  // prefix + (first + i) for i in [0, count), e.g. y1..y6.
  static VarSet numbered(std::string_view prefix, std::size_t count, std::size_t first = 1);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

// Graded reverse lexicographic order with x1 > x2 > ... > xn.
// Returns <0, 0, >0 as a is smaller, equal, larger than b.
int grevlex_compare(const Exponents& a, const Exponents& b);

struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

// Sparse polynomial with rational coefficients. Terms are kept in decreasing
// grevlex order with no zero coefficients, which makes the iteration order
// (and the printed form) canonical.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rat, GrevlexGreater>;

  Poly() = default;
  explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

  static Poly constant(const VarSet& vars, const Rat& c);
  static Poly variable(const VarSet& vars, std::size_t index);
  static Poly monomial(const VarSet& vars, Exponents exps, const Rat& c = 1);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Exponents& e) const;

  // Leading term under grevlex; requires !is_zero().
  const Exponents& leading_monomial() const { return terms_.begin()->first; }
  const Rat& leading_coefficient() const { return terms_.begin()->second; }

  // Adds c * x^e in place, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rat& c);

  // Largest total degree; 0 for the zero polynomial.
  std::uint32_t degree() const;

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator-(Poly p) { return p *= Rat(-1); }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Rat& c) { return p *= c; }
  friend Poly operator*(const Rat& c, Poly p) { return p *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const Poly& q) const;

  VarSet vars_;
  TermMap terms_;
};

Poly scale(const Poly& p, const Rat& c);
Poly pow(const Poly& p, unsigned exponent);

// Partial derivative with respect to variable `index`.
Poly derivative(const Poly& p, std::size_t index);

// Re-express p over `target` by matching variable names; every variable of p
// must occur in target (Error(kVarSetMismatch) otherwise).
Poly lift(const Poly& p, const VarSet& target);

// Same coefficients, variables renamed position by position.
Poly rename(const Poly& p, const VarSet& vars);

// psi o ell: every variable x_i of p (its i-th coordinate) is replaced by
// sum_j ell(i, j) * target_j. Requires ell to be |target| x |target| and
// |p.vars| <= |target|.
Poly substitute_linear(const Poly& p, const RatMatrix& ell, const VarSet& target);

struct Homogeneity {
  bool homogeneous = true;
  std::uint32_t degree = 0;
};
// The zero polynomial counts as homogeneous of degree 0.
Homogeneity is_homogeneous(const Poly& p);

// Drops the common rational content so the leading coefficient is 1.
Poly make_monic(const Poly& p);

// Pretty form such as "x1*x2 - 1/2*x3^2"; "0" for the zero polynomial.
std::string to_string(const Poly& p);

// Homogeneous degree-1 polynomial sum_i coeffs[i] * vars[i].
struct LinearForm {
  VarSet vars;
  std::vector<Rat> coeffs;

  LinearForm() = default;
  explicit LinearForm(VarSet v) : vars(std::move(v)), coeffs(vars.size()) {}
  LinearForm(VarSet v, std::vector<Rat> c);

  static LinearForm variable(const VarSet& vars, std::size_t index);

  bool is_zero() const;
  Poly to_poly() const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator*=(const Rat& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator*(const Rat& c, LinearForm a) { return a *= c; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Throws Error(kInvalidInput) if p is not a homogeneous linear polynomial.
LinearForm to_linear_form(const Poly& p);

// Dense matrix of polynomials over one variable set.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols);

  const VarSet& vars() const { return vars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  VarSet vars_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

// Laplace expansion along rows with memoization on the set of remaining
// columns. The 0x0 determinant is 1.
Poly det_poly(const PolyMatrix& m);

// All k x k minors, ordered lexicographically by (row set, column set).
std::vector<Poly> minors(const PolyMatrix& m, std::size_t k);

}  // namespace cfgpoly
