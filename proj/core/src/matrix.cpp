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

#include "cfgpoly/matrix.hpp"

#include <algorithm>
#include <utility>

#include "cfgpoly/error.hpp"

namespace cfgpoly {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return {};
  return stack(rows, rows.front().size());
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rat>> out;
  for (const auto& r : rows) {
    std::vector<Rat> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return from_rows(out);
}

RatMatrix RatMatrix::stack(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(Errc::kDimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> RatMatrix::column(std::size_t j) const {
  std::vector<Rat> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
  RatMatrix s(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) s(i, k) = (*this)(i, cols[k]);
  return s;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> rows) const {
  RatMatrix s(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(rows[k], j);
  return s;
}

RatMatrix RatMatrix::pad_identity(std::size_t n) const {
  if (n < rows_ || n < cols_) {
    throw Error(Errc::kDimensionMismatch, "pad_identity target smaller than matrix");
  }
  RatMatrix p(n, n);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) p(i, j) = (*this)(i, j);
  for (std::size_t i = std::max(rows_, cols_); i < n; ++i) p(i, i) = 1;
  return p;
}

bool RatMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::kDimensionMismatch, "matrix product shape mismatch");
  }
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

std::vector<Rat> operator*(const RatMatrix& a, std::span<const Rat> v) {
  if (a.cols() != v.size()) {
    throw Error(Errc::kDimensionMismatch, "matrix-vector shape mismatch");
  }
  std::vector<Rat> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(v[j])) out[i] += a(i, j) * v[j];
  return out;
}

Rref rref(const RatMatrix& input) {
  Rref out{input, {}};
  RatMatrix& m = out.matrix;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
    }
    const Rat inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || is_zero(m(i, c))) continue;
      const Rat factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(m(lead, j))) m(i, j) -= factor * m(lead, j);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

Rref row_space_basis(const RatMatrix& m) {
  Rref r = rref(m);
  std::vector<std::size_t> keep(r.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  r.matrix = r.matrix.select_rows(keep);
  return r;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix kernel_basis(const RatMatrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::stack(basis, m.cols());
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::kDimensionMismatch, "invert: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Rref r = rref(aug);
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    throw Error(Errc::kSingularMatrix, "invert: matrix is singular");
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  return inv;
}

Rat determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::kDimensionMismatch, "determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Scale each row to integers; det(m) = det(scaled) / prod(scales).
  std::vector<BigInt> a(n * n);
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rat det(at(n - 1, n - 1) * sign);
  det /= scale;
  return det;
}

RatMatrix complete_to_invertible(const RatMatrix& rows) {
  const std::size_t n = rows.cols();
  if (rank(rows) != rows.rows()) {
    throw Error(Errc::kSingularMatrix, "complete_to_invertible: rows are dependent");
  }
  std::vector<std::vector<Rat>> out;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    out.emplace_back(rows.row(i).begin(), rows.row(i).end());
  }
  // Unit vectors e_j for non-pivot j of the RREF complete the basis.
  const Rref r = rref(rows);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rat> e(n);
    e[j] = 1;
    out.push_back(std::move(e));
  }
  return RatMatrix::stack(out, n);
}

}  // namespace cfgpoly
