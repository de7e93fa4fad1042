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
#include <initializer_list>
#include <span>
#include <vector>

#include "cfgpoly/rational.hpp"

namespace cfgpoly {

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  // All rows must have the same length; an empty list yields a 0x0 matrix.
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
  static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  // Stacks row vectors; `cols` fixes the width when `rows` is empty.
  static RatMatrix stack(const std::vector<std::vector<Rat>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Rat> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::vector<Rat> column(std::size_t j) const;
  const std::vector<Rat>& entries() const { return entries_; }

  RatMatrix transpose() const;
  RatMatrix select_columns(std::span<const std::size_t> cols) const;
  RatMatrix select_rows(std::span<const std::size_t> rows) const;
  // Copy with extra zero rows/columns appended and ones on the new diagonal.
  RatMatrix pad_identity(std::size_t n) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> operator*(const RatMatrix& a, std::span<const Rat> v);

struct Rref {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. Pivots are taken as the first nonzero entry in
// column order, so the result is unique and deterministic.
Rref rref(const RatMatrix& m);

// RREF with the zero rows dropped: a canonical basis of the row space.
Rref row_space_basis(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Rows form a basis of {v : m v = 0}, one per free column in increasing order.
RatMatrix kernel_basis(const RatMatrix& m);

// Throws Error(kSingularMatrix) when m is not invertible and
// Error(kDimensionMismatch) when m is not square.
RatMatrix invert(const RatMatrix& m);

// Fraction-free Bareiss elimination after clearing row denominators.
Rat determinant(const RatMatrix& m);

// Completes linearly independent rows to a basis of K^n: the input rows come
// first, followed by the unit vectors e_j for the non-pivot columns j of
// rref(rows) in increasing order. Throws Error(kSingularMatrix) if the input
// rows are dependent.
RatMatrix complete_to_invertible(const RatMatrix& rows);

}  // namespace cfgpoly
