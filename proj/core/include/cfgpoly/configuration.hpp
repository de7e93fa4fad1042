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
#include <string_view>
#include <vector>

#include "cfgpoly/matrix.hpp"
#include "cfgpoly/poly.hpp"

namespace cfgpoly {

// Name of the coordinate x_e for a ground-set label: purely numeric labels
// get an "x" prefix ("3" -> "x3"); any other label is used verbatim.
std::string variable_name(std::string_view label);

// A subspace W of K^E, stored as the RREF basis of its row space.
// Two configurations compare equal iff ground sets and RREF bases agree.
class Configuration {
 public:
  Configuration() = default;

  // Any spanning rows are accepted; zero and dependent rows are dropped.
  // Throws kDimensionMismatch if rows.cols() != ground_set.size() and
  // kDuplicateLabel on repeated labels.
  Configuration(std::vector<std::string> ground_set, const RatMatrix& rows);

  // Ground set "1".."n".
  explicit Configuration(const RatMatrix& rows);

  const std::vector<std::string>& ground_set() const { return ground_set_; }
  const RatMatrix& basis() const { return basis_; }
  // Pivot columns of the RREF basis: the lexicographically first matroid basis.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::size_t rank() const { return basis_.rows(); }
  std::size_t size() const { return ground_set_.size(); }

  VarSet variables() const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<std::string> ground_set_;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Ground set "1".."n" as strings.
std::vector<std::string> default_labels(std::size_t n);

// Span of all s-fold Hadamard products of basis vectors (with repetition).
// The zero configuration's powers are zero.
Configuration hadamard_power(const Configuration& w, unsigned s);

// Span of all u * v for u in a, v in b. Ground sets must agree.
Configuration hadamard_product(const Configuration& a, const Configuration& b);

struct HadamardProfile {
  // dims[s - 1] = dim W^{*s} for s = 1..s_max.
  std::vector<std::size_t> dims;
  // First t with dim W^{*t} = dim W^{*(t+1)}; dimensions never change after.
  unsigned exponent = 1;
  std::size_t hadamard_dim = 0;
  // filtration[s - 1] = F_s, sorted element indices with |F_s| = dims[s - 1].
  std::vector<std::vector<std::size_t>> filtration;

  std::size_t dim(unsigned s) const { return dims.at(s - 1); }
};

// Dimensions of the Hadamard powers up to s_max, the Hadamard exponent and
// dimension, and the greedy filtration: F_1 is the first basis of M_W in
// ground-set order and F_{t+1} extends F_t to a basis of the matroid of
// W^{*(t+1)}, scanning elements in ground-set order.
HadamardProfile hadamard_dims(const Configuration& w, unsigned s_max);

// Projection onto the coordinates in `elements` (kept in ground-set order).
Configuration restrict(const Configuration& w, const std::vector<std::size_t>& elements);
Configuration restrict_labels(const Configuration& w, const std::vector<std::string>& labels);

// W + K*f with a new coordinate f; throws kDuplicateLabel if f exists.
Configuration extend_by_coloop(const Configuration& w, const std::string& label);

// Rank oracle and basis enumeration for the matroid realized by a configuration.
class MatroidView {
 public:
  static constexpr std::size_t kMaxBases = 12870;  // C(16, 8)

  explicit MatroidView(const Configuration& w);

  const std::vector<std::string>& ground_set() const { return ground_set_; }
  std::size_t size() const { return ground_set_.size(); }
  std::size_t rank() const { return matrix_.rows(); }
  std::size_t rank(const std::vector<std::size_t>& subset) const;
  bool is_basis(const std::vector<std::size_t>& subset) const;

  // All bases as sorted index lists in lexicographic order. Throws
  // kTooManyBases when C(n, r) exceeds kMaxBases.
  std::vector<std::vector<std::size_t>> bases() const;

  bool is_loop(std::size_t e) const;

  // Connected components, each sorted, ordered by smallest element.
  std::vector<std::vector<std::size_t>> components() const;

 private:
  std::vector<std::string> ground_set_;
  RatMatrix matrix_;
  std::vector<std::size_t> pivots_;
};

MatroidView matroid(const Configuration& w);

// True iff the matroid has a single connected component (any two elements
// lie on a common circuit). Matroids on at most one element are connected.
bool is_connected(const MatroidView& m);

}  // namespace cfgpoly
