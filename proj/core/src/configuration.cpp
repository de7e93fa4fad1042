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

#include "cfgpoly/configuration.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "cfgpoly/combinatorics.hpp"
#include "cfgpoly/error.hpp"

namespace cfgpoly {

std::string variable_name(std::string_view label) {
  const bool numeric = !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  return numeric ? "x" + std::string(label) : std::string(label);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Configuration::Configuration(std::vector<std::string> ground_set, const RatMatrix& rows)
    : ground_set_(std::move(ground_set)) {
  std::set<std::string> seen;
  for (const auto& l : ground_set_) {
    if (!seen.insert(l).second) {
      throw Error(Errc::kDuplicateLabel, "duplicate ground-set label '" + l + "'");
    }
  }
  if (rows.rows() == 0) {
    basis_ = RatMatrix(0, ground_set_.size());
    return;
  }
  if (rows.cols() != ground_set_.size()) {
    throw Error(Errc::kDimensionMismatch, "configuration matrix width differs from ground set");
  }
  Rref r = row_space_basis(rows);
  basis_ = std::move(r.matrix);
  pivots_ = std::move(r.pivots);
}

Configuration::Configuration(const RatMatrix& rows)
    : Configuration(default_labels(rows.cols()), rows) {}

VarSet Configuration::variables() const {
  std::vector<std::string> names;
  names.reserve(ground_set_.size());
  for (const auto& l : ground_set_) names.push_back(variable_name(l));
  return VarSet(std::move(names));
}

std::optional<std::size_t> Configuration::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < ground_set_.size(); ++i) {
    if (ground_set_[i] == label) return i;
  }
  return std::nullopt;
}

namespace {

std::vector<Rat> hadamard(std::span<const Rat> a, std::span<const Rat> b) {
  std::vector<Rat> out(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (!is_zero(a[e]) && !is_zero(b[e])) out[e] = a[e] * b[e];
  }
  return out;
}

}  // namespace

Configuration hadamard_power(const Configuration& w, unsigned s) {
  if (s == 0) throw Error(Errc::kInvalidInput, "hadamard_power: s must be positive");
  const RatMatrix& b = w.basis();
  std::vector<std::vector<Rat>> rows;
  for (const auto& choice : multisets(b.rows(), s)) {
    if (choice.empty()) break;
    std::vector<Rat> v(b.row(choice[0]).begin(), b.row(choice[0]).end());
    for (std::size_t k = 1; k < choice.size(); ++k) v = hadamard(v, b.row(choice[k]));
    rows.push_back(std::move(v));
  }
  return Configuration(w.ground_set(), RatMatrix::stack(rows, w.size()));
}

Configuration hadamard_product(const Configuration& a, const Configuration& b) {
  if (a.ground_set() != b.ground_set()) {
    throw Error(Errc::kDimensionMismatch, "hadamard_product: ground sets differ");
  }
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      rows.push_back(hadamard(a.basis().row(i), b.basis().row(j)));
  return Configuration(a.ground_set(), RatMatrix::stack(rows, a.size()));
}

namespace {

// Extends the independent column set `start` of m greedily in index order.
std::vector<std::size_t> extend_to_basis(const RatMatrix& m, std::vector<std::size_t> start) {
  std::size_t current = rank(m.select_columns(start));
  const std::size_t target = m.rows();
  std::vector<bool> taken(m.cols(), false);
  for (std::size_t e : start) taken[e] = true;
  for (std::size_t e = 0; e < m.cols() && current < target; ++e) {
    if (taken[e]) continue;
    start.push_back(e);
    const std::size_t r = rank(m.select_columns(start));
    if (r > current) {
      current = r;
      taken[e] = true;
    } else {
      start.pop_back();
    }
  }
  std::sort(start.begin(), start.end());
  return start;
}

}  // namespace

HadamardProfile hadamard_dims(const Configuration& w, unsigned s_max) {
  if (s_max == 0) throw Error(Errc::kInvalidInput, "hadamard_dims: s_max must be positive");
  HadamardProfile profile;
  Configuration power = w;
  std::vector<std::size_t> f = w.pivots();
  std::optional<unsigned> exponent;
  for (unsigned s = 1;; ++s) {
    if (s > 1) {
      Configuration next = hadamard_product(power, w);
      if (!exponent && next.rank() == power.rank()) {
        exponent = s - 1;
        profile.hadamard_dim = power.rank();
      }
      power = std::move(next);
      if (s <= s_max) f = extend_to_basis(power.basis(), f);
    }
    if (s <= s_max) {
      profile.dims.push_back(power.rank());
      profile.filtration.push_back(f);
    }
    if (s >= s_max && exponent) break;
  }
  profile.exponent = *exponent;
  return profile;
}

Configuration restrict(const Configuration& w, const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> cols = elements;
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end() ||
      (!cols.empty() && cols.back() >= w.size())) {
    throw Error(Errc::kInvalidInput, "restrict: invalid element subset");
  }
  std::vector<std::string> labels;
  for (std::size_t c : cols) labels.push_back(w.ground_set()[c]);
  return Configuration(std::move(labels), w.basis().select_columns(cols));
}

Configuration restrict_labels(const Configuration& w, const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  for (const auto& l : labels) {
    auto i = w.index_of(l);
    if (!i) throw Error(Errc::kInvalidInput, "restrict: unknown label '" + l + "'");
    idx.push_back(*i);
  }
  return restrict(w, idx);
}

Configuration extend_by_coloop(const Configuration& w, const std::string& label) {
  if (w.index_of(label)) {
    throw Error(Errc::kDuplicateLabel, "extend_by_coloop: label '" + label + "' exists");
  }
  std::vector<std::string> labels = w.ground_set();
  labels.push_back(label);
  const std::size_t r = w.rank();
  const std::size_t n = w.size();
  RatMatrix m(r + 1, n + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = w.basis()(i, j);
  m(r, n) = 1;
  return Configuration(std::move(labels), m);
}

MatroidView::MatroidView(const Configuration& w)
    : ground_set_(w.ground_set()), matrix_(w.basis()), pivots_(w.pivots()) {}

std::size_t MatroidView::rank(const std::vector<std::size_t>& subset) const {
  if (subset.empty() || matrix_.rows() == 0) return 0;
  return cfgpoly::rank(matrix_.select_columns(subset));
}

bool MatroidView::is_basis(const std::vector<std::size_t>& subset) const {
  return subset.size() == rank() && rank(subset) == rank();
}

std::vector<std::vector<std::size_t>> MatroidView::bases() const {
  const std::size_t n = size();
  const std::size_t r = rank();
  if (binomial(n, r) > kMaxBases) {
    throw Error(Errc::kTooManyBases, "basis enumeration exceeds " + std::to_string(kMaxBases) +
                                         " candidate subsets");
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& s : combinations(n, r)) {
    if (r == 0 || !is_zero(determinant(matrix_.select_columns(s)))) out.push_back(std::move(s));
  }
  return out;
}

bool MatroidView::is_loop(std::size_t e) const {
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    if (!is_zero(matrix_(i, e))) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> MatroidView::components() const {
  const std::size_t n = size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  // The fundamental circuit of a non-basis column g with respect to the pivot
  // basis is g together with the pivots whose RREF row is nonzero at g. Two
  // elements share a component iff these circuits chain them together.
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  for (std::size_t g = 0; g < n; ++g) {
    if (is_pivot[g]) continue;
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      if (!is_zero(matrix_(i, g))) unite(g, pivots_[i]);
    }
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t root = find(e);
    if (slot[root] == n) {
      slot[root] = comps.size();
      comps.emplace_back();
    }
    comps[slot[root]].push_back(e);
  }
  return comps;
}

MatroidView matroid(const Configuration& w) { return MatroidView(w); }

bool is_connected(const MatroidView& m) { return m.components().size() <= 1; }

}  // namespace cfgpoly
