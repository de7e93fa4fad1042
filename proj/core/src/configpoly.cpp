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

#include "cfgpoly/configpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "cfgpoly/error.hpp"

namespace cfgpoly {

SymbolicForm::SymbolicForm(VarSet vars, std::size_t size)
    : vars_(std::move(vars)), size_(size), entries_(size * size, LinearForm(vars_)) {}

SymbolicForm SymbolicForm::from_entries(VarSet vars, std::size_t size,
                                        std::vector<LinearForm> entries) {
  if (entries.size() != size * size) {
    throw Error(Errc::kInvalidInput, "symbolic form: expected " + std::to_string(size * size) +
                                         " entries");
  }
  SymbolicForm q(vars, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const LinearForm& f = entries[i * size + j];
      if (!(f.vars == vars)) throw Error(Errc::kVarSetMismatch, "symbolic form: entry VarSet");
      if (!(f == entries[j * size + i])) {
        throw Error(Errc::kInvalidInput, "symbolic form is not symmetric");
      }
    }
  }
  q.entries_ = std::move(entries);
  return q;
}

void SymbolicForm::set(std::size_t i, std::size_t j, LinearForm f) {
  entries_[j * size_ + i] = f;
  entries_[i * size_ + j] = std::move(f);
}

RatMatrix SymbolicForm::coefficient_matrix(std::size_t e) const {
  RatMatrix c(size_, size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) c(i, j) = (*this)(i, j).coeffs[e];
  return c;
}

PolyMatrix SymbolicForm::to_poly_matrix() const {
  PolyMatrix m(vars_, size_, size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) m(i, j) = (*this)(i, j).to_poly();
  return m;
}

SymbolicForm configuration_form(const RatMatrix& a, const VarSet& vars) {
  if (a.cols() != vars.size()) {
    throw Error(Errc::kDimensionMismatch, "configuration_form: column count differs from vars");
  }
  const std::size_t r = a.rows();
  SymbolicForm q(vars, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      LinearForm f(vars);
      for (std::size_t e = 0; e < a.cols(); ++e) f.coeffs[e] = a(i, e) * a(j, e);
      q.set(i, j, std::move(f));
    }
  }
  return q;
}

SymbolicForm configuration_form(const Configuration& w) {
  return configuration_form(w.basis(), w.variables());
}

Poly form_determinant(const SymbolicForm& q) {
  if (q.size() == 0) return Poly::constant(q.vars(), 1);
  return det_poly(q.to_poly_matrix());
}

Poly psi_of_matrix(const RatMatrix& a, const VarSet& vars) {
  return form_determinant(configuration_form(a, vars));
}

Poly psi_det(const Configuration& w) { return psi_of_matrix(w.basis(), w.variables()); }

Poly psi_basis_expansion(const Configuration& w) {
  const VarSet vars = w.variables();
  Poly out(vars);
  const MatroidView m(w);
  for (const auto& b : m.bases()) {
    Exponents e(vars.size(), 0);
    for (std::size_t i : b) e[i] = 1;
    const Rat d = w.rank() == 0 ? Rat(1) : determinant(w.basis().select_columns(b));
    out.add_term(e, d * d);
  }
  return out;
}

Poly matroid_polynomial(const MatroidView& m) {
  std::vector<std::string> names;
  for (const auto& l : m.ground_set()) names.push_back(variable_name(l));
  const VarSet vars(std::move(names));
  Poly out(vars);
  for (const auto& b : m.bases()) {
    Exponents e(vars.size(), 0);
    for (std::size_t i : b) e[i] = 1;
    out.add_term(e, 1);
  }
  return out;
}

KirchhoffResult kirchhoff(const GraphSpec& g) {
  const std::size_t nv = g.vertices.size();
  const std::size_t ne = g.edges.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!index.emplace(g.vertices[v], v).second) {
      throw Error(Errc::kDuplicateLabel, "graph: duplicate vertex '" + g.vertices[v] + "'");
    }
  }
  if (nv == 0) throw Error(Errc::kInvalidInput, "graph: no vertices");
  std::vector<std::string> labels = g.edge_labels;
  if (labels.empty()) {
    labels = default_labels(ne);
  } else if (labels.size() != ne) {
    throw Error(Errc::kInvalidInput, "graph: edge_labels length differs from edge count");
  }

  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  RatMatrix inc(nv - 1, ne);
  for (std::size_t k = 0; k < ne; ++k) {
    const auto iu = index.find(g.edges[k].first);
    const auto iv = index.find(g.edges[k].second);
    if (iu == index.end() || iv == index.end()) {
      throw Error(Errc::kInvalidInput, "graph: edge endpoint is not a declared vertex");
    }
    std::size_t u = iu->second;
    std::size_t v = iv->second;
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    parent[find(v)] = find(u);
    if (u < nv - 1) inc(u, k) = 1;
    if (v < nv - 1) inc(v, k) = -1;
  }
  for (std::size_t v = 1; v < nv; ++v) {
    if (find(v) != find(0)) throw Error(Errc::kDisconnectedGraph, "graph is not connected");
  }
  KirchhoffResult out{Configuration(std::move(labels), inc), Poly()};
  out.psi = psi_det(out.config);
  return out;
}

namespace {

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  BigInt num;
  BigInt den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rat(num, den);
}

std::string label_of(const std::string& name) {
  if (name.size() > 1 && name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return name.substr(1);
  }
  return name;
}

}  // namespace

RatMatrix reconstruct_matrix(const SymbolicForm& q) {
  const std::size_t r = q.size();
  const std::size_t n = q.vars().size();
  RatMatrix a(r, n);
  for (std::size_t e = 0; e < n; ++e) {
    const RatMatrix c = q.coefficient_matrix(e);
    std::vector<Rat> w(r);
    std::optional<std::size_t> lead;
    for (std::size_t i = 0; i < r && !lead; ++i) {
      if (!is_zero(c(i, i))) lead = i;
    }
    if (lead) {
      const auto root = rational_sqrt(c(*lead, *lead));
      if (!root) {
        throw Error(Errc::kNotAConfigurationForm,
                    "coefficient matrix of '" + q.vars()[e] + "' is not a rational square w w^T");
      }
      for (std::size_t i = 0; i < r; ++i) w[i] = c(*lead, i) / *root;
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (c(i, j) != w[i] * w[j]) {
          throw Error(Errc::kNotAConfigurationForm,
                      "coefficient matrix of '" + q.vars()[e] + "' does not have rank <= 1");
        }
      }
      a(i, e) = w[i];
    }
  }
  return a;
}

Configuration reconstruct_from_form(const SymbolicForm& q) {
  std::vector<std::string> labels;
  for (const auto& name : q.vars().names()) labels.push_back(label_of(name));
  return Configuration(std::move(labels), reconstruct_matrix(q));
}

std::optional<ConeModel> cone_graph_model(const Configuration& w) {
  const std::size_t r = w.rank();
  const std::size_t n = w.size();
  const RatMatrix& b = w.basis();
  auto product = [&](std::size_t i, std::size_t j) {
    std::vector<Rat> v(n);
    for (std::size_t e = 0; e < n; ++e) v[e] = b(i, e) * b(j, e);
    return v;
  };
  auto nonzero = [](const std::vector<Rat>& v) {
    return std::any_of(v.begin(), v.end(), [](const Rat& c) { return !is_zero(c); });
  };

  std::vector<std::vector<Rat>> products;
  std::vector<std::pair<std::size_t, std::size_t>> graph_edges;
  for (std::size_t i = 0; i < r; ++i) products.push_back(product(i, i));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      auto v = product(i, j);
      if (nonzero(v)) {
        products.push_back(std::move(v));
        graph_edges.emplace_back(i, j);
      }
    }
  }
  if (rank(RatMatrix::stack(products, n)) != products.size()) return std::nullopt;

  ConeModel model;
  for (std::size_t i = 1; i <= r; ++i) model.graph.vertices.push_back("v" + std::to_string(i));
  model.graph.vertices.push_back("v0");

  std::vector<std::vector<Rat>> forms;
  for (const auto& [i, j] : graph_edges) {
    model.graph.edges.emplace_back(model.graph.vertices[i], model.graph.vertices[j]);
    auto v = product(i, j);
    for (auto& c : v) c = -c;
    forms.push_back(std::move(v));
  }
  std::vector<Rat> total(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t e = 0; e < n; ++e) total[e] += b(i, e);
  for (std::size_t i = 0; i < r; ++i) {
    model.graph.edges.emplace_back(model.graph.vertices[i], "v0");
    std::vector<Rat> v(n);
    for (std::size_t e = 0; e < n; ++e) v[e] = b(i, e) * total[e];
    forms.push_back(std::move(v));
  }
  for (std::size_t k = 1; k <= forms.size(); ++k) {
    model.graph.edge_labels.push_back("g" + std::to_string(k));
  }
  const VarSet targets = VarSet::numbered("g", forms.size());
  model.cert = make_cert(complete_to_invertible(RatMatrix::stack(forms, n)), 1, w.variables(),
                         targets);
  return model;
}

}  // namespace cfgpoly
