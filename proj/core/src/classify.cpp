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

#include "cfgpoly/classify.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>

#include "cfgpoly/combinatorics.hpp"
#include "cfgpoly/equivalence.hpp"
#include "cfgpoly/error.hpp"
#include "cfgpoly/ideals.hpp"

namespace cfgpoly {

namespace {

struct NameEntry {
  ClassId id;
  std::string_view name;
};

constexpr std::array<NameEntry, 12> kNames{{
    {ClassId::kRank0, "RANK_0"},
    {ClassId::kRank1, "RANK_1"},
    {ClassId::kProduct2, "PRODUCT_2"},
    {ClassId::kConic, "CONIC"},
    {ClassId::kR3D3, "R3_D3_PRODUCT"},
    {ClassId::kR4OneZero, "R3_D4_ONE_ZERO"},
    {ClassId::kR4AllNonzero, "R3_D4_ALL_NONZERO"},
    {ClassId::kR5Dependent, "R3_D5_DEPENDENT_PAIR"},
    {ClassId::kR5Independent, "R3_D5_INDEPENDENT"},
    {ClassId::kR6Generic, "R3_D6_GENERIC"},
    {ClassId::kProduct, "PRODUCT"},
    {ClassId::kCompleteGraph, "COMPLETE_GRAPH"},
}};

using Entry = std::initializer_list<int>;  // 1-based y indices, each with coefficient 1

SymbolicForm pattern(std::size_t k, std::initializer_list<std::initializer_list<Entry>> rows) {
  const VarSet y = VarSet::numbered("y", k);
  SymbolicForm q(y, rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& entry : row) {
      LinearForm f(y);
      for (int v : entry) f.coeffs[static_cast<std::size_t>(v - 1)] += 1;
      q.set(i, j, std::move(f));
      ++j;
    }
    ++i;
  }
  return q;
}

SymbolicForm diagonal_pattern(std::size_t r) {
  const VarSet y = VarSet::numbered("y", r);
  SymbolicForm q(y, r);
  for (std::size_t i = 0; i < r; ++i) q.set(i, i, LinearForm::variable(y, i));
  return q;
}

LinearForm combine(const RatMatrix& t, std::size_t i, std::size_t j, const SymbolicForm& q) {
  LinearForm out(q.vars());
  for (std::size_t a = 0; a < q.size(); ++a) {
    if (is_zero(t(i, a))) continue;
    for (std::size_t b = 0; b < q.size(); ++b) {
      if (is_zero(t(j, b))) continue;
      out += (t(i, a) * t(j, b)) * q(a, b);
    }
  }
  return out;
}

bool parallel(const std::array<Rat, 2>& u, const std::array<Rat, 2>& v) {
  return u[0] * v[1] == u[1] * v[0];
}

bool is_zero_pair(const std::array<Rat, 2>& u) { return is_zero(u[0]) && is_zero(u[1]); }

ClassLabel base_label(const ReductionReport& rep, ClassId id) {
  ClassLabel label;
  label.rank = rep.original.rank();
  label.r2 = rep.nu;
  label.id = id;
  label.normal_form = normal_form(id);
  return label;
}

}  // namespace

std::string_view class_name(ClassId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "UNKNOWN";
}

std::optional<ClassId> parse_class_id(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

SymbolicForm normal_form_matrix(ClassId id) {
  switch (id) {
    case ClassId::kRank0:
      return SymbolicForm(VarSet(), 0);
    case ClassId::kRank1:
      return diagonal_pattern(1);
    case ClassId::kProduct2:
      return diagonal_pattern(2);
    case ClassId::kConic:
      return pattern(3, {{{1}, {3}}, {{3}, {2}}});
    case ClassId::kR3D3:
      return diagonal_pattern(3);
    case ClassId::kR4OneZero:
      return pattern(4, {{{1}, {4}, {}}, {{4}, {2}, {}}, {{}, {}, {3}}});
    case ClassId::kR4AllNonzero:
      return pattern(4, {{{1}, {4}, {4}}, {{4}, {2}, {4}}, {{4}, {4}, {3}}});
    case ClassId::kR5Dependent:
      return pattern(5, {{{1}, {4}, {5}}, {{4}, {2}, {}}, {{5}, {}, {3}}});
    case ClassId::kR5Independent:
      return pattern(5, {{{1}, {4}, {4, 5}}, {{4}, {2}, {5}}, {{4, 5}, {5}, {3}}});
    case ClassId::kR6Generic:
      return pattern(6, {{{1}, {4}, {6}}, {{4}, {2}, {5}}, {{6}, {5}, {3}}});
    case ClassId::kProduct:
    case ClassId::kCompleteGraph:
      break;
  }
  throw Error(Errc::kInvalidInput,
              "no fixed normal-form matrix for class " + std::string(class_name(id)));
}

Poly normal_form(ClassId id) { return form_determinant(normal_form_matrix(id)); }

Configuration class_representative(ClassId id) {
  switch (id) {
    case ClassId::kRank0:
      return Configuration({}, RatMatrix());
    case ClassId::kRank1:
      return Configuration(RatMatrix::from_ints({{1}}));
    case ClassId::kProduct2:
      return Configuration(RatMatrix::from_ints({{1, 0}, {0, 1}}));
    case ClassId::kConic:
      return Configuration(RatMatrix::from_ints({{1, 0, 1}, {0, 1, 1}}));
    case ClassId::kR3D3:
      return Configuration(RatMatrix::identity(3));
    case ClassId::kR4OneZero:
      return Configuration(RatMatrix::from_ints({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}}));
    case ClassId::kR4AllNonzero:
      return Configuration(RatMatrix::from_ints({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
    case ClassId::kR5Dependent:
      return Configuration(
          RatMatrix::from_ints({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
    case ClassId::kR5Independent:
      return Configuration(
          RatMatrix::from_ints({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 1, 3}}));
    case ClassId::kR6Generic:
      return Configuration(
          RatMatrix::from_ints({{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 2, 3}, {0, 0, 1, 1, 3, 2}}));
    case ClassId::kProduct:
    case ClassId::kCompleteGraph:
      break;
  }
  throw Error(Errc::kInvalidInput,
              "no fixed representative for class " + std::string(class_name(id)));
}

ContactCert congruence_cert(const SymbolicForm& q, const RatMatrix& t, const SymbolicForm& n) {
  const std::size_t r = q.size();
  if (t.rows() != r || t.cols() != r || n.size() != r) {
    throw Error(Errc::kDimensionMismatch, "congruence_cert: sizes differ");
  }
  const std::size_t nx = q.vars().size();
  const std::size_t k = n.vars().size();
  if (k > nx) throw Error(Errc::kInternal, "congruence_cert: more normal-form variables than x");

  std::vector<LinearForm> r_entries;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) r_entries.push_back(combine(t, i, j, q));

  RatMatrix m(k, nx);
  for (std::size_t v = 0; v < k; ++v) {
    const LinearForm unit = LinearForm::variable(n.vars(), v);
    bool found = false;
    for (std::size_t i = 0; i < r && !found; ++i) {
      for (std::size_t j = i; j < r && !found; ++j) {
        if (n(i, j) == unit) {
          for (std::size_t e = 0; e < nx; ++e) m(v, e) = r_entries[i * r + j].coeffs[e];
          found = true;
        }
      }
    }
    if (!found) {
      throw Error(Errc::kInternal, "congruence_cert: '" + n.vars()[v] + "' is not an entry");
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Rat> expect(nx);
      for (std::size_t v = 0; v < k; ++v) {
        const Rat& c = n(i, j).coeffs[v];
        if (is_zero(c)) continue;
        for (std::size_t e = 0; e < nx; ++e) expect[e] += c * m(v, e);
      }
      if (expect != r_entries[i * r + j].coeffs) {
        throw Error(Errc::kInternal, "congruence_cert: transformed form does not match the "
                                     "normal-form pattern at (" +
                                         std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                         ")");
      }
    }
  }
  const Rat d = r == 0 ? Rat(1) : determinant(t);
  if (is_zero(d)) throw Error(Errc::kSingularMatrix, "congruence_cert: t is singular");
  return make_cert(complete_to_invertible(m), 1 / (d * d), q.vars(), n.vars());
}

std::vector<RatMatrix> conic_steps() {
  const Rat h(1, 2);
  RatMatrix s1 = RatMatrix::identity(3);
  s1(1, 0) = 1;  // x2 -> x1 + x2
  RatMatrix s2 = RatMatrix::identity(3);
  s2(0, 1) = -h;  // x1 -> x1 - (x2 + 2 x3) / 2
  s2(0, 2) = -1;
  RatMatrix s3 = RatMatrix::identity(3);
  s3(1, 1) = 2;  // x2 -> 2 x2
  RatMatrix s4 = RatMatrix::identity(3);
  s4(0, 0) = h;  // x1 -> (x1 + x2) / 2, x2 -> (x2 - x1) / 2
  s4(0, 1) = h;
  s4(1, 0) = -h;
  s4(1, 1) = h;
  return {s1, s2, s3, s4};
}

ContactCert conic_cert(const VarSet& nf_vars, const VarSet& k3_vars) {
  RatMatrix ell = RatMatrix::identity(3);
  for (const auto& s : conic_steps()) ell = ell * s;
  return make_cert(std::move(ell), 1, nf_vars, k3_vars);
}

ClassLabel classify_rank2(const Configuration& w) {
  if (w.rank() != 2) throw Error(Errc::kWrongRank, "classify_rank2: rank is not 2");
  const ReductionReport rep = reduce_variables(w);
  const SymbolicForm q = configuration_form(rep.reduced);
  ClassLabel label;
  ContactCert inner;
  if (rep.nu == 2) {
    label = base_label(rep, ClassId::kProduct2);
    inner = congruence_cert(q, RatMatrix::identity(2), normal_form_matrix(ClassId::kProduct2));
  } else {
    label = base_label(rep, ClassId::kConic);
    const auto cone = cone_graph_model(rep.reduced);
    if (!cone) throw Error(Errc::kInternal, "classify_rank2: products are dependent");
    const ContactCert to_nf =
        invert_cert(conic_cert(label.normal_form.vars(), cone->cert.target_vars));
    inner = compose_certs(cone->cert, to_nf);
  }
  label.cert = compose_certs(rep.cert, inner);
  return label;
}

ClassLabel classify_rank3(const Configuration& w, const ClassifyOptions& opts) {
  if (w.rank() != 3) throw Error(Errc::kWrongRank, "classify_rank3: rank is not 3");
  const ReductionReport rep = reduce_variables(w);
  const Configuration& red = rep.reduced;
  const SymbolicForm q = configuration_form(red);
  const RatMatrix& b = red.basis();

  std::vector<std::size_t> free_cols;
  for (std::size_t e = 0; e < red.size(); ++e) {
    if (std::find(red.pivots().begin(), red.pivots().end(), e) == red.pivots().end()) {
      free_cols.push_back(e);
    }
  }

  ClassId id = ClassId::kR3D3;
  RatMatrix t = RatMatrix::identity(3);
  ClassLabel label;
  switch (rep.nu) {
    case 3:
      break;
    case 4: {
      const std::vector<Rat> a = b.column(free_cols.at(0));
      const auto zeros = std::count_if(a.begin(), a.end(), [](const Rat& c) { return is_zero(c); });
      if (zeros == 1) {
        id = ClassId::kR4OneZero;
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < 3; ++i) {
          if (!is_zero(a[i])) order.push_back(i);
        }
        for (std::size_t i = 0; i < 3; ++i) {
          if (is_zero(a[i])) order.push_back(i);
        }
        t = RatMatrix(3, 3);
        for (std::size_t k = 0; k < 3; ++k) t(k, order[k]) = 1;
      } else if (zeros == 0) {
        id = ClassId::kR4AllNonzero;
        for (std::size_t i = 0; i < 3; ++i) t(i, i) = 1 / a[i];
      } else {
        throw Error(Errc::kNotReduced, "classify_rank3: column with two zeros after reduction");
      }
      break;
    }
    case 5: {
      const std::vector<Rat> c1 = b.column(free_cols.at(0));
      const std::vector<Rat> c2 = b.column(free_cols.at(1));
      auto p = [&](std::size_t i, std::size_t j) {
        return std::array<Rat, 2>{c1[i] * c1[j], c2[i] * c2[j]};
      };
      std::array<std::size_t, 3> s{0, 1, 2};
      bool dependent = false;
      do {
        const auto u = p(s[0], s[1]);
        const auto v = p(s[1], s[2]);
        if (!is_zero_pair(u) && parallel(u, v)) {
          const Rat lambda = is_zero(u[0]) ? Rat(v[1] / u[1]) : Rat(v[0] / u[0]);
          RatMatrix perm(3, 3);
          for (std::size_t k = 0; k < 3; ++k) perm(k, s[k]) = 1;
          RatMatrix e = RatMatrix::identity(3);
          e(2, 0) = -lambda;
          t = e * perm;
          dependent = true;
        }
      } while (!dependent && std::next_permutation(s.begin(), s.end()));
      if (dependent) {
        id = ClassId::kR5Dependent;
      } else {
        id = ClassId::kR5Independent;
        const auto p01 = p(0, 1);
        const auto p12 = p(1, 2);
        const auto p02 = p(0, 2);
        const Rat det = p01[0] * p12[1] - p01[1] * p12[0];
        const Rat lambda = (p02[0] * p12[1] - p02[1] * p12[0]) / det;
        const Rat mu = (p01[0] * p02[1] - p01[1] * p02[0]) / det;
        t(0, 0) = 1 / mu;
        t(2, 2) = 1 / lambda;
      }
      break;
    }
    case 6:
      id = ClassId::kR6Generic;
      break;
    default:
      throw Error(Errc::kNotReduced, "classify_rank3: unexpected r2 = " + std::to_string(rep.nu));
  }

  label = base_label(rep, id);
  const ContactCert inner = congruence_cert(q, t, normal_form_matrix(id));
  label.cert = compose_certs(rep.cert, inner);

  if (rep.nu == 4) {
    label.matroid_connected = is_connected(matroid(red));
    label.cross_check_ok = *label.matroid_connected == (id == ClassId::kR4AllNonzero);
  } else if (rep.nu == 5) {
    const bool dependent = id == ClassId::kR5Dependent;
    label.matroid_uniform = matroid(red).bases().size() == binomial(5, 3);
    label.cross_check_ok = *label.matroid_uniform != dependent;
    if (opts.ideal_cross_check) {
      const VarSet y = VarSet::numbered("y", 5);
      auto v = [&](std::size_t i) { return Poly::variable(y, i - 1); };
      auto pulled = [&](std::initializer_list<Poly> gens) {
        std::vector<Poly> out;
        for (const auto& g : gens) out.push_back(rename(pull_back(g, inner), q.vars()));
        return Ideal(q.vars(), std::move(out));
      };
      const Ideal left = pulled({v(1) * v(2) - v(4) * v(4), v(3), v(5)});
      const Ideal right = pulled({v(1) * v(3) - v(5) * v(5), v(2), v(4)});
      label.two_component_minors =
          ideal_equal(submaximal_minors_ideal(q), intersect(left, right));
      label.cross_check_ok = label.cross_check_ok && *label.two_component_minors == dependent;
    }
  }
  return label;
}

ClassLabel classify(const Configuration& w, const ClassifyOptions& opts) {
  switch (w.rank()) {
    case 0:
    case 1: {
      const ReductionReport rep = reduce_variables(w);
      const ClassId id = w.rank() == 0 ? ClassId::kRank0 : ClassId::kRank1;
      ClassLabel label = base_label(rep, id);
      if (w.rank() == 0) {
        label.cert = rep.cert;
      } else {
        const ContactCert inner = congruence_cert(configuration_form(rep.reduced),
                                                  RatMatrix::identity(1), normal_form_matrix(id));
        label.cert = compose_certs(rep.cert, inner);
      }
      return label;
    }
    case 2:
      return classify_rank2(w);
    case 3:
      return classify_rank3(w, opts);
    default:
      throw Error(Errc::kWrongRank, "classify: only ranks 0..3 have finitely many classes");
  }
}

Poly complete_graph_polynomial(std::size_t r) {
  GraphSpec g;
  for (std::size_t i = 1; i <= r; ++i) g.vertices.push_back("v" + std::to_string(i));
  g.vertices.push_back("v0");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
  for (std::size_t i = 0; i < r; ++i) g.edges.emplace_back(g.vertices[i], "v0");
  for (std::size_t k = 1; k <= g.edges.size(); ++k) {
    g.edge_labels.push_back("y" + std::to_string(k));
  }
  return kirchhoff(g).psi;
}

std::optional<ClassLabel> extremal_class(const Configuration& w) {
  const std::size_t r = w.rank();
  const ReductionReport rep = reduce_variables(w);
  if (rep.nu == r) {
    ClassLabel label;
    label.rank = r;
    label.r2 = r;
    label.id = ClassId::kProduct;
    const SymbolicForm nf = diagonal_pattern(r);
    label.normal_form = form_determinant(nf);
    if (r == 0) {
      label.cert = rep.cert;
    } else {
      label.cert = compose_certs(
          rep.cert, congruence_cert(configuration_form(rep.reduced), RatMatrix::identity(r), nf));
    }
    return label;
  }
  if (rep.nu == binomial(r + 1, 2)) {
    auto cone = cone_graph_model(rep.reduced);
    if (!cone) throw Error(Errc::kInternal, "extremal_class: products are dependent");
    ClassLabel label;
    label.rank = r;
    label.r2 = rep.nu;
    label.id = ClassId::kCompleteGraph;
    label.normal_form = complete_graph_polynomial(r);
    cone->cert.target_vars = label.normal_form.vars();
    label.cert = compose_certs(rep.cert, cone->cert);
    return label;
  }
  return std::nullopt;
}

}  // namespace cfgpoly
