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
#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/equivalence.hpp"
#include "common.hpp"

namespace cfgpoly {
namespace {

using namespace testing;

const ClassId kAll[] = {ClassId::kRank0,        ClassId::kRank1,        ClassId::kProduct2,
                        ClassId::kConic,        ClassId::kR3D3,         ClassId::kR4OneZero,
                        ClassId::kR4AllNonzero, ClassId::kR5Dependent,  ClassId::kR5Independent,
                        ClassId::kR6Generic,    ClassId::kProduct,      ClassId::kCompleteGraph};

void expect_verified(const Configuration& w, const ClassLabel& l) {
  ASSERT_TRUE(l.cert.has_value());
  EXPECT_TRUE(check_cert(psi_det(w), l.normal_form, *l.cert));
  oracle::Rng rng;
  EXPECT_TRUE(oracle::cert_holds_at_points(psi_det(w), l.normal_form, *l.cert, rng.engine(), 3));
}

std::vector<std::vector<Poly>> oracle_matrix(const SymbolicForm& q) {
  std::vector<std::vector<Poly>> m(q.size(), std::vector<Poly>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m[i][j] = q(i, j).to_poly();
  return m;
}

TEST(ClassNames, RoundTrip) {
  for (ClassId id : kAll) EXPECT_EQ(parse_class_id(class_name(id)), id);
  EXPECT_FALSE(parse_class_id("NOPE").has_value());
}

TEST(NormalForms, TableDeterminants) {
  const VarSet y = VarSet::numbered("y", 4);
  const VarSet y3 = VarSet::numbered("y", 3);
  EXPECT_EQ(normal_form(ClassId::kR3D3), v(y3, 1) * v(y3, 2) * v(y3, 3));
  EXPECT_EQ(normal_form(ClassId::kR4OneZero),
            (v(y, 1) * v(y, 2) - v(y, 4) * v(y, 4)) * v(y, 3));
  for (ClassId id : {ClassId::kConic, ClassId::kR3D3, ClassId::kR4OneZero, ClassId::kR4AllNonzero,
                     ClassId::kR5Dependent, ClassId::kR5Independent, ClassId::kR6Generic}) {
    const SymbolicForm q = normal_form_matrix(id);
    EXPECT_EQ(normal_form(id), oracle::cofactor_det(oracle_matrix(q))) << class_name(id);
  }
  // Q_{1,1}: [[y1,y4,y4],[y4,y2,y4],[y4,y4,y3]].
  const SymbolicForm q11 = normal_form_matrix(ClassId::kR4AllNonzero);
  EXPECT_EQ(q11(0, 2).to_poly(), v(y, 4));
  EXPECT_EQ(q11(1, 2).to_poly(), v(y, 4));
  const SymbolicForm q5 = normal_form_matrix(ClassId::kR5Independent);
  const VarSet y5 = q5.vars();
  EXPECT_EQ(q5(0, 2).to_poly(), v(y5, 4) + v(y5, 5));
  EXPECT_EQ(q5(1, 2).to_poly(), v(y5, 5));
}

TEST(Representatives, ClassifyToThemselves) {
  for (ClassId id : kAll) {
    if (id == ClassId::kProduct || id == ClassId::kCompleteGraph) continue;
    const Configuration w = class_representative(id);
    const ClassLabel l = classify(w);
    EXPECT_EQ(l.id, id) << class_name(id);
    EXPECT_TRUE(l.cross_check_ok) << class_name(id);
    expect_verified(w, l);
  }
}

TEST(Rank2, Examples) {
  const ClassLabel free2 = classify(Configuration(RatMatrix::identity(2)));
  EXPECT_EQ(free2.id, ClassId::kProduct2);
  const Configuration k3 = cfg({{1, 0, 1}, {0, 1, -1}});
  const ClassLabel conic = classify(k3);
  EXPECT_EQ(conic.id, ClassId::kConic);
  expect_verified(k3, conic);
  const Configuration vdm = cfg({{1, 1, 1}, {1, 2, 3}});
  const ClassLabel l = classify(vdm);
  EXPECT_EQ(l.id, ClassId::kConic);
  EXPECT_EQ(l.r2, 3u);
  expect_verified(vdm, l);
  EXPECT_ERRC(classify_rank2(Configuration(RatMatrix::identity(3))), kWrongRank);
}

TEST(Rank2, ConicStepsMultiplyOut) {
  const auto steps = conic_steps();
  ASSERT_EQ(steps.size(), 4u);
  RatMatrix ell = RatMatrix::identity(3);
  for (const auto& s : steps) ell = ell * s;
  const VarSet x = VarSet::numbered("x", 3);
  const Poly k3 = v(x, 1) * v(x, 2) + v(x, 2) * v(x, 3) + v(x, 3) * v(x, 1);
  EXPECT_EQ(substitute_linear(k3, ell, x), v(x, 1) * v(x, 2) - v(x, 3) * v(x, 3));
}

TEST(Rank3, TableOneExamples) {
  const Configuration one_zero = cfg({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}});
  const ClassLabel a = classify(one_zero);
  EXPECT_EQ(a.id, ClassId::kR4OneZero);
  EXPECT_EQ(a.matroid_connected, false);
  expect_verified(one_zero, a);

  const Configuration all_nonzero = cfg({{1, 0, 0, 1}, {0, 1, 0, 2}, {0, 0, 1, 3}});
  const ClassLabel b = classify(all_nonzero);
  EXPECT_EQ(b.id, ClassId::kR4AllNonzero);
  EXPECT_EQ(b.matroid_connected, true);
  expect_verified(all_nonzero, b);

  const Configuration independent = cfg({{1, 0, 0, 1, 1}, {0, 1, 0, 2, 3}, {0, 0, 1, 3, 7}});
  ASSERT_EQ(hadamard_power(independent, 2).rank(), 5u);
  const ClassLabel c = classify(independent);
  EXPECT_EQ(c.id, ClassId::kR5Independent);
  EXPECT_EQ(c.two_component_minors, false);
  expect_verified(independent, c);

  const Configuration dependent = cfg({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 0, 1}});
  const ClassLabel d = classify(dependent);
  EXPECT_EQ(d.r2, 5u);
  EXPECT_EQ(d.id, ClassId::kR5Dependent);
  EXPECT_EQ(d.two_component_minors, true);
  EXPECT_EQ(d.matroid_uniform, false);
  expect_verified(dependent, d);

  ClassifyOptions fast;
  fast.ideal_cross_check = false;
  const ClassLabel e = classify(dependent, fast);
  EXPECT_EQ(e.id, ClassId::kR5Dependent);
  EXPECT_FALSE(e.two_component_minors.has_value());
}

TEST(Rank3, UnreducedInputsAreReducedFirst) {
  const Configuration w =
      cfg({{1, 0, 0, 1, 2, 0, 0}, {0, 1, 0, 1, 2, 0, 0}, {0, 0, 1, 0, 0, 0, 5}});
  const ClassLabel l = classify(w);
  EXPECT_EQ(l.id, ClassId::kR4OneZero);
  expect_verified(w, l);
}

TEST(Classify, LowRanksAndLimits) {
  const Configuration zero({"a"}, RatMatrix(0, 1));
  const ClassLabel z = classify(zero);
  EXPECT_EQ(z.id, ClassId::kRank0);
  EXPECT_EQ(z.normal_form.num_terms(), 1u);
  const Configuration line = cfg({{2, 3, 0}});
  const ClassLabel l = classify(line);
  EXPECT_EQ(l.id, ClassId::kRank1);
  expect_verified(line, l);
  EXPECT_ERRC(classify(Configuration(RatMatrix::identity(4))), kWrongRank);
}

TEST(Extremal, ProductAndCompleteGraph) {
  const Configuration free4(RatMatrix::identity(4));
  const auto p = extremal_class(free4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->id, ClassId::kProduct);
  expect_verified(free4, *p);

  const Configuration generic = class_representative(ClassId::kR6Generic);
  const auto k = extremal_class(generic);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->id, ClassId::kCompleteGraph);
  EXPECT_EQ(k->normal_form.num_terms(), 16u);
  expect_verified(generic, *k);

  EXPECT_FALSE(extremal_class(class_representative(ClassId::kR5Independent)).has_value());
}

TEST(Extremal, CompleteGraphPolynomialCountsTrees) {
  // Cayley: (r + 1)^(r - 1) spanning trees of K_{r+1}.
  EXPECT_EQ(complete_graph_polynomial(2).num_terms(), 3u);
  EXPECT_EQ(complete_graph_polynomial(3).num_terms(), 16u);
  EXPECT_EQ(complete_graph_polynomial(4).num_terms(), 125u);
}

TEST(Congruence, RejectsSingularTransform) {
  const SymbolicForm q = normal_form_matrix(ClassId::kR3D3);
  EXPECT_ERRC(congruence_cert(q, RatMatrix(3, 3), q), kSingularMatrix);
}

}  // namespace
}  // namespace cfgpoly
