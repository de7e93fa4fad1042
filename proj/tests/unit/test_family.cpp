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

#include "cfgpoly/family.hpp"
#include "common.hpp"

namespace cfgpoly {
namespace {

using namespace testing;

TEST(Family, ConfigAndForm) {
  const Configuration w = family_config({2, 1, 1, 1});
  EXPECT_EQ(w.rank(), 4u);
  EXPECT_EQ(w.size(), 6u);
  EXPECT_EQ(hadamard_dims(family_config({q("2/3"), 5, q("-1/2"), 7}), 2).dim(2), 6u);
  EXPECT_ERRC(family_config({0, 1, 1, 1}), kZeroParameter);
  EXPECT_ERRC(q_m(0), kZeroM);
  const SymbolicForm q = q_m(3);
  EXPECT_EQ(q.size(), 4u);
  EXPECT_EQ(q.vars().size(), 6u);
}

TEST(Family, PsiShape) {
  const Poly p = psi_m(2);
  const auto h = is_homogeneous(p);
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(h.degree, 4u);
  // Determinant of the displayed form, via cofactors.
  const SymbolicForm q = q_m(2);
  std::vector<std::vector<Poly>> m(4, std::vector<Poly>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = q(i, j).to_poly();
  EXPECT_EQ(p, oracle::cofactor_det(m));
  // The y6^2 terms carry the pattern y6^2 (y1 + m^2 y2 + y4 - 2 m y6) times y3.
  for (const Rat& mm : {Rat(2), Rat(3), Rat(1, 2)}) {
    const Poly pm = psi_m(mm);
    EXPECT_EQ(pm.coefficient({1, 0, 1, 0, 0, 2}), -1);
    EXPECT_EQ(pm.coefficient({0, 1, 1, 0, 0, 2}), -mm * mm);
    EXPECT_EQ(pm.coefficient({0, 0, 1, 1, 0, 2}), -1);
    EXPECT_EQ(pm.coefficient({0, 0, 1, 0, 0, 3}), 2 * mm);
  }
}

TEST(FamilyCert, UnitParameters) {
  const ContactCert c = lemma54_cert({1, 1, 1, 1});
  EXPECT_EQ(c.lambda, 1);
  EXPECT_TRUE(check_cert(psi_det(family_config({1, 1, 1, 1})), psi_m(1), c));
}

TEST(FamilyCert, ExplicitAndRandomParameters) {
  const FamilyParams p{2, 3, 1, 5};
  const ContactCert c = lemma54_cert(p);
  EXPECT_EQ(c.lambda, Rat(4 * 9 * 25));
  EXPECT_TRUE(check_cert(psi_det(family_config(p)), psi_m(2), c));
  const ContactCert round = compose_certs(c, invert_cert(c));
  EXPECT_TRUE(round.ell.is_identity());
  EXPECT_EQ(round.lambda, 1);

  oracle::Rng rng(47);
  for (int t = 0; t < 10; ++t) {
    FamilyParams r;
    r.a1 = rng.nonzero_rat();
    r.a2 = rng.nonzero_rat();
    r.b1 = rng.nonzero_rat();
    r.b2 = rng.nonzero_rat();
    const Poly source = psi_det(family_config(r));
    EXPECT_TRUE(check_cert(source, psi_m(r.m()), lemma54_cert(r)));
    EXPECT_TRUE(
        oracle::cert_holds_at_points(source, psi_m(r.m()), lemma54_cert(r), rng.engine(), 3));
  }
}

TEST(Inversion, Certificates) {
  for (const Rat& m : {Rat(1), Rat(2), Rat(3), Rat(1, 2), Rat(5), Rat(-3, 4)}) {
    const ContactCert c = inversion_cert(m);
    EXPECT_TRUE(check_cert(psi_m(m), psi_m(1 / m), c)) << m;
  }
  const ContactCert twice = compose_certs(inversion_cert(2), inversion_cert(Rat(1, 2)));
  EXPECT_TRUE(check_cert(psi_m(2), psi_m(2), twice));
  EXPECT_ERRC(inversion_cert(0), kZeroM);
}

TEST(Decomposition, HoldsForMEqualsTwo) {
  const Rat m(2);
  const auto p = prime_components(m);
  const Ideal i2 = submaximal_minors_ideal(q_m(m));
  EXPECT_TRUE(ideal_equal(i2, intersect({p[0], p[1], p[2]})));
}

TEST(Decomposition, DisplayedComponentsFailAtMEqualsOne) {
  // For m = 1 the quadrics of the first displayed component factor as
  // y4 (y2 - y5 - y6) and y3 (y2 - y5 - y6), and that component no longer
  // contains I_2(Q_1). The intersection is then strictly smaller than I_2(Q_1).
  const auto p = prime_components(Rat(1));
  const Ideal i2 = submaximal_minors_ideal(q_m(1));
  const VarSet& y = p[0].vars;
  EXPECT_TRUE(contains(p[0], v(y, 4) * (v(y, 2) - v(y, 5) - v(y, 6))));
  EXPECT_FALSE(contains(p[0], i2));
  EXPECT_TRUE(contains(p[1], i2));
  EXPECT_TRUE(contains(p[2], i2));
  const Ideal cap = intersect({p[0], p[1], p[2]});
  EXPECT_TRUE(contains(i2, cap));
  EXPECT_FALSE(contains(cap, i2));
  EXPECT_FALSE(family_evidence(Rat(1)).intersection_equal);
}

TEST(FamilyEvidence, RecoversTheParameter) {
  const FamilyEvidence e = family_evidence(Rat(3));
  EXPECT_TRUE(e.intersection_equal);
  EXPECT_TRUE(e.first_component_recovered);
  EXPECT_TRUE(e.linear_shape_ok);
  EXPECT_EQ(e.recovered_m, 3);
  EXPECT_EQ(e.invariant, std::make_pair(Rat(1, 3), Rat(3)));
  EXPECT_EQ(family_evidence(Rat(1, 3)).invariant, e.invariant);
}

TEST(FamilyEvidence, EvidenceSeparatesDistinctParameters) {
  const FamilyEvidenceReport r = family_evidence_report({Rat(5), Rat(2), Rat(1, 2), Rat(2)});
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries.front().m, Rat(1, 2));
  EXPECT_TRUE(r.invariants_separate);
  EXPECT_TRUE(r.all_ok);
  EXPECT_ERRC(family_evidence_report({Rat(0)}), kZeroM);
}

TEST(Tower, ColoopProducts) {
  EXPECT_EQ(coloop_tower(2, 0), family_config({2, 1, 1, 1}));
  for (std::size_t k = 1; k <= 3; ++k) {
    const Configuration w = coloop_tower(2, k);
    EXPECT_EQ(w.rank(), 4 + k);
    const Poly psi = psi_det(w);
    EXPECT_EQ(is_homogeneous(psi).degree, 4 + k);
    const Poly nf = psi_m_k(2, k);
    Poly product = lift(psi_m(2), nf.vars());
    for (std::size_t i = 6; i < 6 + k; ++i) product = product * Poly::variable(nf.vars(), i);
    EXPECT_EQ(nf, product);
    EXPECT_TRUE(check_cert(psi, nf, tower_cert(2, k)));
    const auto base = hadamard_dims(family_config({2, 1, 1, 1}), 3).dims;
    const auto up = hadamard_dims(w, 3).dims;
    for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(up[s], base[s] + k);
  }
}

}  // namespace
}  // namespace cfgpoly
