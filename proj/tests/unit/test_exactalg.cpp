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

#include "cfgpoly/combinatorics.hpp"
#include "common.hpp"

namespace cfgpoly {
namespace {

using namespace testing;

TEST(Rational, ParsesAndFormats) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat("-7"), Rat(-7));
  EXPECT_EQ(parse_rat("+5/10"), Rat(1, 2));
  EXPECT_EQ(to_string(Rat(3, 2)), "3/2");
  EXPECT_EQ(to_string(parse_rat("-4/2")), "-2");
  EXPECT_EQ(parse_rat(to_string(Rat(-22, 7))), Rat(-22, 7));
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_ERRC(parse_rat("1/0"), kInvalidInput);
  EXPECT_ERRC(parse_rat("abc"), kInvalidInput);
  EXPECT_ERRC(parse_rat("1/-2"), kInvalidInput);
  EXPECT_ERRC(parse_rat(""), kInvalidInput);
  EXPECT_ERRC(parse_rat("1.5"), kInvalidInput);
}

TEST(Rref, ProportionalRows) {
  const Rref r = rref(ints({{2, 4}, {1, 2}}));
  EXPECT_EQ(r.matrix, ints({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, IdentityAndNormalizedForms) {
  const Rref id = rref(RatMatrix::identity(3));
  EXPECT_TRUE(id.matrix.is_identity());
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));
  const RatMatrix a{ints({{1, 0, 0, 1}, {0, 1, 0, 5}, {0, 0, 1, 7}})};
  EXPECT_EQ(rref(a).matrix, a);
  EXPECT_EQ(rref(a).pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, PreservesRowSpaceOnRandomMatrices) {
  oracle::Rng rng;
  for (int t = 0; t < 50; ++t) {
    const auto m = rng.matrix(rng.uniform(1, 4), rng.uniform(1, 6), -3, 3);
    const Rref r = rref(from_mat(m));
    EXPECT_TRUE(oracle::same_row_space(m, oracle::to_mat(r.matrix)));
    EXPECT_EQ(rank(from_mat(m)), oracle::gauss_rank(m));
    EXPECT_EQ(r.pivots.size(), oracle::gauss_rank(m));
    EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
  }
}

TEST(Kernel, Examples) {
  const RatMatrix k = kernel_basis(ints({{1, 1}}));
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k(0, 0), -k(0, 1));
  EXPECT_EQ(kernel_basis(ints({{1, 2}, {3, 4}})).rows(), 0u);
  const RatMatrix m = ints({{1, 2, 3}});
  const RatMatrix k3 = kernel_basis(m);
  EXPECT_EQ(k3.rows(), 2u);
  EXPECT_EQ(rank(k3), 2u);
  EXPECT_EQ(m * k3.transpose(), RatMatrix(1, 2));
}

TEST(Kernel, AnnihilatesRandomMatrices) {
  oracle::Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto m = rng.matrix(rng.uniform(1, 4), n, -3, 3);
    const RatMatrix k = kernel_basis(from_mat(m));
    EXPECT_EQ(k.rows(), n - oracle::gauss_rank(m));
    if (k.rows() > 0) EXPECT_EQ(from_mat(m) * k.transpose(), RatMatrix(m.size(), k.rows()));
  }
}

TEST(Invert, Examples) {
  EXPECT_TRUE(invert(RatMatrix::identity(3)).is_identity());
  RatMatrix half(2, 2);
  half(0, 0) = Rat(1, 2);
  half(1, 1) = Rat(1, 4);
  EXPECT_EQ(invert(ints({{2, 0}, {0, 4}})), half);
  EXPECT_ERRC(invert(ints({{1, 2}, {2, 4}})), kSingularMatrix);
  EXPECT_ERRC(invert(ints({{1, 2, 3}})), kDimensionMismatch);
}

TEST(Invert, MultipliesBackOnRandomMatrices) {
  oracle::Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const RatMatrix m = from_mat(rng.invertible(4));
    EXPECT_TRUE((m * invert(m)).is_identity());
    EXPECT_TRUE((invert(m) * m).is_identity());
  }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  oracle::Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    auto m = rng.matrix(n, n, -4, 4);
    m[0][0] = rng.nonzero_rat();
    EXPECT_EQ(determinant(from_mat(m)), oracle::cofactor_det(m));
  }
  EXPECT_EQ(determinant(RatMatrix(0, 0)), 1);
}

TEST(CompleteToInvertible, AppendsUnitVectors) {
  const RatMatrix c = complete_to_invertible(ints({{0, 1, 1}}));
  EXPECT_EQ(c, ints({{0, 1, 1}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_ERRC(complete_to_invertible(ints({{1, 1}, {2, 2}})), kSingularMatrix);
}

TEST(Combinatorics, CountsAndOrder) {
  EXPECT_EQ(combinations(5, 2).size(), 10u);
  EXPECT_EQ(combinations(4, 0).size(), 1u);
  EXPECT_EQ(multisets(3, 2).size(), 6u);
  EXPECT_EQ(multisets(3, 2).front(), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(binomial(16, 8), 12870u);
  EXPECT_EQ(binomial(3, 5), 0u);
}

}  // namespace
}  // namespace cfgpoly
