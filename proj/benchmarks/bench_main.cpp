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

#include <benchmark/benchmark.h>

#include "cfgpoly/classify.hpp"
#include "cfgpoly/configpoly.hpp"
#include "cfgpoly/configuration.hpp"
#include "cfgpoly/equivalence.hpp"
#include "cfgpoly/family.hpp"
#include "cfgpoly/ideals.hpp"

namespace {

using namespace cfgpoly;

// Incidence configuration of K_n.
Configuration complete_graph(std::size_t n) {
  GraphSpec g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
  return kirchhoff(g).config;
}

Configuration vandermonde(std::size_t r, std::size_t n) {
  RatMatrix m(r, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat x = 1;
    for (std::size_t i = 0; i < r; ++i, x *= static_cast<long>(j + 1)) m(i, j) = x;
  }
  return Configuration(m);
}

void BM_PsiDet(benchmark::State& state) {
  const Configuration w = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi_det(w));
}
BENCHMARK(BM_PsiDet)->DenseRange(3, 5);

void BM_PsiBasisExpansion(benchmark::State& state) {
  const Configuration w = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi_basis_expansion(w));
}
BENCHMARK(BM_PsiBasisExpansion)->DenseRange(3, 5);

void BM_Reduce(benchmark::State& state) {
  const Configuration w = vandermonde(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_variables(w));
}
BENCHMARK(BM_Reduce)->Arg(6)->Arg(8)->Arg(10);

void BM_ClassifyRank3(benchmark::State& state) {
  const Configuration w = class_representative(static_cast<ClassId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(w));
}
BENCHMARK(BM_ClassifyRank3)
    ->Arg(static_cast<int>(ClassId::kR4AllNonzero))
    ->Arg(static_cast<int>(ClassId::kR5Dependent))
    ->Arg(static_cast<int>(ClassId::kR6Generic));

void BM_MinorsIntersection(benchmark::State& state) {
  const SymbolicForm q = normal_form_matrix(ClassId::kR5Dependent);
  const VarSet& y = q.vars();
  auto v = [&](std::size_t i) { return Poly::variable(y, i - 1); };
  const Ideal a(y, {v(1) * v(2) - v(4) * v(4), v(3), v(5)});
  const Ideal b(y, {v(1) * v(3) - v(5) * v(5), v(2), v(4)});
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_equal(submaximal_minors_ideal(q), intersect(a, b)));
}
BENCHMARK(BM_MinorsIntersection);

void BM_FamilyDecomposition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(family_evidence(Rat(2)));
}
BENCHMARK(BM_FamilyDecomposition)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
