/*
   Copyright 2026 the repst authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file repst_benchmarks.cpp
 * @brief Microbenchmarks for the hot paths: diagram composition, the x-basis
 *        change of basis, evaluation to matrices, tableau counting, the
 *        center check and both induction-product engines.
 *
 * Character tables are memoized process-wide, so table construction is
 * deliberately not measured here; the measured paths recompute their result
 * on every call (against warm tables where tables are involved).
 */

#include <benchmark/benchmark.h>

#include <vector>

#include "repst/center_tower.hpp"
#include "repst/diagram.hpp"
#include "repst/half_braiding.hpp"
#include "repst/int_partition.hpp"
#include "repst/oracle.hpp"
#include "repst/permutation.hpp"
#include "repst/set_partition.hpp"
#include "repst/sn_characters.hpp"
#include "repst/wreath.hpp"

namespace {

using repst::CenterSimple;
using repst::CentralizerDescriptor;
using repst::DiagramMorphism;
using repst::IntPartition;
using repst::Permutation;
using repst::SetPartition;

/// A dense-ish morphism on n strands: the x-basis image of the identity,
/// which expands over all coarsenings of the n through-strands.
DiagramMorphism dense_morphism(int n) {
  return repst::x_basis_morphism(SetPartition::identity(n));
}

void BM_ComposeDiagrams(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DiagramMorphism a = dense_morphism(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::compose(a, a));
  }
}
BENCHMARK(BM_ComposeDiagrams)->DenseRange(2, 5);

void BM_XBasisMorphism(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SetPartition identity = SetPartition::identity(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::x_basis_morphism(identity));
  }
}
BENCHMARK(BM_XBasisMorphism)->DenseRange(2, 6);

void BM_EvaluateFunctor(benchmark::State& state) {
  const long d = state.range(0);
  const DiagramMorphism m = dense_morphism(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::evaluate_diagram_functor(m, d));
  }
}
BENCHMARK(BM_EvaluateFunctor)->DenseRange(2, 6);

void BM_CheckCenter(benchmark::State& state) {
  const Permutation sigma({1, 0});
  const auto idempotent = repst::trivial_idempotent(repst::centralizer_filter(sigma));
  const DiagramMorphism e = repst::group_algebra_embedding(2, idempotent);
  const DiagramMorphism braiding = repst::half_braiding(sigma, e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::check_center(e, braiding));
  }
}
BENCHMARK(BM_CheckCenter);

void BM_LrCoefficient(benchmark::State& state) {
  const IntPartition lambda({3, 2, 1});
  const IntPartition mu({3, 2, 1});
  const IntPartition nu({4, 3, 2, 2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::lr_coefficient(lambda, mu, nu));
  }
}
BENCHMARK(BM_LrCoefficient);

void BM_PieriInduction(benchmark::State& state) {
  const IntPartition lambda({4, 3, 2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::pieri_induction(lambda));
  }
}
BENCHMARK(BM_PieriInduction);

/// Character-theoretic induction product of two cycle simples (warm tables).
void BM_InductionProduct(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  CenterSimple a;
  a.n = k;
  a.mu = IntPartition({k});
  a.irrep = repst::trivial_centralizer_irrep(CentralizerDescriptor::from_cycle_type(a.mu));
  benchmark::DoNotOptimize(repst::induction_product(a, a));  // warm the tables
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::induction_product(a, a));
  }
}
BENCHMARK(BM_InductionProduct)->DenseRange(2, 4);

/// The same product recomputed by explicit cosets and traces.
void BM_BruteInductionProduct(benchmark::State& state) {
  CenterSimple a;
  a.n = 2;
  a.mu = IntPartition({2});
  a.irrep = repst::trivial_centralizer_irrep(CentralizerDescriptor::from_cycle_type(a.mu));
  for (auto _ : state) {
    benchmark::DoNotOptimize(repst::brute_induction_product(a, a));
  }
}
BENCHMARK(BM_BruteInductionProduct);

}  // namespace

BENCHMARK_MAIN();
