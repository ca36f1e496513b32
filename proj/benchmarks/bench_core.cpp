// Copyright 2026 The sunitary Authors
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

#include <cmath>
#include <cstdlib>

#include "sunitary/sunitary.hpp"

namespace {

using sunitary::CMatrix;
using sunitary::Index;

CMatrix random_matrix(Index n, unsigned seed) {
  std::srand(seed);
  return CMatrix::Random(n, n);
}

void BM_ComputeBasis(benchmark::State& state) {
  const CMatrix S = random_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sunitary::compute_basis(S));
}
BENCHMARK(BM_ComputeBasis)->DenseRange(2, 6);

void BM_MatrixExponential(benchmark::State& state) {
  const CMatrix X = random_matrix(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sunitary::matrix_exponential(X));
}
BENCHMARK(BM_MatrixExponential)->DenseRange(2, 8, 2);

void BM_JacobiSweep(benchmark::State& state) {
  const auto psi = sunitary::MapRep::left_multiplication(random_matrix(state.range(0), 3));
  for (auto _ : state) benchmark::DoNotOptimize(sunitary::jacobi_sweep(psi));
}
BENCHMARK(BM_JacobiSweep)->DenseRange(2, 3);

void BM_KrausFromChoi(benchmark::State& state) {
  const Index n = state.range(0);
  const sunitary::KrausSet K{{random_matrix(n, 4), random_matrix(n, 5), random_matrix(n, 6)}};
  const sunitary::ChoiMatrix J = sunitary::choi(K.as_map());
  for (auto _ : state) benchmark::DoNotOptimize(sunitary::kraus_from_choi(J));
}
BENCHMARK(BM_KrausFromChoi)->DenseRange(2, 5);

void BM_DetectConjugation(benchmark::State& state) {
  const Index n = state.range(0);
  const CMatrix V = random_matrix(n, 7) + 2.0 * sunitary::identity(n);
  const auto phi = sunitary::MapRep::single_pair(V, V.inverse().adjoint());
  const auto L = sunitary::MapRep::from_superoperator(phi.superoperator());
  for (auto _ : state) benchmark::DoNotOptimize(sunitary::detect_conjugation(L));
}
BENCHMARK(BM_DetectConjugation)->DenseRange(2, 5);

void BM_UnitaryIntertwiner(benchmark::State& state) {
  const Index n = state.range(0);
  const CMatrix A = random_matrix(n, 8), B = random_matrix(n, 9);
  const sunitary::KrausSet first{{A, B}};
  const sunitary::KrausSet second{{(A + B) / std::sqrt(2.0), (A - B) / std::sqrt(2.0)}};
  for (auto _ : state) benchmark::DoNotOptimize(sunitary::unitary_intertwiner(first, second));
}
BENCHMARK(BM_UnitaryIntertwiner)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
