/*
   Copyright 2026 The qlift Authors

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

#include <map>
#include <memory>
#include <string>

#include <benchmark/benchmark.h>

#include "qlift/deform.hpp"
#include "qlift/io.hpp"

namespace {

using namespace qlift;

const Deformation& instance(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Deformation>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Deformation>(load_presentation(std::string(QLIFT_BENCH_DATA) + "/" + name + ".json"));
  return *slot;
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = root_of_unity(n, 1) + CyclotomicScalar::rational(n, Rational(3, 7));
  const auto b = root_of_unity(n, n / 2 - 1) - CyclotomicScalar::rational(n, Rational(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(8)->Arg(12)->Arg(18)->Arg(32);

void BM_Convolve(benchmark::State& state, const char* name) {
  const auto& D = instance(name);
  const auto g1 = build_gamma_i(D, 0), g12 = build_gamma_ij(D, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(g12, g1));
}
BENCHMARK_CAPTURE(BM_Convolve, c8, "c8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Convolve, example_a, "example_a")->Unit(benchmark::kMillisecond);

void BM_BuildAlpha(benchmark::State& state, const char* name) {
  const auto& D = instance(name);
  for (auto _ : state) benchmark::DoNotOptimize(build_alpha(D, false));
}
BENCHMARK_CAPTURE(BM_BuildAlpha, c8, "c8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildAlpha, theta3_full, "theta3_full")->Unit(benchmark::kMillisecond);

void BM_Twist(benchmark::State& state, const char* name) {
  const auto& D = instance(name);
  const auto alpha = build_alpha(D, false).alpha;
  for (auto _ : state) benchmark::DoNotOptimize(TwistedAlgebra(D, alpha));
}
BENCHMARK_CAPTURE(BM_Twist, c8, "c8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Twist, example_a, "example_a")->Unit(benchmark::kMillisecond);

void BM_CocycleCheck(benchmark::State& state, const char* name) {
  const auto& D = instance(name);
  const auto alpha = build_alpha(D, false).alpha;
  const auto& m = D.radford().multiplication();
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_check(alpha, m, {false, 1}));
}
BENCHMARK_CAPTURE(BM_CocycleCheck, c8, "c8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CocycleCheck, theta3_full, "theta3_full")->Unit(benchmark::kMillisecond);

void BM_LambdaPiM(benchmark::State& state, const char* name) {
  const auto& D = instance(name);
  const auto T = twist(D, build_alpha(D, false).alpha, {false, false, false, false});
  for (auto _ : state) benchmark::DoNotOptimize(lambda_pi_m(D, T));
}
BENCHMARK_CAPTURE(BM_LambdaPiM, c8, "c8")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
