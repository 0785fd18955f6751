#include <benchmark/benchmark.h>

#include <random>

#include "endosign/lattice/smith.hpp"

namespace {

endosign::IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-20, 20);
  endosign::IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  return a;
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(endosign::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 8, 2);

void BM_KernelBasis(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto a = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (std::size_t j = 0; j < a.cols(); ++j) a(a.rows() - 1, j) = a(0, j) + a(1, j);
  for (auto _ : state) benchmark::DoNotOptimize(endosign::kernel_basis(a));
}
BENCHMARK(BM_KernelBasis)->Arg(4)->Arg(8);

}  // namespace
