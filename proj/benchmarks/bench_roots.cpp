#include <benchmark/benchmark.h>

#include "endosign/endoscopy/signs.hpp"
#include "endosign/roots/catalog.hpp"

namespace {

const char* const kSystems[] = {"A2:sc", "B3:sc", "G2", "A4:sc", "D4:sc"};

void BM_EnumerateWeylGroup(benchmark::State& state) {
  const auto g = endosign::build_named(kSystems[state.range(0)]);
  state.SetLabel(kSystems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(endosign::enumerate_weyl_group(g));
}
BENCHMARK(BM_EnumerateWeylGroup)->DenseRange(0, 4);

// All four signs for every omega in W, identity theta.
void BM_ThreeSignsOverW(benchmark::State& state) {
  const auto g = endosign::build_named(kSystems[state.range(0)]);
  const auto theta = endosign::enumerate_based_automorphisms(g).front();
  const auto weyl = endosign::enumerate_weyl_group(g);
  state.SetLabel(kSystems[state.range(0)]);
  for (auto _ : state) {
    for (const auto& w : weyl) benchmark::DoNotOptimize(endosign::three_signs(g, theta, w));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * weyl.size()));
}
BENCHMARK(BM_ThreeSignsOverW)->DenseRange(0, 2);

}  // namespace
