#include <benchmark/benchmark.h>

#include "endosign/cohomology/lattice_catalog.hpp"
#include "endosign/cohomology/pairings.hpp"

namespace {

using namespace endosign;

void BM_ThreePairingsOnCatalog(benchmark::State& state) {
  const auto lattices = signed_permutation_lattices(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    for (const auto& l : lattices) {
      const TateGroup left = h1_lattice(l);
      const TateGroup right = tate_h_minus1(l.dual());
      for (const auto& x : left.elements()) {
        const IntVector c = left.representative(x);
        for (const auto& y : right.elements()) {
          const IntVector mu = right.representative(y);
          benchmark::DoNotOptimize(pairing_standard(l, c, mu));
          benchmark::DoNotOptimize(pairing_cup(l, c, mu));
          benchmark::DoNotOptimize(pairing_cft(l, c, mu));
        }
      }
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * lattices.size()));
}
BENCHMARK(BM_ThreePairingsOnCatalog)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Perfectness(benchmark::State& state) {
  // Coxeter element of A2 acting on Z^2, order 3.
  const GammaLattice l(IntMatrix::from_rows({{0, -1}, {1, -1}}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_perfectness(l));
}
BENCHMARK(BM_Perfectness);

}  // namespace
