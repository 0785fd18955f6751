#include "endosign/cohomology/lattice_catalog.hpp"

#include <algorithm>
#include <numeric>

namespace endosign {

std::vector<GammaLattice> signed_permutation_lattices(std::size_t max_rank, unsigned max_order) {
  std::vector<GammaLattice> out;
  for (std::size_t n = 1; n <= max_rank; ++n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (unsigned signs = 0; signs < (1u << n); ++signs) {
        IntMatrix s(n, n);
        for (std::size_t j = 0; j < n; ++j) s(perm[j], j) = (signs >> j) & 1u ? -1 : 1;
        const unsigned order = multiplicative_order(s);
        for (unsigned m = order; m <= max_order; m += order) out.emplace_back(s, m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

IntMatrix random_unimodular(std::size_t rank, std::mt19937_64& rng, std::size_t steps) {
  IntMatrix p = IntMatrix::identity(rank);
  if (rank < 2) return p;
  if (steps == 0) steps = 3 * rank;
  std::uniform_int_distribution<std::size_t> index(0, rank - 1);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = index(rng);
    std::size_t j = index(rng);
    if (i == j) j = (j + 1) % rank;
    const long k = mult(rng);
    for (std::size_t c = 0; c < rank; ++c) p(i, c) += k * p(j, c);
  }
  return p;
}

GammaLattice conjugate(const GammaLattice& lattice, const IntMatrix& p) {
  return GammaLattice(p * lattice.sigma() * p.unimodular_inverse(), lattice.order());
}

IntMatrix random_equivariant_map(const GammaLattice& source, const GammaLattice& target, std::mt19937_64& rng) {
  if (source.order() != target.order()) throw InputError("equivariant maps need a common group order");
  std::uniform_int_distribution<long> entry(-3, 3);
  IntMatrix b(target.rank(), source.rank());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = entry(rng);
  IntMatrix f(target.rank(), source.rank());
  for (unsigned k = 0; k < source.order(); ++k) {
    f = f + target.sigma_power(k) * b * source.sigma_power(-static_cast<long>(k));
  }
  return f;
}

}  // namespace endosign
