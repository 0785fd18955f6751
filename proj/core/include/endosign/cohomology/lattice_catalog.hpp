#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "endosign/cohomology/gamma_lattice.hpp"

namespace endosign {

/// Every signed permutation matrix sigma of rank 1..max_rank paired with
/// every declared order m in 1..max_order such that sigma^m = 1.
std::vector<GammaLattice> signed_permutation_lattices(std::size_t max_rank, unsigned max_order);

/// Product of `steps` random elementary row operations with multipliers
/// in [-2, 2]; determinant is always 1.
IntMatrix random_unimodular(std::size_t rank, std::mt19937_64& rng, std::size_t steps = 0);

/// (P sigma P^{-1}, m).
GammaLattice conjugate(const GammaLattice& lattice, const IntMatrix& p);

/// A random Gamma-equivariant map source -> target (both of order m), built
/// as the sum over Gamma of target.sigma^i B source.sigma^{-i}.
IntMatrix random_equivariant_map(const GammaLattice& source, const GammaLattice& target, std::mt19937_64& rng);

}  // namespace endosign
