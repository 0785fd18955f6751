#pragma once

#include <vector>

#include "endosign/lattice/int_matrix.hpp"

namespace endosign {

/// A lattice Z^n with an action of the cyclic group Gamma = <sigma> of
/// declared order m. sigma^m = 1 is checked at construction; m need not be
/// the exact order of sigma (Gamma may act through a quotient).
class GammaLattice {
 public:
  GammaLattice(IntMatrix sigma, unsigned m);

  std::size_t rank() const { return sigma_.rows(); }
  unsigned order() const { return m_; }
  const IntMatrix& sigma() const { return sigma_; }
  /// sigma^k for 0 <= k < m (k is reduced mod m).
  const IntMatrix& sigma_power(long k) const;

  /// sigma - 1
  IntMatrix augmentation() const;
  /// N = sum_{i<m} sigma^i
  IntMatrix norm_operator() const;
  bool in_norm_kernel(const IntVector& v) const;

  /// Hom(L, Z) with the contragredient action (sigma^{-1})^T.
  GammaLattice dual() const;

 private:
  IntMatrix sigma_;
  unsigned m_;
  std::vector<IntMatrix> powers_;
};

inline IntMatrix norm_operator(const GammaLattice& lattice) { return lattice.norm_operator(); }

/// A 1-cocycle c : Gamma -> L stored as values[k] = c(sigma^k).
struct CocycleTable {
  std::vector<IntVector> values;
};

enum class CocycleAnchor {
  Sigma,     ///< the given vector is c(sigma)
  Frobenius  ///< the given vector is c(Fi) with Fi = sigma^{-1}
};

/// Expands c from its value at sigma (or at Fi) via c(sigma^k) = sum_{i<k} sigma^i c(sigma).
/// For the Fi anchor, c(sigma) = -sigma * value. Throws InputError unless
/// N(value) = 0.
CocycleTable cocycle_from_value(const GammaLattice& lattice, CocycleAnchor anchor, const IntVector& value);

/// c(st) = c(s) + s c(t) for all s, t in Gamma.
bool is_cocycle(const GammaLattice& lattice, const CocycleTable& c);

}  // namespace endosign
