#pragma once

#include <vector>

#include "endosign/cohomology/tate.hpp"
#include "endosign/lattice/qmodz.hpp"

namespace endosign {

/// Integer 2-cochain Gamma x Gamma -> Z, values[a][b] at (sigma^a, sigma^b).
/// This is the valuation part of an E^x-valued cochain for E/F unramified
/// of degree m; Gamma acts trivially on it.
struct TwoCocycleZ {
  unsigned m = 1;
  std::vector<std::vector<Integer>> values;

  /// delta(f)(s, t) = f(t) - f(st) + f(s)
  static TwoCocycleZ coboundary(const std::vector<Integer>& f);
  /// (sigma^a, sigma^b) -> 1 if a + b >= m else 0: valuation of the
  /// fundamental class cocycle (1 or pi).
  static TwoCocycleZ fundamental_class(unsigned m);

  bool is_cocycle() const;
};

/// inv(b) = (1/m) * sum_k b(sigma, sigma^k) mod Z. Throws InputError when
/// b violates the cocycle identity.
QmodZ invariant_map(const TwoCocycleZ& b);

/// Pairings H^1(Gamma, L) x H^-1_T(Gamma, L*) -> Q/Z, where L is the given
/// lattice and L* = lattice.dual(). `c_sigma` is the value at sigma of a
/// cocycle for L and `mu` a norm-kernel vector of L*. All three throw
/// InputError when an argument is not killed by the norm.
///
/// Standard pairing: solve (sigma - 1) z = c(sigma) over Q, return <mu, z>.
QmodZ pairing_standard(const GammaLattice& lattice, const IntVector& c_sigma, const IntVector& mu);
/// Cup product into H^0_T(Gamma, Z) = Z/m, scaled by 1/m:
/// (1/m) * sum_k <sigma^k mu, c(sigma^k)>.
QmodZ pairing_cup(const GammaLattice& lattice, const IntVector& c_sigma, const IntVector& mu);
/// Cup product of a in H^1(Gamma, L) with the torus class z(sigma) = h
/// (h in L* = X_*(T), valuation model), followed by the invariant map.
QmodZ pairing_cft(const GammaLattice& lattice, const IntVector& a_sigma, const IntVector& h);
/// The 2-cocycle (s, t) -> <a(s), s z(t)> used by pairing_cft.
TwoCocycleZ cft_cocycle(const GammaLattice& lattice, const IntVector& a_sigma, const IntVector& h);

/// Outcome of checking that a pairing A x B -> Q/Z is perfect.
struct PerfectnessReport {
  Integer order_left;
  Integer order_right;
  /// no nonzero element of A pairs trivially with every generator of B
  bool injective = false;
  /// [Phi | diag(e_j)] has only unit elementary divisors, where Phi sends
  /// A's generators to coordinates in the character group of B
  bool unit_elementary_divisors = false;
  bool perfect() const { return order_left == order_right && injective && unit_elementary_divisors; }
};

/// Perfectness of pairing_cup between H^1(Gamma, L) and H^-1_T(Gamma, L*).
PerfectnessReport check_perfectness(const GammaLattice& lattice);

}  // namespace endosign
