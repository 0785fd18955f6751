#pragma once

#include <string>
#include <vector>

#include "endosign/cohomology/gamma_lattice.hpp"
#include "endosign/lattice/abelian_group.hpp"
#include "endosign/lattice/smith.hpp"

namespace endosign {

/// S / R for a saturated sublattice S of Z^n (given by a column basis) and
/// a subgroup R of S (given by generating columns).
class Subquotient {
 public:
  Subquotient(IntMatrix sub_basis, const IntMatrix& relations);

  const FiniteAbelianGroup& group() const { return cokernel_.group(); }
  const IntMatrix& sub_basis() const { return basis_; }
  bool contains(const IntVector& v) const;
  /// Throws InputError when v is not in S.
  AbelianElement project(const IntVector& v) const;
  IntVector lift(const AbelianElement& e) const;

 private:
  std::optional<IntVector> coordinates(const IntVector& v) const;

  IntMatrix basis_;
  SmithDecomposition basis_snf_;
  Cokernel cokernel_;
};

/// ker N / (sigma - 1)L, labelled by the role it plays.
class TateGroup {
 public:
  TateGroup(const GammaLattice& lattice, std::string provenance);

  const GammaLattice& lattice() const { return lattice_; }
  const std::string& provenance() const { return provenance_; }
  const FiniteAbelianGroup& group() const { return quotient_.group(); }
  /// Basis of ker N as columns.
  const IntMatrix& cycles() const { return quotient_.sub_basis(); }

  bool is_cycle(const IntVector& v) const { return quotient_.contains(v); }
  AbelianElement project(const IntVector& v) const { return quotient_.project(v); }
  IntVector representative(const AbelianElement& e) const { return quotient_.lift(e); }
  std::vector<AbelianElement> elements() const { return enumerate_torsion(group()); }

 private:
  GammaLattice lattice_;
  std::string provenance_;
  Subquotient quotient_;
};

/// Class in a Tate group together with the lattice vector representing it.
struct CohomologyClass {
  AbelianElement element;
  IntVector representative;

  bool operator==(const CohomologyClass& other) const { return element == other.element; }
};

/// H^-1_T(Gamma, L) = ker N / (sigma - 1)L.
TateGroup tate_h_minus1(const GammaLattice& lattice);
/// H^1(Gamma, T) for L = X_*(T) over an unramified splitting field, modelled
/// as ker N / (sigma - 1)L (the unit part has trivial cohomology).
TateGroup h1_torus_model(const GammaLattice& lattice);
/// H^1(Gamma, L) = Z^1 / B^1, identified with ker N / (sigma - 1)L through
/// the value of a cocycle at sigma.
TateGroup h1_lattice(const GammaLattice& lattice);

/// H^0_T(Gamma, L) = L^Gamma / N L.
Subquotient tate_h0(const GammaLattice& lattice);

/// L / (sigma - 1)L with its torsion part.
class Coinvariants {
 public:
  /// Checks that the torsion part coincides with H^-1_T; throws
  /// std::logic_error if it does not.
  explicit Coinvariants(const GammaLattice& lattice);

  const FiniteAbelianGroup& group() const { return cokernel_.group(); }
  FiniteAbelianGroup torsion() const { return cokernel_.group().torsion_subgroup(); }

  AbelianElement project(const IntVector& v) const { return cokernel_.project(v); }
  bool is_torsion_class(const IntVector& v) const { return project(v).is_torsion(); }
  /// Image in the torsion subgroup; throws InputError for non-torsion classes.
  AbelianElement project_torsion(const IntVector& v) const;
  IntVector lift_torsion(const AbelianElement& e) const;

 private:
  Cokernel cokernel_;
};

Coinvariants coinvariants(const GammaLattice& lattice);

/// [lambda] -> class of the cocycle z with z(sigma) = lambda. Throws
/// InputError when lambda is not torsion in the coinvariants (N lambda != 0).
CohomologyClass tn_map(const TateGroup& h1, const IntVector& lambda);
/// [lambda] -> class of the cocycle z with z(Fi) = lambda, Fi = sigma^{-1}.
CohomologyClass dr_map(const TateGroup& h1, const IntVector& lambda);

}  // namespace endosign
