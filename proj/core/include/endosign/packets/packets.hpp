#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endosign/cohomology/tate.hpp"
#include "endosign/lattice/qmodz.hpp"
#include "endosign/roots/weyl.hpp"

namespace endosign {

/// Lattice data of an unramified parameter with Frobenius twist a = w theta.
///
/// Convention: a acts on X^*(T_0) by its matrix, and on X = X_*(T_0) by the
/// transpose-inverse, so that <a x, a^{-T} y> = <x, y>. Dual-torus points
/// t = exp(2 pi i r) are rational vectors r in X^* (x) Q.
class ParameterCombinatorics {
 public:
  ParameterCombinatorics(RootDatum g, FrobeniusTwist twist);

  const RootDatum& datum() const { return g_; }
  const FrobeniusTwist& twist() const { return twist_; }
  /// X^*(T_0) with sigma = a.
  const GammaLattice& xstar() const { return xstar_; }
  /// X_*(T_0) with sigma = a^{-T}.
  const GammaLattice& x() const { return x_; }
  /// X_Gamma.
  const Coinvariants& x_coinvariants() const { return x_coinv_; }
  /// Xbar_Gamma = X / (Z R^v + (sigma - 1) X). Xbar may have torsion, so
  /// this is a cokernel rather than a Gamma-lattice quotient.
  const Cokernel& xbar_coinvariants() const { return xbar_coinv_; }
  FiniteAbelianGroup xbar_torsion() const { return xbar_coinv_.group().torsion_subgroup(); }

 private:
  RootDatum g_;
  FrobeniusTwist twist_;
  GammaLattice xstar_;
  GammaLattice x_;
  Coinvariants x_coinv_;
  Cokernel xbar_coinv_;
};

/// lambda in X_w, i.e. its class in X_Gamma is torsion (N lambda = 0).
bool membership_Xw(const ParameterCombinatorics& pc, const IntVector& lambda);

struct TrselpReport {
  bool ok = false;
  /// Q-basis of the a-fixed part of X_* (x) Q.
  std::vector<IntVector> fixed_basis;
  /// First fixed vector pairing nontrivially with a root, with that root.
  std::optional<std::pair<IntVector, IntVector>> witness;
};

/// T_0^w / Z anisotropic: every fixed vector of X_* (x) Q is orthogonal to R.
TrselpReport trselp_validate(const ParameterCombinatorics& pc);

/// pi_0 of the a-fixed points of the dual torus, as ker N / (a - 1) X^*.
struct ComponentGroup {
  TateGroup presentation;
  Integer coinvariant_torsion_order;
  const FiniteAbelianGroup& group() const { return presentation.group(); }
  bool matches_coinvariants() const { return group().order() == coinvariant_torsion_order; }
};

ComponentGroup component_group(const ParameterCombinatorics& pc);

struct DualTorusPoint {
  RatVector r;
};

/// Throws InputError unless (a - 1) r is integral.
DualTorusPoint make_dual_torus_point(const ParameterCombinatorics& pc, const RatVector& r);
bool is_fixed_point(const ParameterCombinatorics& pc, const RatVector& r);
/// <r, b^v> integral for every coroot and (a - 1) r integral.
bool is_central_point(const ParameterCombinatorics& pc, const RatVector& r);

/// One representative per component of the a-fixed dual torus.
std::vector<DualTorusPoint> enumerate_fixed_points(const ParameterCombinatorics& pc);
/// One representative per component of the a-fixed center of the dual group.
std::vector<DualTorusPoint> enumerate_central_points(const ParameterCombinatorics& pc);
/// A point whose class (a - 1) r represents the given component-group element.
DualTorusPoint point_of_component(const ParameterCombinatorics& pc, const ComponentGroup& c,
                                  const AbelianElement& e);

/// rho_lambda(t) = <lambda, r> mod Z. Throws InputError when lambda is not
/// in X_w or r is not fixed.
QmodZ character_eval(const ParameterCombinatorics& pc, const IntVector& lambda, const DualTorusPoint& t);

/// Image of lambda in [Xbar_Gamma]_tor. Throws InputError when lambda is
/// not in X_w.
AbelianElement central_restriction(const ParameterCombinatorics& pc, const IntVector& lambda);

/// <u, r> for u in [Xbar_Gamma]_tor and a central point r, via any lift of u.
QmodZ central_pairing(const ParameterCombinatorics& pc, const AbelianElement& u, const DualTorusPoint& t);

/// Classes of [X_Gamma]_tor mapping to u.
std::vector<AbelianElement> packet_fiber(const ParameterCombinatorics& pc, const AbelianElement& u);

struct PacketFiber {
  AbelianElement u;
  std::vector<AbelianElement> members;
};

/// Every u in [Xbar_Gamma]_tor with its fiber, in enumeration order.
std::vector<PacketFiber> packet_fibers(const ParameterCombinatorics& pc);

enum class Normalization { DeBackerReeder, TateNakayama };

struct KottwitzCheck {
  /// Cup pairing of the t-class (a - 1) r in H^1(Gamma, X^*) with the image
  /// of lambda in H^1(Gamma, T) = H^-1_T(Gamma, X_*).
  QmodZ pairing;
  /// rho_lambda(t).
  QmodZ character;
  /// pairing = -character
  bool ok = false;
};

KottwitzCheck kottwitz_sign_check(const ParameterCombinatorics& pc, const IntVector& lambda, const DualTorusPoint& t,
                                  Normalization normalization = Normalization::DeBackerReeder);

}  // namespace endosign
