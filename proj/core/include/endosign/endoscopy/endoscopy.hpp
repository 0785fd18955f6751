#pragma once

#include <optional>
#include <vector>

#include "endosign/roots/weyl.hpp"

namespace endosign {

/// s = exp(2 pi i q) in the dual torus, with q in X^*(T_0) (x) Q taken
/// modulo X^*(T_0). Coordinates are reduced to [0, 1).
class TorsionDualElement {
 public:
  TorsionDualElement() = default;
  explicit TorsionDualElement(const RatVector& q);

  const RatVector& q() const { return q_; }
  std::size_t rank() const { return q_.size(); }
  /// Smallest k >= 1 with k q integral.
  const Integer& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool operator==(const TorsionDualElement& other) const { return q_ == other.q_; }

 private:
  RatVector q_;
  Integer order_{1};
};

/// The root part of an endoscopic datum: the coroots alpha^v of G with
/// <q, alpha^v> integral are the roots of H^.
struct EndoscopicDatum {
  RootDatum parent;
  TorsionDualElement q;
  WeylElement omega;
  BasedAutomorphism theta;
  /// Indices into parent.coroots().
  std::vector<std::size_t> h_roots;
  /// H as a root datum on the same lattices, with base the indecomposable
  /// members of h_roots that are positive for G.
  RootDatum h_datum;

  /// omega * theta acting on X^*(T_0).
  IntMatrix action() const { return omega.matrix * theta.matrix; }
};

/// h_roots of the given q; omega and theta default to the identity.
/// Throws std::logic_error if the selected roots are not reflection-closed.
EndoscopicDatum endoscopic_subsystem(const RootDatum& g, const TorsionDualElement& q);
EndoscopicDatum endoscopic_subsystem(const RootDatum& g, const TorsionDualElement& q, const WeylElement& omega,
                                     const BasedAutomorphism& theta);

/// True when the set of roots at `indices` is closed under its own reflections.
bool is_reflection_closed(const RootDatum& g, const std::vector<std::size_t>& indices);

/// Both parts of Galois-fixedness of s: omega theta q = q mod X^*, and the
/// dual action of omega theta permutes h_roots.
struct GammaFixedness {
  bool fixes_q = false;
  bool stabilizes_h_roots = false;
  bool ok() const { return fixes_q && stabilizes_h_roots; }
};

GammaFixedness gamma_fixedness(const EndoscopicDatum& datum);
bool validate_gamma_fixed(const EndoscopicDatum& datum);

/// Dimensions of the two Galois-fixed central subspaces of X^* (x) Q:
/// H side {v : <v, b^v> = 0 on h_roots, omega theta v = v},
/// G side {v : <v, a^v> = 0 on all coroots, theta v = v}.
struct EllipticityReport {
  std::size_t h_fixed_central_dim = 0;
  std::size_t g_fixed_central_dim = 0;
  bool elliptic() const { return h_fixed_central_dim == g_fixed_central_dim; }
};

EllipticityReport ellipticity(const EndoscopicDatum& datum);
bool is_elliptic(const EndoscopicDatum& datum);

}  // namespace endosign
