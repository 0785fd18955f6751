#pragma once

#include <vector>

#include "endosign/roots/weyl.hpp"

namespace endosign {

/// dim_Q ker(action - 1).
std::size_t split_rank(const IntMatrix& action);

/// (-1)^{split_rank(theta) - split_rank(omega theta)}.
int eps_relative_rank(const RootDatum& g, const BasedAutomorphism& theta, const WeylElement& omega);

/// det(theta^{-1}) det((omega theta)^{-1})^{-1}, computed from the two
/// unramified determinants and not from det(omega).
int eps_L_unramified(const BasedAutomorphism& theta, const WeylElement& omega);

enum class OrbitKind { Symmetric, Asymmetric, Mixed };

const char* orbit_kind_name(OrbitKind kind);

struct RootOrbit {
  /// Root indices in order of first appearance along the orbit.
  std::vector<std::size_t> members;
  OrbitKind kind = OrbitKind::Asymmetric;
};

struct OrbitReport {
  std::vector<RootOrbit> orbits;
  std::size_t n_symmetric = 0;
  /// Every orbit is Symmetric or Asymmetric.
  bool dichotomy_holds = true;
};

/// Orbits of <a> on R. Throws InputError when a does not permute R.
OrbitReport classify_orbits(const RootDatum& g, const IntMatrix& a);

struct DeterminantParity {
  int det_omega = 1;
  int minus_one_to_n = 1;
  std::size_t n_symmetric = 0;
  bool equal() const { return det_omega == minus_one_to_n; }
};

DeterminantParity det_equals_symmetric_parity(const RootDatum& g, const BasedAutomorphism& theta,
                                              const WeylElement& omega);

struct OrbitIntersection {
  std::size_t orbit_index = 0;
  std::size_t count = 0;  // |S' n O|
};

/// S' = {alpha > 0 : omega theta alpha < 0}.
struct ParityClaims {
  std::size_t inversions = 0;          // |S|, S the inversion set of omega
  std::size_t s_prime = 0;             // |S'|
  std::size_t s_prime_symmetric = 0;   // |S' n union of symmetric orbits|
  std::vector<OrbitIntersection> symmetric_intersections;
  bool same_size() const { return inversions == s_prime; }
  bool claim1() const { return s_prime % 2 == s_prime_symmetric % 2; }
  bool claim2() const;
  bool all_hold() const { return same_size() && claim1() && claim2(); }
};

ParityClaims parity_claims(const RootDatum& g, const BasedAutomorphism& theta, const WeylElement& omega);

struct SignReport {
  int eps_relative_rank = 1;
  int det_omega = 1;
  int eps_L = 1;
  int minus_one_to_n = 1;
  std::size_t n_symmetric = 0;
  bool all_equal = false;
};

/// Throws InputError when omega theta has no finite order.
SignReport three_signs(const RootDatum& g, const BasedAutomorphism& theta, const WeylElement& omega);

}  // namespace endosign
