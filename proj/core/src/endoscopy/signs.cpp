#include "endosign/endoscopy/signs.hpp"

#include <algorithm>
#include <set>

namespace endosign {

namespace {

IntMatrix twisted_action(const BasedAutomorphism& theta, const WeylElement& omega) {
  return omega.matrix * theta.matrix;
}

}  // namespace

std::size_t split_rank(const IntMatrix& action) { return fixed_rank(action); }

int eps_relative_rank(const RootDatum& g, const BasedAutomorphism& theta, const WeylElement& omega) {
  if (theta.matrix.rows() != g.rank()) throw InputError("theta does not act on the character lattice of G");
  const long r_g = static_cast<long>(split_rank(theta.matrix));
  const long r_h = static_cast<long>(split_rank(twisted_action(theta, omega)));
  return (r_g - r_h) % 2 == 0 ? 1 : -1;
}

int eps_L_unramified(const BasedAutomorphism& theta, const WeylElement& omega) {
  const int det_g = determinant_sign(theta.matrix.unimodular_inverse());
  const int det_h = determinant_sign(twisted_action(theta, omega).unimodular_inverse());
  return det_g * det_h;  // det_h^{-1} = det_h for a sign
}

const char* orbit_kind_name(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::Symmetric:
      return "symmetric";
    case OrbitKind::Asymmetric:
      return "asymmetric";
    case OrbitKind::Mixed:
      break;
  }
  return "mixed";
}

OrbitReport classify_orbits(const RootDatum& g, const IntMatrix& a) {
  const auto perm = g.root_permutation(a);
  if (!perm) throw InputError("the action " + a.to_string() + " does not permute the roots");
  OrbitReport report;
  std::vector<bool> seen(g.num_roots(), false);
  for (std::size_t start = 0; start < g.num_roots(); ++start) {
    if (seen[start]) continue;
    RootOrbit orbit;
    for (std::size_t i = start; !seen[i]; i = (*perm)[i]) {
      seen[i] = true;
      orbit.members.push_back(i);
    }
    const std::set<std::size_t> members(orbit.members.begin(), orbit.members.end());
    const auto negated = std::count_if(orbit.members.begin(), orbit.members.end(),
                                       [&](std::size_t i) { return members.count(g.negative_of(i)) > 0; });
    if (negated == static_cast<long>(orbit.members.size())) {
      orbit.kind = OrbitKind::Symmetric;
      ++report.n_symmetric;
    } else if (negated == 0) {
      orbit.kind = OrbitKind::Asymmetric;
    } else {
      orbit.kind = OrbitKind::Mixed;
      report.dichotomy_holds = false;
    }
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

DeterminantParity det_equals_symmetric_parity(const RootDatum& g, const BasedAutomorphism& theta,
                                              const WeylElement& omega) {
  DeterminantParity out;
  out.det_omega = determinant_sign(omega.matrix);
  out.n_symmetric = classify_orbits(g, twisted_action(theta, omega)).n_symmetric;
  out.minus_one_to_n = out.n_symmetric % 2 == 0 ? 1 : -1;
  return out;
}

bool ParityClaims::claim2() const {
  return std::all_of(symmetric_intersections.begin(), symmetric_intersections.end(),
                     [](const OrbitIntersection& o) { return o.count % 2 == 1; });
}

ParityClaims parity_claims(const RootDatum& g, const BasedAutomorphism& theta, const WeylElement& omega) {
  const IntMatrix a = twisted_action(theta, omega);
  const auto s = inversion_set(g, omega.matrix);
  const auto s_prime = inversion_set(g, a);
  const std::set<std::size_t> sp(s_prime.begin(), s_prime.end());
  const OrbitReport orbits = classify_orbits(g, a);

  ParityClaims out;
  out.inversions = s.size();
  out.s_prime = s_prime.size();
  for (std::size_t k = 0; k < orbits.orbits.size(); ++k) {
    const auto& o = orbits.orbits[k];
    if (o.kind != OrbitKind::Symmetric) continue;
    const auto hits = static_cast<std::size_t>(
        std::count_if(o.members.begin(), o.members.end(), [&](std::size_t i) { return sp.count(i) > 0; }));
    out.symmetric_intersections.push_back({k, hits});
    out.s_prime_symmetric += hits;
  }
  return out;
}

SignReport three_signs(const RootDatum& g, const BasedAutomorphism& theta, const WeylElement& omega) {
  make_twist(g, omega, theta);
  SignReport r;
  r.eps_relative_rank = eps_relative_rank(g, theta, omega);
  const DeterminantParity dp = det_equals_symmetric_parity(g, theta, omega);
  r.det_omega = dp.det_omega;
  r.minus_one_to_n = dp.minus_one_to_n;
  r.n_symmetric = dp.n_symmetric;
  r.eps_L = eps_L_unramified(theta, omega);
  r.all_equal = r.eps_relative_rank == r.det_omega && r.det_omega == r.eps_L && r.eps_L == r.minus_one_to_n;
  return r;
}

}  // namespace endosign
