#include "endosign/endoscopy/endoscopy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "endosign/lattice/smith.hpp"

namespace endosign {

namespace {

Rational fractional_part(const Rational& r) {
  Integer floor;
  mpz_fdiv_q(floor.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return r - Rational(floor);
}

IntMatrix rows_matrix(const std::vector<IntVector>& rows, std::size_t width) {
  IntMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  return m;
}

std::size_t fixed_central_dimension(const std::vector<IntVector>& coroots, const IntMatrix& action) {
  const std::size_t n = action.rows();
  const IntMatrix stacked = rows_matrix(coroots, n).vstack(action - IntMatrix::identity(n));
  return rational_kernel_dimension(stacked);
}

RootDatum subsystem_datum(const RootDatum& g, const std::vector<std::size_t>& members) {
  std::set<IntVector> positive;
  for (std::size_t i : members)
    if (g.is_positive(i)) positive.insert(g.root(i));
  std::vector<IntVector> simple_roots, simple_coroots;
  for (std::size_t i : members) {
    if (!g.is_positive(i)) continue;
    bool decomposable = false;
    for (const auto& b : positive) {
      if (b == g.root(i)) continue;
      if (positive.count(g.root(i) - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      simple_roots.push_back(g.root(i));
      simple_coroots.push_back(g.coroot(i));
    }
  }
  RootDatum h = RootDatum::from_simple(g.rank(), simple_roots, simple_coroots, "H");
  if (h.num_roots() != members.size()) {
    throw std::logic_error("endoscopic roots are not generated by their indecomposable positive members");
  }
  return h;
}

}  // namespace

TorsionDualElement::TorsionDualElement(const RatVector& q) : q_(q) {
  for (auto& x : q_) {
    x = fractional_part(x);
    mpz_lcm(order_.get_mpz_t(), order_.get_mpz_t(), x.get_den_mpz_t());
  }
}

bool is_reflection_closed(const RootDatum& g, const std::vector<std::size_t>& indices) {
  const std::set<std::size_t> members(indices.begin(), indices.end());
  for (std::size_t i : indices) {
    for (std::size_t j : indices) {
      const IntVector image = g.root(j) - scale(dot(g.root(j), g.coroot(i)), g.root(i));
      const auto k = g.index_of_root(image);
      if (!k || !members.count(*k)) return false;
    }
  }
  return true;
}

EndoscopicDatum endoscopic_subsystem(const RootDatum& g, const TorsionDualElement& q) {
  std::vector<int> identity(g.semisimple_rank());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i + 1);
  const WeylElement one{IntMatrix::identity(g.rank()), {}};
  return endoscopic_subsystem(g, q, one, based_automorphism_from_permutation(g, identity));
}

EndoscopicDatum endoscopic_subsystem(const RootDatum& g, const TorsionDualElement& q, const WeylElement& omega,
                                     const BasedAutomorphism& theta) {
  if (q.rank() != g.rank()) {
    throw InputError("q has " + std::to_string(q.rank()) + " coordinates, datum rank is " + std::to_string(g.rank()));
  }
  EndoscopicDatum d{g, q, omega, theta, {}, {}};
  for (std::size_t i = 0; i < g.num_roots(); ++i) {
    if (dot(g.coroot(i), q.q()).get_den() == 1) d.h_roots.push_back(i);
  }
  if (!is_reflection_closed(g, d.h_roots)) throw std::logic_error("endoscopic roots are not reflection-closed");
  d.h_datum = subsystem_datum(g, d.h_roots);
  return d;
}

GammaFixedness gamma_fixedness(const EndoscopicDatum& datum) {
  const IntMatrix a = datum.action();
  GammaFixedness out;
  const RatVector& q = datum.q.q();
  RatVector moved(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < q.size(); ++j) s += Rational(a(i, j)) * q[j];
    moved[i] = s - q[i];
  }
  out.fixes_q = is_integral(moved);
  const auto perm = datum.parent.coroot_permutation(a);
  if (perm) {
    const std::set<std::size_t> members(datum.h_roots.begin(), datum.h_roots.end());
    out.stabilizes_h_roots = std::all_of(datum.h_roots.begin(), datum.h_roots.end(),
                                         [&](std::size_t i) { return members.count((*perm)[i]) > 0; });
  }
  return out;
}

bool validate_gamma_fixed(const EndoscopicDatum& datum) { return gamma_fixedness(datum).ok(); }

EllipticityReport ellipticity(const EndoscopicDatum& datum) {
  std::vector<IntVector> h_coroots;
  for (std::size_t i : datum.h_roots) h_coroots.push_back(datum.parent.coroot(i));
  EllipticityReport r;
  r.h_fixed_central_dim = fixed_central_dimension(h_coroots, datum.action());
  r.g_fixed_central_dim = fixed_central_dimension(datum.parent.coroots(), datum.theta.matrix);
  return r;
}

bool is_elliptic(const EndoscopicDatum& datum) { return ellipticity(datum).elliptic(); }

}  // namespace endosign
